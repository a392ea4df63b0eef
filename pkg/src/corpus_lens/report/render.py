"""Write a ComparisonReport as JSON, CSV tables, Markdown and SVG charts.

Floats are written with ``repr`` everywhere, so CSV cells and JSON values
parse back to the same numbers.
"""

from __future__ import annotations

import csv
import json
import re
from pathlib import Path

from ..emotion import EMOTIONS
from ..errors import ValidationError
from .build import ComparisonReport
from .svg import grouped_bar_chart, line_chart

FORMATS = ("json", "csv", "md", "svg")


def _slug(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", label) or "corpus"


def to_json(report: ComparisonReport) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def read_report(path) -> ComparisonReport:
    with open(path, encoding="utf-8") as fh:
        return ComparisonReport.from_dict(json.load(fh))


def _num(v):
    return repr(v) if isinstance(v, float) else v


def csv_tables(report: ComparisonReport) -> dict[str, list[list]]:
    """Table name -> rows (header first)."""
    tables = {}
    tables["stats"] = [["corpus", "docs", "tokens", "vocab"]] + [
        [c, report.stats[c]["docs"], report.stats[c]["tokens"], report.stats[c]["vocab"]] for c in report.corpora
    ]
    tables["frequencies"] = [["corpus", "rank", "term", "proportion"]] + [
        [c, i + 1, t, f] for c in report.corpora for i, (t, f) in enumerate(report.frequency_tables[c])
    ]
    topics = [["corpus", "method", "topic_id", "rank", "term", "weight"]]
    coherence = [["corpus", "method", "topic_id", "umass_coherence"]]
    for c in report.corpora:
        for method, res in report.topics[c].items():
            for s, coh in zip(res.summaries, res.coherence):
                coherence.append([c, method, s.topic_id, coh])
                topics.extend([c, method, s.topic_id, i + 1, t, w] for i, (t, w) in enumerate(s.top_terms))
    tables["topics"] = topics
    tables["coherence"] = coherence
    em = report.emotions
    if em is not None:
        tables["emotions"] = [["corpus", *EMOTIONS, "matched_tokens", "total_tokens", "excluded_documents"]] + [
            [c, *em.corpus_profiles[c].scores, em.corpus_profiles[c].matched_tokens,
             em.corpus_profiles[c].total_tokens, em.corpus_profiles[c].excluded]
            for c in report.corpora
        ]
        tables["document_emotions"] = [["corpus", "doc_id", "defined", *EMOTIONS, "matched_tokens", "total_tokens"]] + [
            [c, d, p.defined, *p.scores, p.matched_tokens, p.total_tokens]
            for c in report.corpora
            for d, p in em.document_profiles[c]
        ]
        tables["emotion_words"] = [["corpus", "emotion", "rank", "word", "score"]] + [
            [c, e, i + 1, w, s]
            for c in report.corpora
            for e, ws in em.top_words[c].items()
            for i, (w, s) in enumerate(ws)
        ]
    return tables


def topic_table_md(summaries, labels=None) -> str:
    """Rank-by-topic grid: one column per topic, one row per rank."""
    if not summaries:
        return ""
    labels = labels or [s.label or "" for s in summaries]
    head = "| |" + "|".join(f" Topic {s.topic_id} " for s in summaries) + "|"
    lines = []
    if any(labels):
        lines.append("| |" + "|".join(f" {lab} " for lab in labels) + "|")
        lines.append("|---|" + "---|" * len(summaries))
        lines.append(head)
    else:
        lines.append(head)
        lines.append("|---|" + "---|" * len(summaries))
    depth = max(len(s.top_terms) for s in summaries)
    for r in range(depth):
        cells = [s.top_terms[r][0] if r < len(s.top_terms) else "" for s in summaries]
        lines.append(f"| {r + 1} |" + "|".join(f" {c} " for c in cells) + "|")
    return "\n".join(lines) + "\n"


def to_markdown(report: ComparisonReport) -> str:
    out = ["# Corpus comparison", ""]
    if report.baseline:
        out += [f"Baseline corpus: `{report.baseline}`", ""]
    out += ["## Corpus statistics", "", "| corpus | documents | tokens | vocabulary |", "|---|---|---|---|"]
    out += [f"| {c} | {s['docs']} | {s['tokens']} | {s['vocab']} |" for c, s in ((c, report.stats[c]) for c in report.corpora)]
    out += ["", "## Most frequent words (proportion of corpus tokens)", ""]
    out += ["| rank | " + " | ".join(report.corpora) + " |", "|---|" + "---|" * len(report.corpora)]
    depth = max((len(v) for v in report.frequency_tables.values()), default=0)
    for r in range(depth):
        cells = []
        for c in report.corpora:
            rows = report.frequency_tables[c]
            cells.append(f"{rows[r][0]} ({rows[r][1]:.4f})" if r < len(rows) else "")
        out.append(f"| {r + 1} | " + " | ".join(cells) + " |")
    for c in report.corpora:
        for method, res in report.topics[c].items():
            out += ["", f"## {method.upper()} topics: {c}", "", topic_table_md(res.summaries)]
            out.append("UMass coherence: " + ", ".join(f"topic {s.topic_id}: {v:.3f}" for s, v in zip(res.summaries, res.coherence)))
    em = report.emotions
    if em is not None:
        out += ["", f"## Evoked emotions ({em.pooling} average over articles)", ""]
        out += ["| emotion | " + " | ".join(report.corpora) + " |", "|---|" + "---|" * len(report.corpora)]
        for j, e in enumerate(EMOTIONS):
            out.append(f"| {e} | " + " | ".join(f"{em.corpus_profiles[c].scores[j]:.4f}" for c in report.corpora) + " |")
        emotions_listed = sorted({e for c in report.corpora for e in em.top_words[c]})
        for e in emotions_listed:
            out += ["", f"## Words with highest {e} scores", ""]
            out += ["| | " + " | ".join(report.corpora) + " |", "|---|" + "---|" * len(report.corpora)]
            depth = max(len(em.top_words[c].get(e, [])) for c in report.corpora)
            for r in range(depth):
                cells = []
                for c in report.corpora:
                    ws = em.top_words[c].get(e, [])
                    cells.append(ws[r][0] if r < len(ws) else "")
                out.append(f"| word {r + 1} | " + " | ".join(cells) + " |")
    return "\n".join(out) + "\n"


def svg_charts(report: ComparisonReport) -> dict[str, str]:
    """File name -> SVG markup. No emotion charts without an emotion section."""
    charts = {}
    for c in report.corpora:
        rows = report.frequency_tables[c]
        charts[f"frequencies_{_slug(c)}.svg"] = grouped_bar_chart(
            f"Most frequent words: {c}", [t for t, _ in rows], {c: [f for _, f in rows]}
        )
    em = report.emotions
    if em is not None:
        charts["emotions.svg"] = grouped_bar_chart(
            "Evoked emotions by corpus",
            list(EMOTIONS),
            {c: list(em.corpus_profiles[c].scores) for c in report.corpora},
        )
        for c in report.corpora:
            docs = em.document_profiles[c]
            charts[f"document_emotions_{_slug(c)}.svg"] = line_chart(
                f"Evoked emotions per document: {c}",
                [d for d, _ in docs],
                {e: [p.scores[j] for _, p in docs] for j, e in enumerate(EMOTIONS)},
            )
    return charts


def render(report: ComparisonReport, formats=("json",), out_dir=".") -> list[Path]:
    """Write the requested formats into `out_dir`; returns the files written."""
    formats = [formats] if isinstance(formats, str) else list(formats)
    unknown = [f for f in formats if f not in FORMATS]
    if unknown:
        raise ValidationError(f"unknown formats {unknown}; choose from {FORMATS}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if "json" in formats:
        p = out / "report.json"
        p.write_text(to_json(report), encoding="utf-8")
        written.append(p)
    if "csv" in formats:
        for name, rows in csv_tables(report).items():
            p = out / f"{name}.csv"
            with open(p, "w", newline="", encoding="utf-8") as fh:
                w = csv.writer(fh, lineterminator="\n")
                for row in rows:
                    w.writerow([_num(v) for v in row])
            written.append(p)
    if "md" in formats:
        p = out / "report.md"
        p.write_text(to_markdown(report), encoding="utf-8")
        written.append(p)
    if "svg" in formats:
        for name, markup in svg_charts(report).items():
            p = out / name
            p.write_text(markup, encoding="utf-8")
            written.append(p)
    return written
