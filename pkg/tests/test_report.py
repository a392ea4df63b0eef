import csv
import json
import xml.etree.ElementTree as ET

import pytest

from corpus_lens import ValidationError
from corpus_lens.emotion import EMOTIONS
from corpus_lens.report import (
    ReportConfig, build_report, read_report, render, svg_charts, to_json, to_markdown, topic_table_md,
)
from corpus_lens.synthetic import planted_corpus

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def trio_report(trio, fixture_lexicon):
    cfg = ReportConfig(k=3, lexicon=fixture_lexicon, baseline="news", top_words=10)
    return build_report(trio, cfg)


def test_without_lexicon():
    pc = planted_corpus(seed=0)
    r = build_report([pc.corpus], ReportConfig(k=3))
    assert r.emotions is None
    assert r.corpora == ["planted"]
    assert len(r.topics["planted"]["nmf"].summaries) == 3
    assert json.loads(to_json(r))["emotions"] is None


def test_two_corpora_independent_topics():
    a = planted_corpus(seed=0, label="a").corpus
    b = planted_corpus(seed=1, label="b").corpus
    r = build_report([a, b], ReportConfig(k=3, top_terms=5))
    assert set(r.topics) == {"a", "b"}
    words_a = {t for s in r.topics["a"]["nmf"].summaries for t in s.terms}
    words_b = {t for s in r.topics["b"]["nmf"].summaries for t in s.terms}
    assert words_a != words_b


def test_trio_layout(trio_report, trio, fixture_lexicon):
    from corpus_lens.emotion import aggregate_corpus, score_document
    from corpus_lens.textprep import prepare_corpus

    em = trio_report.emotions
    assert list(em.corpus_profiles) == ["devotional", "forum", "news"]
    assert trio_report.baseline == "news"
    for corpus in trio:
        expect = aggregate_corpus([score_document(pd, fixture_lexicon) for pd in prepare_corpus(corpus)])
        assert em.corpus_profiles[corpus.label] == expect
    svg = ET.fromstring(svg_charts(trio_report)["emotions.svg"])
    bars = [r for r in svg.iter(SVG + "rect") if r.get("data-series")]
    assert len(bars) == 3 * 8
    for e in EMOTIONS:
        group = [b for b in bars if b.get("data-category") == e]
        assert [b.get("data-series") for b in group] == ["devotional", "forum", "news"]
        for b in group:
            j = EMOTIONS.index(e)
            assert float(b.get("data-value")) == em.corpus_profiles[b.get("data-series")].scores[j]


def test_document_profiles_ordered(trio_report):
    ids = [d for d, _ in trio_report.emotions.document_profiles["devotional"]]
    assert ids == sorted(ids) == ["issue01", "issue02", "issue03", "issue04", "issue05"]
    assert trio_report.emotions.corpus_profiles["devotional"].excluded == 1


def test_json_round_trip(trio_report, tmp_path):
    render(trio_report, ["json"], tmp_path)
    assert read_report(tmp_path / "report.json") == trio_report


def test_json_deterministic(trio, fixture_lexicon):
    cfg = ReportConfig(k=3, lexicon=fixture_lexicon, compare_lda=True, lda_iterations=50)
    assert to_json(build_report(trio, cfg)) == to_json(build_report(trio, cfg))


def test_csv_equals_json(trio_report, tmp_path):
    render(trio_report, ["json", "csv"], tmp_path)
    data = json.loads((tmp_path / "report.json").read_text())
    with open(tmp_path / "emotions.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    for row in rows:
        scores = data["emotions"]["corpus_profiles"][row["corpus"]]["scores"]
        assert [float(row[e]) for e in EMOTIONS] == scores
    with open(tmp_path / "frequencies.csv", newline="") as fh:
        for row in csv.DictReader(fh):
            term, value = data["frequency_tables"][row["corpus"]][int(row["rank"]) - 1]
            assert row["term"] == term and float(row["proportion"]) == value
    with open(tmp_path / "topics.csv", newline="") as fh:
        for row in csv.DictReader(fh):
            topic = data["topics"][row["corpus"]][row["method"]]["topics"][int(row["topic_id"])]
            assert topic["top_terms"][int(row["rank"]) - 1] == [row["term"], float(row["weight"])]
    with open(tmp_path / "document_emotions.csv", newline="") as fh:
        for row in csv.DictReader(fh):
            docs = {d["doc_id"]: d for d in data["emotions"]["document_profiles"][row["corpus"]]}
            assert [float(row[e]) for e in EMOTIONS] == docs[row["doc_id"]]["scores"]


def test_all_formats_written(trio_report, tmp_path):
    paths = {p.name for p in render(trio_report, ["json", "csv", "md", "svg"], tmp_path)}
    assert {"report.json", "report.md", "emotions.svg", "emotions.csv", "stats.csv", "emotion_words.csv"} <= paths
    assert "document_emotions_devotional.svg" in paths
    assert "frequencies_news.svg" in paths
    for name in paths:
        if name.endswith(".svg"):
            ET.parse(tmp_path / name)


def test_no_emotion_svg_without_lexicon(tmp_path):
    r = build_report([planted_corpus(seed=0).corpus], ReportConfig(k=3))
    names = {p.name for p in render(r, ["svg", "csv"], tmp_path)}
    assert "emotions.svg" not in names and "emotions.csv" not in names
    assert "frequencies_planted.svg" in names


def test_svg_bar_heights_proportional(trio_report):
    svg = ET.fromstring(svg_charts(trio_report)["emotions.svg"])
    bars = [r for r in svg.iter(SVG + "rect") if r.get("data-series")]
    ratios = [float(b.get("height")) / float(b.get("data-value")) for b in bars if float(b.get("data-value")) > 0]
    assert max(ratios) / min(ratios) - 1 < 0.005


def test_frequency_svg_proportional(trio_report):
    svg = ET.fromstring(svg_charts(trio_report)["frequencies_devotional.svg"])
    bars = [r for r in svg.iter(SVG + "rect") if r.get("data-series")]
    expect = trio_report.frequency_tables["devotional"]
    assert [b.get("data-category") for b in bars] == [t for t, _ in expect]
    ratios = [float(b.get("height")) / v for b, (_, v) in zip(bars, expect)]
    assert max(ratios) / min(ratios) - 1 < 0.005


def test_markdown_tables(trio_report):
    md = to_markdown(trio_report)
    assert "| emotion | devotional | forum | news |" in md
    assert "## NMF topics: devotional" in md
    assert "Words with highest INSPIRED scores" in md
    grid = topic_table_md(trio_report.topics["news"]["nmf"].summaries)
    lines = grid.strip().splitlines()
    assert lines[0] == "| | Topic 0 | Topic 1 | Topic 2 |"
    assert len(lines) == 2 + 20


def test_validation():
    pc = planted_corpus(seed=0).corpus
    with pytest.raises(ValidationError):
        build_report([], ReportConfig(k=3))
    with pytest.raises(ValidationError):
        build_report([pc, pc], ReportConfig(k=3))
    with pytest.raises(ValidationError):
        build_report([pc], ReportConfig(k=3, baseline="missing"))
    with pytest.raises(ValidationError):
        render(build_report([pc], ReportConfig(k=3)), ["pdf"], ".")


def test_unwritable_output(trio_report, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(OSError):
        render(trio_report, ["json"], blocker / "sub")


def test_lda_comparison_section(trio, fixture_lexicon):
    r = build_report(trio[:1], ReportConfig(k=2, compare_lda=True, lda_iterations=30))
    assert set(r.topics["devotional"]) == {"nmf", "lda"}
    assert len(r.topics["devotional"]["lda"].coherence) == 2
