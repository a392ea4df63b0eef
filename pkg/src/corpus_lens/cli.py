"""Command-line entry point: ``corpus-lens {ingest,topics,emotions,report}``.

Exit status is 0 on success, 2 for invalid input or parameters and 1 for
I/O failures.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .corpus import corpus_stats, load_corpus
from .dtm import build_matrix, tfidf
from .emotion import aggregate_corpus, load_lexicon, score_document, top_emotion_words
from .errors import ValidationError
from .report import FORMATS, ReportConfig, build_report, render, topic_table_md
from .textprep import default_stoplist, prepare_corpus, read_stoplist
from .topics import all_top_terms, coherence_vs_k, lda_fit, nmf_fit, umass_coherence

log = logging.getLogger("corpus_lens")


def _write_json(obj, path):
    text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _stoplist(args):
    return read_stoplist(args.stoplist) if args.stoplist else default_stoplist()


def _dir_label(spec: str):
    path, sep, label = spec.rpartition(":")
    if not sep or not path or not label:
        raise ValidationError(f"expected <dir>:<label>, got {spec!r}")
    return path, label


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_ingest(args):
    corpus = load_corpus(Path(args.root) / args.label, args.label)
    stats = corpus_stats(corpus, _stoplist(args))
    _write_json({"label": corpus.label, **stats.to_dict()}, args.stats_out)


def cmd_topics(args):
    label = args.label or Path(args.corpus).name
    corpus = load_corpus(args.corpus, label)
    _, counts = build_matrix(prepare_corpus(corpus, _stoplist(args)), min_df=args.min_df)
    if args.method == "nmf":
        model = nmf_fit(tfidf(counts), args.k, seed=args.seed, max_iter=args.max_iter, tol=args.tol, init=args.init)
        extra = {"objective_trace": model.objective_trace}
    else:
        model = lda_fit(counts, args.k, args.alpha, args.beta, args.iterations, args.seed)
        extra = {"alpha": model.alpha, "beta": model.beta, "iterations": model.iterations}
    summaries = all_top_terms(model, args.top)
    result = {
        "label": label,
        "method": args.method,
        "k": args.k,
        "seed": args.seed,
        "topics": [s.to_dict() for s in summaries],
        "coherence": [umass_coherence(s, counts, args.coherence_terms) for s in summaries],
        **extra,
    }
    if args.scan_k:
        result["coherence_vs_k"] = coherence_vs_k(counts, args.scan_k, args.method, args.seed, args.coherence_terms)
    _write_json(result, args.out)
    if args.table == "md":
        sys.stdout.write(topic_table_md(summaries))


def cmd_emotions(args):
    label = args.label or Path(args.corpus).name
    corpus = load_corpus(args.corpus, label)
    lex = load_lexicon(args.lexicon, pos_aware=args.pos)
    prepared = prepare_corpus(corpus, _stoplist(args))
    profiles = [score_document(pd, lex) for pd in prepared]
    result = {
        "label": label,
        "pos_aware": lex.pos_aware,
        "pooling": args.pooling,
        "corpus_profile": aggregate_corpus(profiles, args.pooling).to_dict(),
        "documents": [{"doc_id": pd.doc_id, **p.to_dict()} for pd, p in zip(prepared, profiles)],
        "top_words": {e: top_emotion_words(prepared, lex, e, args.top) for e in args.emotion},
    }
    _write_json(result, args.out)


def cmd_report(args):
    corpora = []
    baseline = None
    specs = list(args.corpus or [])
    if args.baseline:
        specs.append(args.baseline)
        baseline = _dir_label(args.baseline)[1]
    if not specs:
        raise ValidationError("give at least one --corpus <dir>:<label>")
    for spec in specs:
        path, label = _dir_label(spec)
        corpora.append(load_corpus(path, label))
    formats = [f.strip() for f in args.format.split(",") if f.strip()]
    bad = [f for f in formats if f not in FORMATS]
    if bad:
        raise ValidationError(f"unknown formats {bad}; choose from {FORMATS}")
    config = ReportConfig(
        k=args.k,
        seed=args.seed,
        top_terms=args.top,
        top_words=args.top_words,
        max_iter=args.max_iter,
        tol=args.tol,
        init=args.init,
        min_df=args.min_df,
        compare_lda=args.compare_lda,
        lda_iterations=args.iterations,
        alpha=args.alpha,
        beta=args.beta,
        stoplist=_stoplist(args),
        lexicon=load_lexicon(args.lexicon, pos_aware=args.pos) if args.lexicon else None,
        pooling=args.pooling,
        emotion_words=tuple(args.emotion),
        baseline=baseline,
    )
    report = build_report(corpora, config)
    for p in render(report, formats, args.out_dir):
        log.info("wrote %s", p)


def _add_common(p):
    p.add_argument("--stoplist", help="stop-word file, one word per line (default: bundled 318-word list)")
    p.add_argument("--min-df", type=int, default=1, help="drop terms in fewer documents than this")


def _add_nmf(p):
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--init", choices=("nndsvd", "random"), default="nndsvd")


def _add_lda(p):
    p.add_argument("--alpha", type=float, default=None, help="document-topic prior (default 50/k)")
    p.add_argument("--beta", type=float, default=0.01)
    p.add_argument("--iterations", type=int, default=1000, help="Gibbs sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="corpus-lens", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load <root>/<label>/*.txt and write corpus statistics")
    p.add_argument("--root", required=True)
    p.add_argument("--label", required=True)
    p.add_argument("--stats-out", default="-")
    _add_common(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("topics", help="fit NMF or LDA topics")
    p.add_argument("--corpus", required=True, help="directory of .txt files")
    p.add_argument("--label")
    p.add_argument("--method", choices=("nmf", "lda"), default="nmf")
    p.add_argument("--top", type=int, default=20)
    p.add_argument("--coherence-terms", type=int, default=10)
    p.add_argument("--scan-k", type=_int_list, help="also report mean coherence for these k, e.g. 5,10,15")
    p.add_argument("--out", default="-")
    p.add_argument("--table", choices=("md",), help="print a rank x topic markdown grid")
    _add_common(p)
    _add_nmf(p)
    _add_lda(p)
    p.set_defaults(func=cmd_topics)

    p = sub.add_parser("emotions", help="score evoked emotions with a lexicon")
    p.add_argument("--corpus", required=True)
    p.add_argument("--label")
    p.add_argument("--lexicon", required=True, help="TSV: word<TAB>AFRAID<TAB>...<TAB>SAD")
    p.add_argument("--pos", action="store_true", help="match word and part of speech")
    p.add_argument("--pooling", choices=("macro", "micro"), default="macro")
    p.add_argument("--emotion", action="append", default=None, help="emotion for the top-word list (repeatable)")
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--out", default="-")
    _add_common(p)
    p.set_defaults(func=cmd_emotions)

    p = sub.add_parser("report", help="compare corpora: frequencies, topics, emotions")
    p.add_argument("--corpus", action="append", help="<dir>:<label> (repeatable)")
    p.add_argument("--baseline", help="<dir>:<label> of the reference corpus")
    p.add_argument("--lexicon")
    p.add_argument("--pos", action="store_true")
    p.add_argument("--pooling", choices=("macro", "micro"), default="macro")
    p.add_argument("--emotion", action="append", default=None)
    p.add_argument("--top", type=int, default=20)
    p.add_argument("--top-words", type=int, default=20)
    p.add_argument("--compare-lda", action="store_true", help="also fit LDA and report its coherence")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--format", default="json,csv,md,svg")
    _add_common(p)
    _add_nmf(p)
    _add_lda(p)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "emotion", "absent") is None:
        args.emotion = ["INSPIRED"]
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        args.func(args)
    except ValidationError as exc:
        print(f"corpus-lens: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"corpus-lens: I/O error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
