"""Run the full pipeline over several labeled corpora and collect the results."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import __version__
from ..corpus import Corpus, corpus_stats
from ..dtm import build_matrix, normalized_term_frequencies, tfidf, top_frequencies
from ..emotion import EMOTIONS, EmotionLexicon, EmotionProfile, aggregate_corpus, score_document, top_emotion_words
from ..errors import ValidationError
from ..textprep import StopList, default_stoplist, prepare_corpus
from ..topics import TopicSummary, all_top_terms, lda_fit, nmf_fit, umass_coherence


@dataclass
class ReportConfig:
    k: int = 10
    seed: int = 42
    top_terms: int = 20
    top_words: int = 20
    max_iter: int = 200
    tol: float = 1e-4
    init: str = "nndsvd"
    min_df: int = 1
    coherence_terms: int = 10
    compare_lda: bool = False
    lda_iterations: int = 1000
    alpha: float | None = None
    beta: float = 0.01
    stoplist: StopList | None = None
    lexicon: EmotionLexicon | None = None
    pooling: str = "macro"
    emotion_words: tuple = ("INSPIRED",)
    n_emotion_words: int = 10
    baseline: str | None = None

    def parameters(self) -> dict:
        return {
            "k": self.k,
            "seed": self.seed,
            "top_terms": self.top_terms,
            "top_words": self.top_words,
            "max_iter": self.max_iter,
            "tol": self.tol,
            "init": self.init,
            "min_df": self.min_df,
            "coherence_terms": self.coherence_terms,
            "compare_lda": self.compare_lda,
            "lda_iterations": self.lda_iterations,
            "alpha": self.alpha,
            "beta": self.beta,
            "stoplist_size": len(self.stoplist) if self.stoplist is not None else len(default_stoplist()),
            "lexicon_entries": len(self.lexicon) if self.lexicon is not None else None,
            "pos_aware": self.lexicon.pos_aware if self.lexicon is not None else None,
            "pooling": self.pooling,
            "emotion_words": list(self.emotion_words),
            "n_emotion_words": self.n_emotion_words,
        }


@dataclass
class TopicResult:
    method: str
    summaries: list  # of TopicSummary
    coherence: list  # UMass per topic
    objective_trace: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "topics": [s.to_dict() for s in self.summaries],
            "coherence": list(self.coherence),
            "objective_trace": list(self.objective_trace),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TopicResult":
        return cls(d["method"], [TopicSummary.from_dict(t) for t in d["topics"]], d["coherence"], d["objective_trace"])


@dataclass
class EmotionSection:
    pooling: str
    corpus_profiles: dict  # label -> EmotionProfile
    document_profiles: dict  # label -> list of (doc_id, EmotionProfile), ordered by doc id
    top_words: dict  # label -> {emotion: [(word, score), ...]}

    def to_dict(self) -> dict:
        return {
            "emotion_order": list(EMOTIONS),
            "pooling": self.pooling,
            "corpus_profiles": {k: p.to_dict() for k, p in self.corpus_profiles.items()},
            "document_profiles": {
                k: [{"doc_id": d, **p.to_dict()} for d, p in rows] for k, rows in self.document_profiles.items()
            },
            "top_words": {
                k: {e: [[w, s] for w, s in ws] for e, ws in by_e.items()} for k, by_e in self.top_words.items()
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EmotionSection":
        return cls(
            d["pooling"],
            {k: EmotionProfile.from_dict(p) for k, p in d["corpus_profiles"].items()},
            {k: [(r["doc_id"], EmotionProfile.from_dict(r)) for r in rows] for k, rows in d["document_profiles"].items()},
            {k: {e: [(w, s) for w, s in ws] for e, ws in by_e.items()} for k, by_e in d["top_words"].items()},
        )


@dataclass
class ComparisonReport:
    corpora: list  # labels, input order
    baseline: str | None
    stats: dict  # label -> {"docs", "tokens", "vocab"}
    frequency_tables: dict  # label -> [(term, proportion), ...]
    topics: dict  # label -> {method: TopicResult}
    emotions: EmotionSection | None
    metadata: dict

    def to_dict(self) -> dict:
        return {
            "corpora": list(self.corpora),
            "baseline": self.baseline,
            "stats": self.stats,
            "frequency_tables": {k: [[t, f] for t, f in rows] for k, rows in self.frequency_tables.items()},
            "topics": {k: {m: r.to_dict() for m, r in by_m.items()} for k, by_m in self.topics.items()},
            "emotions": self.emotions.to_dict() if self.emotions is not None else None,
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ComparisonReport":
        return cls(
            d["corpora"],
            d["baseline"],
            d["stats"],
            {k: [(t, f) for t, f in rows] for k, rows in d["frequency_tables"].items()},
            {k: {m: TopicResult.from_dict(r) for m, r in by_m.items()} for k, by_m in d["topics"].items()},
            EmotionSection.from_dict(d["emotions"]) if d["emotions"] is not None else None,
            d["metadata"],
        )


def build_report(corpora: list[Corpus], config: ReportConfig | None = None) -> ComparisonReport:
    """Apply the same preprocessing, topic and emotion settings to every corpus.

    The emotion section is None when `config.lexicon` is None. A corpus
    whose label equals `config.baseline` is marked as the baseline.
    """
    config = ReportConfig() if config is None else config
    if not corpora:
        raise ValidationError("at least one corpus is required")
    labels = [c.label for c in corpora]
    if len(set(labels)) != len(labels):
        raise ValidationError(f"corpus labels must be unique: {labels}")
    if config.baseline is not None and config.baseline not in labels:
        raise ValidationError(f"baseline {config.baseline!r} is not one of {labels}")
    stops = config.stoplist if config.stoplist is not None else default_stoplist()

    stats, freqs, topics = {}, {}, {}
    corpus_profiles, doc_profiles, top_words = {}, {}, {}
    for corpus in corpora:
        label = corpus.label
        prepared = prepare_corpus(corpus, stops)
        stats[label] = corpus_stats(corpus, prepared=prepared).to_dict()
        _, counts = build_matrix(prepared, min_df=config.min_df)
        freqs[label] = top_frequencies(normalized_term_frequencies(counts), config.top_words)

        nmf = nmf_fit(tfidf(counts), config.k, seed=config.seed, max_iter=config.max_iter, tol=config.tol, init=config.init)
        summaries = all_top_terms(nmf, config.top_terms)
        topics[label] = {
            "nmf": TopicResult(
                "nmf",
                summaries,
                [umass_coherence(s, counts, config.coherence_terms) for s in summaries],
                nmf.objective_trace,
            )
        }
        if config.compare_lda:
            lda = lda_fit(counts, config.k, config.alpha, config.beta, config.lda_iterations, config.seed)
            lda_summaries = all_top_terms(lda, config.top_terms)
            topics[label]["lda"] = TopicResult(
                "lda", lda_summaries, [umass_coherence(s, counts, config.coherence_terms) for s in lda_summaries]
            )

        if config.lexicon is not None:
            profiles = [score_document(pd, config.lexicon) for pd in prepared]
            doc_profiles[label] = sorted(zip((pd.doc_id for pd in prepared), profiles), key=lambda r: r[0])
            try:
                corpus_profiles[label] = aggregate_corpus(profiles, config.pooling)
            except ValidationError as exc:
                raise ValidationError(f"corpus {label!r}: {exc}") from None
            top_words[label] = {
                e: top_emotion_words(prepared, config.lexicon, e, config.n_emotion_words) for e in config.emotion_words
            }

    emotions = None
    if config.lexicon is not None:
        emotions = EmotionSection(config.pooling, corpus_profiles, doc_profiles, top_words)
    metadata = {"tool": "corpus-lens", "version": __version__, "parameters": config.parameters()}
    return ComparisonReport(labels, config.baseline, stats, freqs, topics, emotions, metadata)
