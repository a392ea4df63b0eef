"""Synthetic corpora with known structure, for recovery checks and demos."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import Corpus, Document

_CONSONANTS = "bdfgklmnprstvz"
_VOWELS = "aeiou"


def pseudo_words(n: int, rng, syllables: int = 3, exclude=()) -> list[str]:
    """`n` distinct consonant-vowel pseudo words, none of them stop words."""
    from .textprep import default_stoplist

    seen = set(exclude) | set(default_stoplist().words)
    out = []
    while len(out) < n:
        w = "".join(rng.choice(list(_CONSONANTS)) + rng.choice(list(_VOWELS)) for _ in range(syllables))
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


@dataclass(frozen=True)
class PlantedCorpus:
    corpus: Corpus
    topics: tuple[tuple[str, ...], ...]
    dominant: tuple[int, ...]  # planted main topic per document


def planted_corpus(
    n_topics: int = 3,
    words_per_topic: int = 30,
    n_docs: int = 60,
    doc_length: int = 120,
    purity: float = 0.8,
    seed: int = 0,
    label: str = "planted",
) -> PlantedCorpus:
    """Documents drawn from disjoint topic vocabularies.

    Document i has main topic ``i % n_topics``; a fraction `purity` of its
    tokens (in expectation) comes from that topic, the rest uniformly from
    the others. Within a topic, word probabilities fall off as 1/rank.
    """
    rng = np.random.default_rng(seed)
    vocab = pseudo_words(n_topics * words_per_topic, rng)
    topics = [tuple(vocab[j * words_per_topic:(j + 1) * words_per_topic]) for j in range(n_topics)]
    zipf = 1.0 / np.arange(1, words_per_topic + 1)
    zipf /= zipf.sum()
    docs, dominant = [], []
    width = len(str(n_docs - 1))
    for i in range(n_docs):
        main = i % n_topics
        mix = np.full(n_topics, (1 - purity) / max(n_topics - 1, 1))
        mix[main] = purity if n_topics > 1 else 1.0
        z = rng.choice(n_topics, size=doc_length, p=mix)
        ranks = rng.choice(words_per_topic, size=doc_length, p=zipf)
        text = " ".join(topics[t][r] for t, r in zip(z, ranks))
        doc_id = f"doc{i:0{width}d}"
        docs.append(Document(doc_id, text, f"<synthetic:{doc_id}>"))
        dominant.append(main)
    return PlantedCorpus(Corpus(label, tuple(docs)), tuple(topics), tuple(dominant))


def disjoint_pair(n_docs: int = 2, words_per_side: int = 8, doc_length: int = 400, seed: int = 0) -> PlantedCorpus:
    """Documents split into two groups with no shared vocabulary."""
    return planted_corpus(
        n_topics=2,
        words_per_topic=words_per_side,
        n_docs=n_docs,
        doc_length=doc_length,
        purity=1.0,
        seed=seed,
        label="disjoint",
    )


def write_corpus(corpus: Corpus, directory) -> Path:
    """Write each document to ``<directory>/<id>.txt`` and return the directory."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for d in corpus.documents:
        (directory / f"{d.id}.txt").write_text(d.raw_text, encoding="utf-8")
    return directory
