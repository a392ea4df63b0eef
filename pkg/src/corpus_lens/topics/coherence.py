"""UMass topic coherence from document co-occurrence counts."""

from __future__ import annotations

import math

import numpy as np

from ..errors import ValidationError


def _binary_columns(counts, terms):
    index = counts.vocab.index
    missing = [t for t in terms if t not in index]
    if missing:
        raise ValidationError(f"terms not in vocabulary: {missing}")
    cols = counts.values.tocsc()[:, [index[t] for t in terms]]
    return (cols > 0).astype(np.int64).toarray()


def umass_coherence(summary, counts, n_terms: int | None = None) -> float:
    """UMass coherence of a topic's ranked terms (Mimno et al., 2011).

    ``sum over m > l of ln((D(w_m, w_l) + 1) / D(w_l))`` where D counts
    documents containing the word(s) and w_l is the higher-ranked word of
    each pair. Values are <= roughly 0; higher means more coherent.
    """
    terms = summary.terms if hasattr(summary, "terms") else list(summary)
    if n_terms is not None:
        terms = terms[:n_terms]
    B = _binary_columns(counts, terms)
    doc_freq = B.sum(axis=0)
    co = B.T @ B
    score = 0.0
    for m in range(1, len(terms)):
        for l in range(m):
            score += math.log((co[m, l] + 1) / doc_freq[l])
    return score


def mean_coherence(summaries, counts, n_terms: int | None = None) -> float:
    return float(np.mean([umass_coherence(s, counts, n_terms) for s in summaries]))
