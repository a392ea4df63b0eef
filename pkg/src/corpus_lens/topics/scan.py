from __future__ import annotations

from ..dtm import tfidf
from .coherence import mean_coherence
from .lda import lda_fit
from .nmf import nmf_fit
from .summary import all_top_terms


def coherence_vs_k(counts, ks, method="nmf", seed=42, top=10, **fit_kwargs) -> list[dict]:
    """Mean UMass coherence of the fitted topics for each k in `ks`.

    Only reports the numbers; choosing k is left to the caller.
    """
    weights = tfidf(counts) if method == "nmf" else counts
    rows = []
    for k in ks:
        if method == "nmf":
            model = nmf_fit(weights, k, seed=seed, **fit_kwargs)
        else:
            model = lda_fit(counts, k, seed=seed, **fit_kwargs)
        summaries = all_top_terms(model, top)
        rows.append({"k": k, "coherence": mean_coherence(summaries, counts)})
    return rows
