"""Latent Dirichlet allocation fitted by collapsed Gibbs sampling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dtm import COUNTS, DocTermMatrix
from ..errors import ValidationError

try:  # optional accelerator; the pure-Python sweep gives identical draws
    import numba
except ImportError:  # pragma: no cover - exercised when numba is absent
    numba = None


@dataclass(eq=False)
class LdaModel:
    phi: np.ndarray  # topics x terms
    theta: np.ndarray  # documents x topics
    alpha: float
    beta: float
    k: int
    seed: int | None
    iterations: int
    terms: tuple = ()
    doc_ids: tuple = ()

    def topic_term_weights(self, topic_id: int) -> np.ndarray:
        return self.phi[topic_id]


def expand_tokens(counts: DocTermMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Unroll a counts matrix into parallel (doc, word) token arrays.

    Tokens appear in row order, then column order, so the sampler's
    visiting order is fixed by the matrix alone.
    """
    csr = counts.values.tocsr()
    reps = csr.data.astype(np.int64)
    rows = np.repeat(np.arange(csr.shape[0]), np.diff(csr.indptr))
    docs = np.repeat(rows, reps)
    words = np.repeat(csr.indices.astype(np.int64), reps)
    return docs, words


def _sweep_py(docs, words, z, ndk, nkw, nk, alpha, beta, vbeta, u):
    k = nk.shape[0]
    probs = [0.0] * k
    ndk_l, nkw_l, nk_l = ndk, nkw, nk
    for i in range(len(z)):
        d = docs[i]
        w = words[i]
        t = z[i]
        ndk_l[d, t] -= 1
        nkw_l[t, w] -= 1
        nk_l[t] -= 1
        total = 0.0
        for j in range(k):
            total += (ndk_l[d, j] + alpha) * (nkw_l[j, w] + beta) / (nk_l[j] + vbeta)
            probs[j] = total
        r = u[i] * total
        t = 0
        while t < k - 1 and probs[t] <= r:
            t += 1
        z[i] = t
        ndk_l[d, t] += 1
        nkw_l[t, w] += 1
        nk_l[t] += 1


def _sweep_py_lists(docs, words, z, ndk, nkw, nk, alpha, beta, vbeta, u):
    # nested-list copy of the count tables; numpy scalar indexing is slow
    ndk_l, nkw_l, nk_l = ndk.tolist(), nkw.tolist(), nk.tolist()
    z_l = z.tolist()
    k = len(nk_l)
    rng_k = range(k)
    probs = [0.0] * k
    for i, (d, w, r0) in enumerate(zip(docs.tolist(), words.tolist(), u.tolist())):
        t = z_l[i]
        row = ndk_l[d]
        row[t] -= 1
        nkw_l[t][w] -= 1
        nk_l[t] -= 1
        total = 0.0
        for j in rng_k:
            total += (row[j] + alpha) * (nkw_l[j][w] + beta) / (nk_l[j] + vbeta)
            probs[j] = total
        r = r0 * total
        t = 0
        while t < k - 1 and probs[t] <= r:
            t += 1
        z_l[i] = t
        row[t] += 1
        nkw_l[t][w] += 1
        nk_l[t] += 1
    z[:] = z_l
    ndk[:] = ndk_l
    nkw[:] = nkw_l
    nk[:] = nk_l


_sweep = _sweep_py_lists
if numba is not None:
    _sweep = numba.njit(cache=True, nogil=True)(_sweep_py)


def gibbs_state(docs, words, n_docs, n_terms, k, alpha, beta, iterations, seed, on_sweep=None, sweep=None):
    """Run the sampler and return final count tables ``(z, ndk, nkw, nk)``.

    Uniform draws come from a numpy Generator, one array per sweep, so the
    compiled and pure-Python sweeps produce the same chain.
    """
    sweep = _sweep if sweep is None else sweep
    rng = np.random.default_rng(seed)
    n = len(docs)
    z = rng.integers(0, k, size=n).astype(np.int64)
    ndk = np.zeros((n_docs, k), dtype=np.int64)
    nkw = np.zeros((k, n_terms), dtype=np.int64)
    np.add.at(ndk, (docs, z), 1)
    np.add.at(nkw, (z, words), 1)
    nk = nkw.sum(axis=1)
    vbeta = n_terms * beta
    for it in range(iterations):
        u = rng.random(n)
        sweep(docs, words, z, ndk, nkw, nk, float(alpha), float(beta), float(vbeta), u)
        if on_sweep is not None:
            on_sweep(it, z, ndk, nkw, nk)
    return z, ndk, nkw, nk


def lda_fit(
    counts: DocTermMatrix,
    k: int = 10,
    alpha: float | None = None,
    beta: float = 0.01,
    iterations: int = 1000,
    seed: int | None = 42,
) -> LdaModel:
    """Fit LDA on raw counts.

    `alpha` defaults to ``50 / k``. phi and theta are the smoothed point
    estimates from the final sampler state (no averaging over sweeps).
    """
    if counts.kind != COUNTS:
        raise ValidationError("LDA requires a counts matrix")
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    if counts.values.nnz == 0:
        raise ValidationError("empty corpus")
    alpha = 50.0 / k if alpha is None else float(alpha)
    if alpha <= 0 or beta <= 0:
        raise ValidationError("alpha and beta must be positive")
    docs, words = expand_tokens(counts)
    n_docs, n_terms = counts.values.shape
    _, ndk, nkw, nk = gibbs_state(docs, words, n_docs, n_terms, k, alpha, beta, iterations, seed)

    phi = (nkw + beta) / (nk[:, None] + n_terms * beta)
    nd = ndk.sum(axis=1)
    theta = (ndk + alpha) / (nd[:, None] + k * alpha)
    return LdaModel(phi, theta, alpha, beta, k, seed, iterations, counts.vocab.terms, counts.doc_ids)
