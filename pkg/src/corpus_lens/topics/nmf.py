"""Non-negative matrix factorization with multiplicative updates."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from ..dtm import COUNTS, TFIDF, DocTermMatrix
from ..errors import ValidationError

EPS = 1e-12


@dataclass(eq=False)
class NmfModel:
    """Factor pair for ``X ~ W @ H`` where X is terms x documents.

    Attributes
    ----------
    W : ndarray, shape (n_terms, k)
        Term weights per topic; column j is topic j.
    H : ndarray, shape (k, n_docs)
        Topic weights per document.
    objective_trace : list of float
        Frobenius residual ``||X - WH||_F``; entry 0 is the initial guess,
        entry i the residual after update i.
    """

    W: np.ndarray
    H: np.ndarray
    k: int
    seed: int | None
    objective_trace: list = field(default_factory=list)
    terms: tuple = ()
    doc_ids: tuple = ()
    init: str = "nndsvd"

    @property
    def n_iter(self) -> int:
        return len(self.objective_trace) - 1

    def topic_term_weights(self, topic_id: int) -> np.ndarray:
        return self.W[:, topic_id]


def nndsvd(X: np.ndarray, k: int, fill: float | None = None):
    """NNDSVD initialization (Boutsidis & Gallopoulos, 2008).

    Each of the `k` leading singular triplets is split into positive and
    negative parts; the part with the larger norm product seeds one column
    of W and one row of H. Zeros in the result are replaced by `fill`,
    ``1e-6 * mean(X)`` by default, so multiplicative updates can move them.
    """
    U, S, Vt = np.linalg.svd(X, full_matrices=False)
    m, n = X.shape
    W = np.zeros((m, k))
    H = np.zeros((k, n))

    W[:, 0] = np.sqrt(S[0]) * np.abs(U[:, 0])
    H[0, :] = np.sqrt(S[0]) * np.abs(Vt[0, :])

    for j in range(1, min(k, len(S))):
        x, y = U[:, j], Vt[j, :]
        xp, xn = np.maximum(x, 0), np.maximum(-x, 0)
        yp, yn = np.maximum(y, 0), np.maximum(-y, 0)
        xp_nrm, yp_nrm = np.linalg.norm(xp), np.linalg.norm(yp)
        xn_nrm, yn_nrm = np.linalg.norm(xn), np.linalg.norm(yn)
        mp, mn = xp_nrm * yp_nrm, xn_nrm * yn_nrm
        if mp >= mn:
            u, v, sigma = xp / xp_nrm, yp / yp_nrm, mp
        else:
            u, v, sigma = xn / xn_nrm, yn / yn_nrm, mn
        if sigma == 0:
            continue
        lbd = np.sqrt(S[j] * sigma)
        W[:, j] = lbd * u
        H[j, :] = lbd * v

    if fill is None:
        fill = 1e-6 * X.mean()
    W[W < EPS] = fill
    H[H < EPS] = fill
    return W, H


def random_init(X: np.ndarray, k: int, seed):
    rng = np.random.default_rng(seed)
    scale = X.mean()
    W = rng.uniform(0.0, 1.0, size=(X.shape[0], k)) * scale
    H = rng.uniform(0.0, 1.0, size=(k, X.shape[1])) * scale
    return W, H


def _residual(X, W, H) -> float:
    return float(np.linalg.norm(X - W @ H))


def factorize(
    X: np.ndarray,
    k: int,
    seed=None,
    max_iter: int = 200,
    tol: float = 1e-4,
    init: str = "nndsvd",
    check_nonnegative: bool = False,
) -> tuple[np.ndarray, np.ndarray, list[float]]:
    """Minimize ``||X - WH||_F`` over nonnegative W, H by Lee-Seung updates.

    Stops after `max_iter` updates or when the relative decrease of the
    residual falls below `tol`.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise ValidationError("X must be two-dimensional")
    if np.any(X < 0):
        raise ValidationError("NMF input has negative entries")
    if not 1 <= k <= min(X.shape):
        raise ValidationError(f"k={k} out of range [1, {min(X.shape)}]")
    if init == "nndsvd":
        W, H = nndsvd(X, k)
    elif init == "random":
        W, H = random_init(X, k, seed)
    else:
        raise ValidationError(f"unknown init {init!r}")

    trace = [_residual(X, W, H)]
    for _ in range(max_iter):
        H *= (W.T @ X) / (W.T @ W @ H + EPS)
        W *= (X @ H.T) / (W @ (H @ H.T) + EPS)
        if check_nonnegative:
            assert (W >= 0).all() and (H >= 0).all()
        trace.append(_residual(X, W, H))
        prev, cur = trace[-2], trace[-1]
        if prev == 0 or (prev - cur) / prev < tol:
            break
    return W, H, trace


def nmf_fit(
    V: DocTermMatrix,
    k: int = 10,
    seed: int | None = 42,
    max_iter: int = 200,
    tol: float = 1e-4,
    init: str = "nndsvd",
) -> NmfModel:
    """Fit topics to a document-term matrix.

    The matrix is transposed so W holds topics over terms and H topics over
    documents. Results are deterministic for fixed arguments; the seed only
    matters for ``init="random"``.
    """
    if V.kind not in (TFIDF, COUNTS):
        raise ValidationError(f"unsupported matrix kind {V.kind!r}")
    if not 1 <= k <= min(V.n_docs, V.n_terms):
        raise ValidationError(f"k={k} out of range [1, min(n_docs={V.n_docs}, n_terms={V.n_terms})]")
    X = V.values.T.toarray() if sp.issparse(V.values) else np.asarray(V.values).T
    W, H, trace = factorize(X, k, seed=seed, max_iter=max_iter, tol=tol, init=init)
    return NmfModel(W, H, k, seed, trace, V.vocab.terms, V.doc_ids, init)
