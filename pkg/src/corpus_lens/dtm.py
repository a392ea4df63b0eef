"""Vocabulary, sparse document-term counts and tf-idf weighting.

Matrices are stored documents-as-rows in CSR form. Absent entries are zero
and every stored entry is strictly positive.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .errors import ValidationError

COUNTS = "counts"
TFIDF = "tfidf"


@dataclass(frozen=True)
class Vocabulary:
    terms: tuple[str, ...]
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {t: i for i, t in enumerate(self.terms)})
        if len(self.index) != len(self.terms):
            raise ValidationError("vocabulary terms must be unique")
        if list(self.terms) != sorted(self.terms):
            raise ValidationError("vocabulary terms must be sorted")

    def __len__(self):
        return len(self.terms)

    def __contains__(self, term):
        return term in self.index


@dataclass(frozen=True, eq=False)
class DocTermMatrix:
    """Sparse documents x terms matrix with row and column labels."""

    values: sp.csr_matrix
    doc_ids: tuple[str, ...]
    vocab: Vocabulary
    kind: str = COUNTS

    @property
    def n_docs(self) -> int:
        return self.values.shape[0]

    @property
    def n_terms(self) -> int:
        return self.values.shape[1]

    def toarray(self) -> np.ndarray:
        return self.values.toarray()

    def document_frequency(self) -> np.ndarray:
        """Number of documents with a nonzero entry, per term."""
        return np.diff(self.values.tocsc().indptr)


def build_matrix(docs: Sequence, min_df: int = 1) -> tuple[Vocabulary, DocTermMatrix]:
    """Count terms per prepared document.

    Parameters
    ----------
    docs : sequence of PreparedDocument
        Row order of the result follows this sequence.
    min_df : int
        Drop terms occurring in fewer documents than this. The default
        keeps every term.

    Returns
    -------
    (Vocabulary, DocTermMatrix)
        Counts are stored as int64.
    """
    counters = [Counter(d.terms) for d in docs]
    df = Counter()
    for c in counters:
        df.update(c.keys())
    terms = sorted(t for t, n in df.items() if n >= min_df)
    if not terms:
        raise ValidationError("all documents are empty after preprocessing")
    vocab = Vocabulary(tuple(terms))
    index = vocab.index

    indptr = [0]
    indices: list[int] = []
    data: list[int] = []
    for c in counters:
        cols = sorted(index[t] for t in c if t in index)
        indices.extend(cols)
        data.extend(c[vocab.terms[j]] for j in cols)
        indptr.append(len(indices))
    values = sp.csr_matrix(
        (np.asarray(data, dtype=np.int64), np.asarray(indices, dtype=np.int64), np.asarray(indptr)),
        shape=(len(docs), len(vocab)),
    )
    return vocab, DocTermMatrix(values, tuple(d.doc_id for d in docs), vocab, COUNTS)


def tfidf(m: DocTermMatrix) -> DocTermMatrix:
    """Weight counts by ``count * ln(N / df)``.

    No smoothing, no sublinear damping. Terms present in every document get
    weight zero and drop out of the sparse structure.
    """
    if m.kind != COUNTS:
        raise ValidationError(f"tfidf expects a counts matrix, got {m.kind!r}")
    n = m.n_docs
    idf = np.log(n / m.document_frequency())
    csr = m.values.tocsr()
    weights = csr.data.astype(np.float64) * idf[csr.indices]
    out = sp.csr_matrix((weights, csr.indices.copy(), csr.indptr.copy()), shape=csr.shape)
    out.eliminate_zeros()
    return DocTermMatrix(out, m.doc_ids, m.vocab, TFIDF)


def normalized_term_frequencies(m: DocTermMatrix) -> dict[str, float]:
    """Corpus-level term frequencies divided by the corpus token total."""
    if m.kind != COUNTS:
        raise ValidationError(f"term frequencies need a counts matrix, got {m.kind!r}")
    totals = np.asarray(m.values.sum(axis=0)).ravel()
    n_tokens = totals.sum()
    return {t: float(c / n_tokens) for t, c in zip(m.vocab.terms, totals)}


def top_frequencies(freqs: dict[str, float], n: int = 20) -> list[tuple[str, float]]:
    """Highest frequencies first, ties broken by term."""
    return sorted(freqs.items(), key=lambda kv: (-kv[1], kv[0]))[:n]


def write_coo(m: DocTermMatrix, path) -> None:
    """Write ``doc_id<TAB>term<TAB>value`` lines, one per stored entry."""
    coo = m.values.tocoo()
    order = np.lexsort((coo.col, coo.row))
    with open(path, "w", encoding="utf-8") as fh:
        for i in order:
            v = coo.data[i]
            v = int(v) if m.kind == COUNTS else float(v)
            fh.write(f"{m.doc_ids[coo.row[i]]}\t{m.vocab.terms[coo.col[i]]}\t{v!r}\n")


def write_vocabulary(vocab: Vocabulary, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"terms": list(vocab.terms)}, fh, ensure_ascii=False, indent=1)
