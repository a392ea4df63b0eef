"""
Document-term matrices, TF-IDF and frequency tables
===================================================

Build the sparse count matrix for a small corpus, weight it, and list the
most frequent words.
"""

# %%
from pathlib import Path

import numpy as np

from corpus_lens import load_corpus
from corpus_lens.dtm import build_matrix, normalized_term_frequencies, tfidf, top_frequencies
from corpus_lens.textprep import prepare_corpus

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"
corpus = load_corpus(DATA / "news", "news")
vocab, counts = build_matrix(prepare_corpus(corpus))
print(counts.values.shape, "documents x terms,", counts.values.nnz, "nonzeros")

# %%
# TF-IDF multiplies each raw count by ``ln(N / df)``. A word found in every
# document gets weight zero, so it cannot dominate a topic.
weights = tfidf(counts)
df = counts.document_frequency()
everywhere = [t for t, d in zip(vocab.terms, df) if d == counts.n_docs]
print("in every document:", everywhere)
if everywhere:
    col = vocab.index[everywhere[0]]
    print("their weights:", np.unique(weights.values[:, col].toarray()))

# %%
# Frequencies are normalized by the corpus token total, so corpora of
# different sizes can share one table.
for term, share in top_frequencies(normalized_term_frequencies(counts), 10):
    print(f"{term:12s} {share:.4f}")
