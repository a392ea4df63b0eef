import random

import numpy as np
import pytest

from corpus_lens import ValidationError
from corpus_lens.dtm import build_matrix, tfidf
from corpus_lens.synthetic import disjoint_pair, planted_corpus
from corpus_lens.textprep import prepare_corpus
from corpus_lens.topics import lda_fit
from corpus_lens.topics import lda as lda_mod

from .conftest import prepared


def counts_of(corpus):
    return build_matrix(prepare_corpus(corpus))[1]


def reference_gibbs(docs_words, k, alpha, beta, sweeps, seed):
    """Textbook collapsed Gibbs sampler written independently of the package."""
    rnd = random.Random(seed)
    vocab = sorted({w for d in docs_words for w in d})
    widx = {w: i for i, w in enumerate(vocab)}
    V = len(vocab)
    z = [[rnd.randrange(k) for _ in d] for d in docs_words]
    ndk = [[0] * k for _ in docs_words]
    nkw = [[0] * V for _ in range(k)]
    nk = [0] * k
    for d, words in enumerate(docs_words):
        for w, t in zip(words, z[d]):
            ndk[d][t] += 1
            nkw[t][widx[w]] += 1
            nk[t] += 1
    for _ in range(sweeps):
        for d, words in enumerate(docs_words):
            for i, w in enumerate(words):
                t, wi = z[d][i], widx[w]
                ndk[d][t] -= 1
                nkw[t][wi] -= 1
                nk[t] -= 1
                p = [(ndk[d][j] + alpha) * (nkw[j][wi] + beta) / (nk[j] + V * beta) for j in range(k)]
                t = rnd.choices(range(k), weights=p)[0]
                z[d][i] = t
                ndk[d][t] += 1
                nkw[t][wi] += 1
                nk[t] += 1
    return [[(ndk[d][j] + alpha) / (len(w) + k * alpha) for j in range(k)] for d, w in enumerate(docs_words)]


def test_single_topic_degenerate():
    pc = planted_corpus(n_docs=12, doc_length=30, seed=1)
    counts = counts_of(pc.corpus)
    m = lda_fit(counts, 1, iterations=5, seed=3)
    assert (m.theta == 1.0).all()
    totals = np.asarray(counts.values.sum(axis=0)).ravel()
    expect = (totals + m.beta) / (totals.sum() + counts.n_terms * m.beta)
    np.testing.assert_allclose(m.phi[0], expect, rtol=1e-12)


def test_disjoint_documents_separate():
    pc = disjoint_pair(seed=0)
    docs_words = [d.raw_text.split() for d in pc.corpus.documents]
    # oracle: an independent sampler reaches the same separation
    ref = np.array(reference_gibbs(docs_words, 2, 25.0, 0.01, 200, seed=0))
    assert (ref.max(axis=1) > 0.9).all() and ref[0].argmax() != ref[1].argmax()

    m = lda_fit(counts_of(pc.corpus), 2, seed=0)
    assert (m.theta.max(axis=1) > 0.9).all()
    assert m.theta[0].argmax() != m.theta[1].argmax()


@pytest.mark.parametrize("seed", range(4))
def test_distributions_normalized(seed):
    rng = np.random.default_rng(seed)
    docs = [prepared(f"d{i}", list(rng.choice(list("abcdefghij"), size=rng.integers(1, 40)))) for i in range(8)]
    _, counts = build_matrix(docs)
    m = lda_fit(counts, 3, iterations=20, seed=seed)
    assert np.allclose(m.phi.sum(axis=1), 1, atol=1e-9, rtol=0)
    assert np.allclose(m.theta.sum(axis=1), 1, atol=1e-9, rtol=0)
    assert (m.phi >= 0).all() and (m.theta >= 0).all()
    assert m.alpha == 50 / 3 and m.beta == 0.01


def test_count_tables_consistent_every_sweep():
    counts = counts_of(planted_corpus(n_docs=9, doc_length=40, seed=2).corpus)
    docs, words = lda_mod.expand_tokens(counts)
    n_tokens = int(counts.values.sum())
    seen = []

    def check(it, z, ndk, nkw, nk):
        assert ndk.sum() == nkw.sum() == nk.sum() == n_tokens == len(z)
        assert (ndk >= 0).all() and (nkw >= 0).all()
        assert np.array_equal(nk, nkw.sum(axis=1))
        assert np.array_equal(ndk.sum(axis=1), np.asarray(counts.values.sum(axis=1)).ravel())
        seen.append(it)

    lda_mod.gibbs_state(docs, words, *counts.values.shape, 3, 1.0, 0.01, 15, 4, on_sweep=check)
    assert seen == list(range(15))


def test_compiled_and_python_sweeps_agree():
    counts = counts_of(planted_corpus(n_docs=9, doc_length=40, seed=2).corpus)
    docs, words = lda_mod.expand_tokens(counts)
    args = (docs, words, *counts.values.shape, 3, 0.5, 0.01, 10, 11)
    a = lda_mod.gibbs_state(*args)
    b = lda_mod.gibbs_state(*args, sweep=lda_mod._sweep_py_lists)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)


def test_deterministic_given_seed():
    counts = counts_of(planted_corpus(n_docs=9, doc_length=40, seed=2).corpus)
    a = lda_fit(counts, 3, iterations=30, seed=5)
    b = lda_fit(counts, 3, iterations=30, seed=5)
    assert np.array_equal(a.phi, b.phi) and np.array_equal(a.theta, b.theta)


def test_expand_tokens():
    _, counts = build_matrix([prepared("a", ["x", "y", "x"]), prepared("b", ["y"])])
    docs, words = lda_mod.expand_tokens(counts)
    assert docs.tolist() == [0, 0, 0, 1]
    assert words.tolist() == [0, 0, 1, 1]


def test_errors():
    _, counts = build_matrix([prepared("a", ["x"]), prepared("b", ["y"])])
    with pytest.raises(ValidationError):
        lda_fit(counts, 0)
    with pytest.raises(ValidationError):
        lda_fit(tfidf(counts), 2)
