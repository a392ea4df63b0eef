import os

import pytest

from corpus_lens import ValidationError, corpus_stats, load_corpus
from corpus_lens.corpus import Corpus, Document
from corpus_lens.textprep import StopList, default_stoplist, prepare


def test_documents_sorted_by_id(tmp_path):
    (tmp_path / "b.txt").write_text("x", encoding="utf-8")
    (tmp_path / "a.txt").write_text("y", encoding="utf-8")
    c = load_corpus(tmp_path, "demo")
    assert [d.id for d in c.documents] == ["a", "b"]
    assert c.documents[0].raw_text == "y"
    assert c.label == "demo"


def test_empty_directory(tmp_path):
    with pytest.raises(ValidationError, match="no documents"):
        load_corpus(tmp_path, "demo")


def test_missing_directory(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_corpus(tmp_path / "nope", "demo")


def test_non_txt_files_ignored(tmp_path):
    (tmp_path / "a.txt").write_text("one", encoding="utf-8")
    (tmp_path / "notes.md").write_text("two", encoding="utf-8")
    assert len(load_corpus(tmp_path, "demo")) == 1


def test_undecodable_file_named(tmp_path):
    (tmp_path / "good.txt").write_text("fine", encoding="utf-8")
    (tmp_path / "bad.txt").write_bytes(b"caf\xe9 latin-1")
    with pytest.raises(ValidationError, match="bad.txt"):
        load_corpus(tmp_path, "demo")


def test_twenty_files(tmp_path):
    for i in range(20):
        (tmp_path / f"article{i:02d}.txt").write_text(f"article number {i}", encoding="utf-8")
    c = load_corpus(tmp_path, "demo")
    assert len(c) == len([f for f in os.listdir(tmp_path) if f.endswith(".txt")]) == 20


def test_reload_is_identical(data_dir):
    assert load_corpus(data_dir / "news", "news") == load_corpus(data_dir / "news", "news")


def test_label_required():
    with pytest.raises(ValidationError):
        Corpus("", ())


def test_duplicate_ids_rejected():
    d = Document("a", "x", "a.txt")
    with pytest.raises(ValidationError):
        Corpus("c", (d, d))


def test_stats_single_doc():
    c = Corpus("c", (Document("a", "alpha beta gamma alpha delta", ""),))
    s = corpus_stats(c, StopList.from_words([]))
    assert (s.docs, s.tokens, s.vocab) == (1, 5, 4)


def test_stats_identical_docs_share_vocab():
    text = "faith hope courage faith"
    one = corpus_stats(Corpus("c", (Document("a", text, ""),)))
    two = corpus_stats(Corpus("c", (Document("a", text, ""), Document("b", text, ""))))
    assert two.vocab == one.vocab
    assert two.tokens == 2 * one.tokens


def test_stats_match_recount(data_dir):
    c = load_corpus(data_dir / "devotional", "devotional")
    stops = default_stoplist()
    # recount with a plain regex split, independent of the tokenizer classes
    import re

    per_doc = []
    vocab = set()
    for d in c.documents:
        words = [w.strip("'").lower() for w in re.split(r"[^A-Za-z']+", d.raw_text)]
        words = [w for w in words if w and w not in stops]
        per_doc.append(len(words))
        vocab.update(words)
    s = corpus_stats(c)
    assert s.docs == 5
    assert s.tokens == sum(per_doc)
    assert s.vocab == len(vocab)
    assert s.tokens == sum(len(prepare(d).tokens) for d in c.documents)
