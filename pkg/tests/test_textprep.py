import re

import pytest
from hypothesis import given, strategies as st

from corpus_lens.corpus import Document
from corpus_lens.textprep import (
    ADJ, ADV, NOUN, OTHER, POS_TAGS, VERB,
    StopList, Token, default_stoplist, normalize_and_filter, pos_tag, prepare,
    read_stoplist, read_tag_lexicon, tag_word, tokenize,
)

PAPER_SENTENCE = "After sleeping for four hours, he decided to sleep for another four."


def surfaces(tokens):
    return [t.surface for t in tokens]


def reference_tokenize(text):
    """Character-class reference: letters and apostrophes form words."""
    out, cur = [], ""
    for ch in text:
        if ch.isalpha() or ch == "'":
            cur += ch
        else:
            out.append(cur)
            cur = ""
    out.append(cur)
    return [w.strip("'") for w in out if w.strip("'")]


def test_paper_sentence():
    assert surfaces(tokenize(PAPER_SENTENCE)) == [
        "After", "sleeping", "for", "four", "hours", "he", "decided", "to", "sleep", "for", "another", "four",
    ]


def test_empty():
    assert tokenize("") == []


def test_apostrophes_and_dashes():
    text = "don't stop\u2014now"
    assert surfaces(tokenize(text)) == reference_tokenize(text) == ["don't", "stop", "now"]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("'quoted' words", ["quoted", "words"]),
        ("state-of-the-art", ["state", "of", "the", "art"]),
        ("room 101b", ["room", "b"]),
        ("hijrah, khilāfah!", ["hijrah", "khilāfah"]),
        ("it’s typographic", ["it's", "typographic"]),
        ("x² + y³", ["x", "y"]),
        ("''' ...", []),
    ],
)
def test_tokenize_cases(text, expected):
    assert surfaces(tokenize(text)) == expected


@given(st.text(alphabet=st.characters(codec="utf-8", exclude_characters="’ʼ"), max_size=200))
def test_matches_reference(text):
    assert surfaces(tokenize(text)) == reference_tokenize(text)


@given(st.text(max_size=200))
def test_token_invariants(text):
    for t in tokenize(text):
        assert t.normalized
        assert all(c.isalpha() or c == "'" for c in t.normalized)
        assert not t.normalized.startswith("'") and not t.normalized.endswith("'")
        assert not any(c.isdigit() for c in t.surface)


@given(st.text(alphabet="abcDEF gh'Ij1,.", max_size=100))
def test_lowercase_commutes(text):
    assert [t.normalized for t in tokenize(text.lower())] == [t.normalized for t in tokenize(text)]


def test_filter_stop_words():
    toks = tokenize("After sleeping for four")
    out = normalize_and_filter(toks, StopList.from_words({"after", "for"}))
    assert [t.normalized for t in out] == ["sleeping", "four"]


def test_filter_all_stop_words():
    assert normalize_and_filter(tokenize("the and of"), default_stoplist()) == []


def test_default_stoplist():
    stops = default_stoplist()
    assert len(stops) == 318
    text = "a about above across after afterwards again"
    assert normalize_and_filter(tokenize(text), stops) == []
    assert sorted(stops.words)[:7] == text.split()


def test_stoplist_file(tmp_path):
    p = tmp_path / "stops.txt"
    p.write_text("# custom\nfoo\n\nBar  # trailing comment\n", encoding="utf-8")
    assert read_stoplist(p).words == {"foo", "bar"}


def test_stoplist_requires_lowercase():
    with pytest.raises(ValueError):
        StopList(frozenset({"Foo"}))


@given(st.text(max_size=300))
def test_filter_stages_monotone(text):
    toks = tokenize(text)
    filtered = normalize_and_filter(toks, default_stoplist())
    tagged = pos_tag(filtered)
    assert len(toks) >= len(filtered) == len(tagged)
    for t in tagged:
        assert t.normalized not in default_stoplist()
        assert t.normalized == t.normalized.lower()
        assert t.pos in POS_TAGS


@pytest.mark.parametrize(
    "word, tag",
    [
        ("running", VERB),  # lexicon
        ("quickly", ADV),  # lexicon
        ("the", OTHER),  # closed class
        ("husband", NOUN),
        ("glorbing", VERB),  # suffix rules below: words absent from the lexicon
        ("glorbed", VERB),
        ("zibbly", ADV),
        ("marvous", ADJ),
        ("zestful", ADJ),
        ("blorptive", ADJ),
        ("zintal", ADJ),
        ("khilafah", NOUN),  # default
    ],
)
def test_tag_word(word, tag):
    assert tag_word(word) == tag


def test_suffix_rules_apply_outside_lexicon():
    assert tag_word("running", lexicon={}) == VERB
    assert tag_word("quickly", lexicon={}) == ADV
    assert tag_word("sleep", lexicon={}) == NOUN
    assert tag_word("sleep", lexicon={"sleep": VERB}) == VERB


def test_bundled_tag_lexicon_size():
    from corpus_lens import data_path

    lex = read_tag_lexicon(data_path("tagger_lexicon.tsv"))
    assert len(lex) == 5000
    assert set(lex.values()) <= {NOUN, VERB, ADJ, ADV}


def test_tag_lexicon_format_errors(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("word\tNOUN\nbad line\n", encoding="utf-8")
    with pytest.raises(ValueError, match=":2:"):
        read_tag_lexicon(p)


def test_tagging_is_deterministic():
    toks = normalize_and_filter(tokenize(PAPER_SENTENCE), default_stoplist())
    assert pos_tag(toks) == pos_tag(toks)


def test_prepare_paper_sentence():
    pd = prepare(Document("s", PAPER_SENTENCE, ""))
    stops = default_stoplist()
    expected = [w for w in ("after sleeping for four hours he decided to sleep for another four").split() if w not in stops]
    assert pd.terms == expected == ["sleeping", "hours", "decided", "sleep"]
    assert [t.pos for t in pd.tokens] == [VERB, NOUN, VERB, VERB]


def test_prepare_punctuation_only():
    assert prepare(Document("p", "!!! ???", "")).tokens == ()


@given(st.text(max_size=300))
def test_prepare_idempotent(text):
    first = prepare(Document("x", text, ""))
    again = prepare(Document("x", " ".join(first.terms), ""))
    assert sorted(again.terms) == sorted(first.terms)
