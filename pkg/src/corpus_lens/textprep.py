"""Tokenization, stop-word filtering and coarse part-of-speech tagging."""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable

from .corpus import Document

NOUN, VERB, ADJ, ADV, OTHER = "NOUN", "VERB", "ADJ", "ADV", "OTHER"
POS_TAGS = (NOUN, VERB, ADJ, ADV, OTHER)

# Typographic apostrophes are folded into the ASCII one.
_APOSTROPHES = "'’ʼ"
_FRAGMENT = re.compile(r"(?:[^\W\d_]|[" + _APOSTROPHES + r"])+")
_APOS_FOLD = str.maketrans({c: "'" for c in _APOSTROPHES[1:]})


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    pos: str | None = None


@dataclass(frozen=True)
class StopList:
    words: frozenset

    def __post_init__(self):
        bad = [w for w in self.words if not w or w != w.lower()]
        if bad:
            raise ValueError(f"stop list entries must be non-empty lowercase strings: {sorted(bad)[:5]}")

    def __contains__(self, word):
        return word in self.words

    def __len__(self):
        return len(self.words)

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "StopList":
        return cls(frozenset(words))


@dataclass(frozen=True)
class PreparedDocument:
    doc_id: str
    tokens: tuple[Token, ...]

    @property
    def terms(self) -> list[str]:
        return [t.normalized for t in self.tokens]


def _split_alpha(fragment: str) -> list[str]:
    # \w accepts some numeric characters (superscripts, roman numerals) that
    # isalpha rejects; split on them as well.
    out, cur = [], []
    for ch in fragment:
        if ch.isalpha() or ch == "'":
            cur.append(ch)
        else:
            out.append("".join(cur))
            cur = []
    out.append("".join(cur))
    return out


def _normalize(surface: str) -> str:
    low = surface.lower()
    if all(c.isalpha() or c == "'" for c in low):
        return low
    # lower() can introduce combining marks (e.g. dotted capital I)
    return "".join(c for c in low if c.isalpha() or c == "'")


def tokenize(text: str) -> list[Token]:
    """Split `text` into word tokens.

    Any character that is neither a letter nor an apostrophe separates
    tokens. Leading and trailing apostrophes are stripped and empty
    fragments dropped, so digits, punctuation and symbols never survive.

    >>> [t.surface for t in tokenize("don't stop--now")]
    ["don't", 'stop', 'now']
    """
    tokens = []
    for m in _FRAGMENT.finditer(text):
        frag = m.group().translate(_APOS_FOLD)
        parts = [frag] if frag.replace("'", "").isalpha() or not frag.strip("'") else _split_alpha(frag)
        for part in parts:
            part = part.strip("'")
            if not part:
                continue
            norm = _normalize(part)
            if norm:
                tokens.append(Token(part, norm))
    return tokens


def normalize_and_filter(tokens: Iterable[Token], stops: StopList) -> list[Token]:
    """Lowercase tokens and drop stop words and anything containing digits."""
    out = []
    for tok in tokens:
        norm = tok.normalized or _normalize(tok.surface)
        if not norm or norm in stops or any(c.isdigit() for c in norm):
            continue
        out.append(replace(tok, normalized=norm) if norm != tok.normalized else tok)
    return out


# determiners, pronouns, prepositions, conjunctions, particles
_CLOSED_CLASS = frozenset(
    """
    a an the this that these those each every either neither some any no all both
    half several many much few little more most less least other another such what
    whatever which whichever whose whom who whoever i me my mine myself you your
    yours yourself yourselves he him his himself she her hers herself it its itself
    we us our ours ourselves they them their theirs themselves one ones someone
    somebody something anyone anybody anything everyone everybody everything
    nobody nothing none thee thou thy thine ye
    about above across after against along amid amidst among amongst around as at
    before behind below beneath beside besides between beyond by concerning despite
    down during except for from in inside into like near of off on onto opposite
    out outside over past per regarding round since than through throughout till to
    toward towards under underneath unlike until unto up upon via with within without
    and but or nor so yet for although though because whereas while whilst if unless
    whether lest once whenever wherever
    not n't to there here
    """.split()
)

_SUFFIX_RULES = (
    ("ly", ADV),
    ("ing", VERB),
    ("ed", VERB),
    ("ous", ADJ),
    ("ful", ADJ),
    ("ive", ADJ),
    ("al", ADJ),
)


def read_tag_lexicon(path) -> dict[str, str]:
    """Read a ``word<TAB>tag`` file; ``#`` lines are comments."""
    lex = {}
    if not hasattr(path, "read_text"):
        path = Path(path)
    text = path.read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or parts[1].strip() not in POS_TAGS:
            raise ValueError(f"{path}:{lineno}: expected 'word<TAB>tag' with tag in {POS_TAGS}")
        lex[parts[0].strip().lower()] = parts[1].strip()
    return lex


@lru_cache(maxsize=None)
def _bundled_tag_lexicon() -> dict[str, str]:
    return read_tag_lexicon(resources.files("corpus_lens") / "data" / "tagger_lexicon.tsv")


def tag_word(word: str, lexicon: dict[str, str] | None = None) -> str:
    """Coarse tag for a single normalized word.

    Lookup order: closed-class words, the open-class lexicon, suffix rules,
    then NOUN as the default.
    """
    if word in _CLOSED_CLASS:
        return OTHER
    lexicon = _bundled_tag_lexicon() if lexicon is None else lexicon
    tag = lexicon.get(word)
    if tag is not None:
        return tag
    for suffix, tag in _SUFFIX_RULES:
        if len(word) > len(suffix) + 1 and word.endswith(suffix):
            return tag
    return NOUN


def pos_tag(tokens: Iterable[Token], lexicon: dict[str, str] | None = None) -> list[Token]:
    return [replace(t, pos=tag_word(t.normalized, lexicon)) for t in tokens]


def read_stoplist(path) -> StopList:
    """One word per line; blank lines and ``#`` comments are ignored."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                words.add(line.lower())
    return StopList(frozenset(words))


@lru_cache(maxsize=None)
def default_stoplist() -> StopList:
    with resources.as_file(resources.files("corpus_lens") / "data" / "stopwords.txt") as p:
        return read_stoplist(p)


def prepare(doc: Document, stops: StopList | None = None, tag_lexicon=None) -> PreparedDocument:
    stops = default_stoplist() if stops is None else stops
    tokens = pos_tag(normalize_and_filter(tokenize(doc.raw_text), stops), tag_lexicon)
    return PreparedDocument(doc.id, tuple(tokens))


def prepare_corpus(corpus, stops: StopList | None = None, tag_lexicon=None) -> list[PreparedDocument]:
    return [prepare(d, stops, tag_lexicon) for d in corpus.documents]
