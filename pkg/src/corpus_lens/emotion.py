"""Lexicon-based scoring of the emotions a text is likely to evoke in readers.

A lexicon maps a word, optionally paired with a coarse part of speech, to
scores in [0, 1] over eight emotions. Article profiles are the summed
scores of matched tokens, L1-normalized across emotions.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError
from .textprep import ADJ, ADV, NOUN, VERB

EMOTIONS = ("AFRAID", "AMUSED", "ANGRY", "ANNOYED", "DONT_CARE", "HAPPY", "INSPIRED", "SAD")
N_EMOTIONS = len(EMOTIONS)

POS_SUFFIXES = {"n": NOUN, "v": VERB, "a": ADJ, "r": ADV}
_SUFFIX_FOR_POS = {v: k for k, v in POS_SUFFIXES.items()}


def _canonical_emotion(name: str) -> str:
    key = name.strip().upper().replace("'", "").replace(" ", "_").replace("-", "_")
    return "DONT_CARE" if key in ("DONTCARE", "DONT_CARE", "DON_T_CARE") else key


def emotion_index(emotion: str) -> int:
    try:
        return EMOTIONS.index(_canonical_emotion(emotion))
    except ValueError:
        raise ValidationError(f"unknown emotion {emotion!r}; expected one of {EMOTIONS}") from None


def parse_key(raw: str) -> tuple[str, str | None]:
    """Split ``word#p`` into (word, coarse POS); bare words get POS None."""
    raw = raw.strip()
    if "#" in raw:
        word, suffix = raw.rsplit("#", 1)
        pos = POS_SUFFIXES.get(suffix.strip().lower())
        if pos is None:
            raise ValidationError(f"unknown POS suffix in {raw!r}")
        return word.strip().lower(), pos
    return raw.lower(), None


@dataclass(eq=False)
class EmotionLexicon:
    """Word (or word, POS) keys mapped to 8 scores in the fixed emotion order.

    The constructor does not re-check score bounds; :func:`load_lexicon`
    and :func:`derive_lexicon` do.
    """

    entries: dict  # (word, pos | None) -> tuple of 8 floats
    pos_aware: bool = False
    _by_word: dict = field(init=False, repr=False)

    def __post_init__(self):
        grouped = defaultdict(list)
        for (word, _pos), scores in self.entries.items():
            grouped[word].append(scores)
        self._by_word = {
            w: rows[0] if len(rows) == 1 else tuple(np.mean(np.asarray(rows, dtype=float), axis=0).tolist())
            for w, rows in grouped.items()
        }

    def __len__(self):
        return len(self.entries)

    def lookup(self, word: str, pos: str | None = None):
        """Scores for a token, or None.

        POS-aware lexicons require an exact (word, POS) key. Otherwise the
        word alone is matched; POS variants of one word are averaged.
        """
        if self.pos_aware:
            return self.entries.get((word, pos))
        return self._by_word.get(word)

    def scaled(self, factor: float) -> "EmotionLexicon":
        return EmotionLexicon({k: tuple(factor * s for s in v) for k, v in self.entries.items()}, self.pos_aware)


@dataclass(frozen=True)
class EmotionProfile:
    scores: tuple  # 8 floats, sum 1 when defined, else all zero
    matched_tokens: int
    total_tokens: int
    defined: bool
    raw: tuple = (0.0,) * N_EMOTIONS
    excluded: int = 0  # undefined article profiles left out of an aggregate

    def as_dict(self) -> dict:
        return dict(zip(EMOTIONS, self.scores))

    def to_dict(self) -> dict:
        return {
            "scores": list(self.scores),
            "matched_tokens": self.matched_tokens,
            "total_tokens": self.total_tokens,
            "defined": self.defined,
            "raw": list(self.raw),
            "excluded": self.excluded,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EmotionProfile":
        return cls(
            tuple(d["scores"]),
            d["matched_tokens"],
            d["total_tokens"],
            d["defined"],
            tuple(d["raw"]),
            d.get("excluded", 0),
        )


@dataclass
class AnnotationMatrices:
    """Crowd annotations: per-document emotion ratings and word counts."""

    doc_emotion: np.ndarray  # documents x 8
    word_document: np.ndarray  # words x documents
    words: Sequence[str] = ()

    def __post_init__(self):
        self.doc_emotion = np.asarray(self.doc_emotion, dtype=np.float64)
        self.word_document = np.asarray(self.word_document, dtype=np.float64)
        if self.doc_emotion.ndim != 2 or self.doc_emotion.shape[1] != N_EMOTIONS:
            raise ValidationError(f"doc_emotion must be documents x {N_EMOTIONS}")
        if self.word_document.ndim != 2 or self.word_document.shape[1] != self.doc_emotion.shape[0]:
            raise ValidationError(
                f"dimension mismatch: word_document {self.word_document.shape} vs doc_emotion {self.doc_emotion.shape}"
            )
        if (self.doc_emotion < 0).any() or (self.word_document < 0).any():
            raise ValidationError("annotation matrices must be nonnegative")
        if not self.words:
            self.words = [f"w{i}" for i in range(self.word_document.shape[0])]
        if len(self.words) != self.word_document.shape[0]:
            raise ValidationError("one word label per word_document row required")


def load_lexicon(path, pos_aware: bool = False) -> EmotionLexicon:
    """Read a tab-separated lexicon.

    The header names a key column followed by emotion columns (any order,
    other columns ignored). Keys are ``word`` or ``word#p`` with p one of
    n, v, a, r. With `pos_aware`, every key must carry a POS suffix.
    """
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ValidationError(f"{path}: empty lexicon file (header required)")
    header = lines[0].split("\t")
    cols = {}
    for j, name in enumerate(header[1:], 1):
        canon = _canonical_emotion(name)
        if canon in EMOTIONS:
            cols[canon] = j
    missing = [e for e in EMOTIONS if e not in cols]
    if missing:
        raise ValidationError(f"{path}: header lacks emotion columns {missing}")
    order = [cols[e] for e in EMOTIONS]

    entries = {}
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != len(header):
            raise ValidationError(f"{path}:{lineno}: expected {len(header)} columns, found {len(fields)}")
        key = parse_key(fields[0])
        if not key[0]:
            raise ValidationError(f"{path}:{lineno}: empty word")
        if pos_aware and key[1] is None:
            raise ValidationError(f"{path}:{lineno}: POS-aware lexicon entry {fields[0]!r} has no #pos suffix")
        try:
            scores = tuple(float(fields[j]) for j in order)
        except ValueError:
            raise ValidationError(f"{path}:{lineno}: non-numeric score") from None
        for e, s in zip(EMOTIONS, scores):
            if not 0.0 <= s <= 1.0:
                raise ValidationError(f"{path}:{lineno}: {e} score {s} outside [0, 1]")
        if key in entries:
            raise ValidationError(f"{path}:{lineno}: duplicate key {fields[0]!r}")
        entries[key] = scores
    return EmotionLexicon(entries, pos_aware)


def write_lexicon(lex: EmotionLexicon, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\t".join(("word",) + EMOTIONS) + "\n")
        for (word, pos), scores in sorted(lex.entries.items(), key=lambda kv: (kv[0][0], kv[0][1] or "")):
            key = word if pos is None else f"{word}#{_SUFFIX_FOR_POS[pos]}"
            fh.write("\t".join([key] + [repr(float(s)) for s in scores]) + "\n")


def _normalize(raw: Sequence[float]) -> tuple[tuple, bool]:
    total = math.fsum(raw)
    if total <= 0:
        return (0.0,) * N_EMOTIONS, False
    return tuple(r / total for r in raw), True


def score_document(doc, lex: EmotionLexicon) -> EmotionProfile:
    """Profile of one prepared document.

    Every token occurrence that matches the lexicon adds its scores; sums
    are exact-rounded (fsum), so the result does not depend on token order.
    """
    matched = []
    for tok in doc.tokens:
        scores = lex.lookup(tok.normalized, tok.pos)
        if scores is not None:
            matched.append(scores)
    raw = tuple(math.fsum(col) for col in zip(*matched)) if matched else (0.0,) * N_EMOTIONS
    scores, defined = _normalize(raw)
    return EmotionProfile(scores, len(matched), len(doc.tokens), defined, raw)


def aggregate_corpus(profiles: Iterable[EmotionProfile], pooling: str = "macro") -> EmotionProfile:
    """Combine article profiles into one corpus profile.

    ``macro`` averages the normalized profiles of defined articles;
    ``micro`` pools raw scores over all matched tokens. Undefined articles
    are left out either way and counted in ``excluded``.
    """
    profiles = list(profiles)
    defined = [p for p in profiles if p.defined]
    if not defined:
        raise ValidationError("no article matched the lexicon; corpus profile undefined")
    if pooling == "macro":
        n = len(defined)
        mean = tuple(math.fsum(col) / n for col in zip(*(p.scores for p in defined)))
    elif pooling == "micro":
        mean = tuple(math.fsum(col) for col in zip(*(p.raw for p in defined)))
    else:
        raise ValidationError(f"pooling must be 'macro' or 'micro', got {pooling!r}")
    scores, _ = _normalize(mean)
    raw = tuple(math.fsum(col) for col in zip(*(p.raw for p in defined)))
    return EmotionProfile(
        scores,
        sum(p.matched_tokens for p in profiles),
        sum(p.total_tokens for p in profiles),
        True,
        raw,
        excluded=len(profiles) - len(defined),
    )


def top_emotion_words(docs, lex: EmotionLexicon, emotion: str = "INSPIRED", n: int = 10) -> list[tuple[str, float]]:
    """Corpus words with the highest lexicon score for `emotion`.

    A word seen with several matching POS keys keeps its best score.
    """
    j = emotion_index(emotion)
    best: dict[str, float] = {}
    for doc in docs:
        for tok in doc.tokens:
            scores = lex.lookup(tok.normalized, tok.pos)
            if scores is not None and scores[j] > best.get(tok.normalized, -1.0):
                best[tok.normalized] = scores[j]
    return sorted(best.items(), key=lambda kv: (-kv[1], kv[0]))[:n]


def derive_lexicon(m: AnnotationMatrices) -> EmotionLexicon:
    """Word-emotion lexicon from annotation matrices.

    ``word_document @ doc_emotion`` gives raw word scores; each row is then
    divided by its maximum so scores land in [0, 1]. All-zero rows are
    dropped.
    """
    product = m.word_document @ m.doc_emotion
    entries = {}
    for word, row in zip(m.words, product):
        peak = row.max()
        if peak <= 0:
            continue
        key = parse_key(word)
        if key in entries:
            raise ValidationError(f"duplicate word {word!r}")
        entries[key] = tuple((row / peak).tolist())
    pos_aware = bool(entries) and all(pos is not None for _, pos in entries)
    return EmotionLexicon(entries, pos_aware)
