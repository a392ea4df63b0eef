"""Loading labeled corpora from directories of plain-text files."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ValidationError


@dataclass(frozen=True)
class Document:
    id: str
    raw_text: str
    source_path: str


@dataclass(frozen=True)
class Corpus:
    label: str
    documents: tuple[Document, ...]

    def __post_init__(self):
        if not self.label:
            raise ValidationError("corpus label must be non-empty")
        ids = [d.id for d in self.documents]
        if len(set(ids)) != len(ids):
            raise ValidationError(f"duplicate document ids in corpus {self.label!r}")

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)


@dataclass(frozen=True)
class CorpusStats:
    docs: int
    tokens: int
    vocab: int

    def to_dict(self) -> dict:
        return {"docs": self.docs, "tokens": self.tokens, "vocab": self.vocab}


def load_corpus(dir_path, label: str) -> Corpus:
    """Read every ``*.txt`` file in `dir_path` as one document.

    Documents are ordered by id (the file stem). Files must be UTF-8;
    anything else raises :class:`ValidationError` naming the file.
    """
    root = Path(dir_path)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {root}")
    paths = sorted(p for p in root.glob("*.txt") if p.is_file())
    if not paths:
        raise ValidationError(f"no documents in {root}")
    docs = []
    for p in paths:
        try:
            text = p.read_bytes().decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ValidationError(f"{p}: not valid UTF-8 ({exc.reason} at byte {exc.start})") from None
        docs.append(Document(id=p.stem, raw_text=text, source_path=str(p)))
    docs.sort(key=lambda d: d.id)
    return Corpus(label=label, documents=tuple(docs))


def corpus_stats(corpus: Corpus, stops=None, prepared=None) -> CorpusStats:
    """Document, token and vocabulary counts after preprocessing.

    `prepared` may pass already prepared documents to avoid redoing the work.
    """
    from .textprep import default_stoplist, prepare

    if prepared is None:
        stops = default_stoplist() if stops is None else stops
        prepared = [prepare(d, stops) for d in corpus.documents]
    vocab = set()
    n_tokens = 0
    for pd in prepared:
        n_tokens += len(pd.tokens)
        vocab.update(t.normalized for t in pd.tokens)
    return CorpusStats(docs=len(corpus.documents), tokens=n_tokens, vocab=len(vocab))
