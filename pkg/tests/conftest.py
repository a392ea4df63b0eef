from pathlib import Path

import pytest

from corpus_lens import data_path, load_corpus
from corpus_lens.emotion import load_lexicon
from corpus_lens.textprep import Token, PreparedDocument

DATA = Path(__file__).parent / "data"
FIXTURE_LEXICON = Path(str(data_path("fixture_lexicon.tsv")))


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def fixture_lexicon():
    return load_lexicon(FIXTURE_LEXICON, pos_aware=True)


@pytest.fixture(scope="session")
def trio():
    return [load_corpus(DATA / name, name) for name in ("devotional", "forum", "news")]


def prepared(doc_id, words, pos="NOUN"):
    return PreparedDocument(doc_id, tuple(Token(w, w, pos) for w in words))
