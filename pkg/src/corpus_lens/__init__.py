"""Topic and evoked-emotion analysis for small labeled text corpora."""

from importlib import resources

__version__ = "0.1.0"


def data_path(name: str):
    """Path to a bundled data file (``stopwords.txt``, ``fixture_lexicon.tsv``, ...)."""
    return resources.files("corpus_lens") / "data" / name


from .corpus import Corpus, Document, corpus_stats, load_corpus  # noqa: E402
from .errors import ValidationError  # noqa: E402

__all__ = ["Corpus", "Document", "ValidationError", "corpus_stats", "data_path", "load_corpus"]
