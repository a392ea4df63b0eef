"""
Scoring evoked emotions with a lexicon
======================================

Score documents against the small bundled fixture lexicon, pool the
profiles per corpus, and build a lexicon from annotated documents.
"""

# %%
from pathlib import Path

import numpy as np

from corpus_lens import data_path, load_corpus
from corpus_lens.emotion import (
    EMOTIONS, AnnotationMatrices, aggregate_corpus, derive_lexicon, load_lexicon, score_document, top_emotion_words,
)
from corpus_lens.textprep import prepare_corpus

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"

# %%
# The fixture lexicon is made up for testing. Real analyses would load a
# full resource such as DepecheMood in the same TSV layout. With
# ``pos_aware=True`` a word matches only under its tagged part of speech.
lexicon = load_lexicon(data_path("fixture_lexicon.tsv"), pos_aware=True)
print(len(lexicon), "entries")

# %%
# Each document gets a profile that sums to one. A document with no
# matching word is flagged undefined and left out of the corpus mean.
docs = prepare_corpus(load_corpus(DATA / "devotional", "devotional"))
profiles = [score_document(d, lexicon) for d in docs]
for d, p in zip(docs, profiles):
    best = EMOTIONS[int(np.argmax(p.scores))] if p.defined else "-"
    print(f"{d.doc_id}: {p.matched_tokens}/{p.total_tokens} tokens matched, top {best}")

overall = aggregate_corpus(profiles)
for name, value in overall.as_dict().items():
    print(f"{name:10s} {value:.3f}")
print("excluded documents:", overall.excluded)

# %%
# Which words push the INSPIRED score?
print(top_emotion_words(docs, lexicon, "INSPIRED", 5))

# %%
# A lexicon can also be derived from documents with known emotion votes:
# each word's row is its document weights times the document emotions,
# rescaled so the largest entry is one.
doc_emotion = np.array([[0, 0, 0, 0, 0, 1, 3, 0], [2, 0, 1, 0, 0, 0, 0, 1]], dtype=float)
word_document = np.array([[3, 0], [1, 1], [0, 2]], dtype=float)
derived = derive_lexicon(AnnotationMatrices(doc_emotion, word_document, ["sunrise", "river", "storm"]))
for (word, _), row in derived.entries.items():
    print(word, [round(x, 3) for x in row])
