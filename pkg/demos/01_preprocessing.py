"""
Tokens, stop words and part-of-speech tags
==========================================

Walk one sentence through the preprocessing chain and look at what each
stage keeps.
"""

# %%
# Tokenizing keeps letters and apostrophes, so punctuation and digits fall
# away while the original casing survives in ``surface``.
from corpus_lens import Document
from corpus_lens.textprep import default_stoplist, prepare, tokenize

sentence = "After sleeping for four hours, he decided to sleep for another four."
tokens = tokenize(sentence)
print([t.surface for t in tokens])

# %%
# The bundled stop list has 318 entries. Removing them leaves the content
# words, lower-cased.
stops = default_stoplist()
print(len(stops), "stop words")
print("four" in stops, "sleep" in stops)

# %%
# ``prepare`` runs the whole chain on a document and attaches a coarse tag
# from the rule tagger to every surviving token.
doc = Document("demo", sentence, "<inline>")
for tok in prepare(doc).tokens:
    print(f"{tok.surface:10s} {tok.normalized:10s} {tok.pos}")

# %%
# Curly apostrophes are folded to the ASCII one before splitting, which
# keeps contractions in one piece.
print([t.surface for t in tokenize("Don’t worry, it’s fine")])
