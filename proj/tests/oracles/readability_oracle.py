"""Hand-rule readability values for tests/data/readability_reference.txt.

Independent of the C++ code: sentence and token splitting, syllable and
letter counts are re-derived here from the written rules, then the standard
index formulas are applied.
"""
import math
import re
import sys

text = open(sys.argv[1], encoding="utf-8").read()
sentences = [s for s in re.split(r"(?<=[.!?])\s+(?=[A-Z])", text.strip()) if s]
tokens = re.findall(r"[A-Za-z0-9']+", text)


def syllables(word):
    w = "".join(c for c in word.lower() if c.isalpha())
    groups = len(re.findall(r"[aeiouy]+", w))
    if len(w) >= 2 and w[-1] == "e" and w[-2] not in "aeiouy":
        if not (len(w) >= 3 and w[-2] == "l" and w[-3] not in "aeiouy"):
            groups -= 1
    return max(groups, 1)


W = len(tokens)
STC = len(sentences)
SY = sum(syllables(t) for t in tokens)
CH = sum(1 for c in text if not c.isspace())
letters = sum(1 for t in tokens for c in t if c.isalpha())
complex_words = sum(1 for t in tokens if syllables(t) >= 3)

wps, spw = W / STC, SY / W
vals = {
    "W": W, "STC": STC, "SY": SY, "CH": CH, "letters": letters, "complex": complex_words,
    "FRI": 206.835 - 1.015 * wps - 84.6 * spw,
    "FKI": 0.39 * wps + 11.8 * spw - 15.59,
    "GFI": 0.4 * (wps + 100 * complex_words / W),
    "CLI": 0.0588 * (100 * letters / W) - 0.296 * (100 * STC / W) - 15.8,
    "ARI": 4.71 * CH / W + 0.5 * wps - 21.43,
    "MSI": 1.0430 * math.sqrt(complex_words * 30 / STC) + 3.1291,
}
for k, v in vals.items():
    print(f"{k} = {v!r}")
