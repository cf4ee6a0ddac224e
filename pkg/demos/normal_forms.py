"""
Characteristic pairs: validity, normal forms, class labels
==========================================================

A walk through the core data model.  A manifold over a product of two
simplices of dimensions n and m is encoded by a pair of integer vectors
a (length m) and b (length n); the pair is admissible exactly when every
product a_j * b_i is 0 or 2.
"""

import json

from qtoric import CharPair, canonical_class, normalize, validate

# Three pairs over the 2-simplex times the segment.  The first twists the
# segment factor once, the second twists nothing, the third breaks the
# product condition.
candidates = [
    CharPair(2, 1, (2,), (1, 0)),
    CharPair(2, 1, (0,), (0, 0)),
    CharPair(2, 1, (2,), (2, 0)),
]

for cp in candidates:
    print("a=%s b=%s  valid=%s" % (cp.a, cp.b, validate(cp)))

print()

# Normalization sorts each vector, fixes signs, and swaps the factors when
# the second simplex is larger.  Entry order and global sign never matter.
messy = CharPair(2, 1, (-2,), (0, -1))
nf = normalize(messy)
print("normalized:", nf.a, nf.b, "orientation=%s" % nf.orientation)

tidy = CharPair(2, 1, (2,), (1, 0))
assert normalize(tidy) == nf

# The class label is the homeomorphism type.  These two pairs look quite
# different but land in the same class: over a segment factor only the
# parity of the number of twisted entries survives.
cp1 = CharPair(3, 1, (1,), (2, 0, 0))
cp2 = CharPair(3, 1, (1,), (2, 2, 2))
print()
print("label of", cp1.a, cp1.b, "->", canonical_class(cp1).family)
print("label of", cp2.a, cp2.b, "->", canonical_class(cp2).family)

# Labels serialize to JSON for scripting; the representative is a smallest
# pair realizing the class.
print()
print(json.dumps(canonical_class(cp1).to_json_dict(), indent=2, sort_keys=True))
