"""
The classification grid
=======================

Counts of homeomorphism classes that are not projectivization towers
(non-Bott classes), over each product of simplices up to dimension 5,
computed twice: by the closed formula and by exhaustive enumeration of
bounded characteristic pairs.
"""

from qtoric import count_nonbott, enumerate_classes, is_nonbott_class

print("n  m  closed-form  enumerated")
for n in range(1, 6):
    for m in range(1, n + 1):
        classes = enumerate_classes(n, m, 2)
        found = sum(1 for c in classes if is_nonbott_class(c))
        marker = "" if found == count_nonbott(n, m) else "  <- MISMATCH"
        print("%d  %d  %11d  %10d%s" % (n, m, count_nonbott(n, m), found, marker))

# The even/odd pattern for a segment factor is visible above: zero classes
# for even n, two for odd n >= 3, and the single connected sum over the
# square of segments.

# Every class over the product of two 2-simplices, with a representative
# pair for each.  The lone non-Bott class is the folded (s=1, r=1) one.
print()
print("classes over the square of 2-simplices (entries bounded by 2):")
for c in enumerate_classes(2, 2, 2):
    rep = c.representative
    print("  %-12s  a=%s b=%s" % (c.family, rep.a, rep.b))
