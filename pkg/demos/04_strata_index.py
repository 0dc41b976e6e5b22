#!/usr/bin/env python3
"""Admissible labels and the finite stratification index of a form."""

from fractions import Fraction

import wallcross as wc

p = wc.product()
u = wc.from_areas(p, (Fraction(5, 2), 1))
v = wc.from_areas(p, (Fraction(7, 2), 1))

# An admissible label is a set of negative sphere classes with pairwise
# nonnegative intersections; its codimension is the sum of 2(-A.A-1).
root = wc.LatticeClass((1, -1))
deep = wc.LatticeClass((1, -2))
print("cod(B-F)  =", wc.cod(p, root))
print("cod(B-2F) =", wc.cod(p, deep))
print("B-F . B-2F =", wc.pairing(p, root, deep), "so the pair is not admissible:",
      wc.is_admissible(p, [root, deep]))
print()

# Below a fixed even level the index is a finite list of labels.
for level in (4, 10):
    index = wc.enumerate_admissible(p, u, level)
    print(f"index of u = (5/2, 1) at level {level}:")
    for st in index.strata:
        label = ", ".join(wc.render(p, a) for a in st.classes) or "(empty label)"
        print(f"  codim {st.codim:>2}: {label}")
    print(f"  residual codimension >= {index.residual_codim}")
    print()

# The forms (5/2, 1) and (7/2, 1) differ only through B-3F, whose stratum
# has codimension 10: the indexes agree up to level 10 and split at 12.
for level in (10, 12):
    same = wc.compare_levels(p, u, v, level)
    print(f"level {level:>2}: indexes {'agree' if same else 'differ'}")
