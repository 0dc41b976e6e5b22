#!/usr/bin/env python3
"""Surfaces, the intersection pairing, and the reduction walk."""

from fractions import Fraction

import wallcross as wc

# The two surface families: the sphere product, and the plane blown up in
# k points.  Everything downstream is exact rational arithmetic on the
# second cohomology lattice.
p = wc.product()
s3 = wc.blow_up(3)

print(p.describe())
print(s3.describe())
print()

# Basis classes pair through the Gram form of the surface.
B, F = p.basis()
print("B.B =", wc.pairing(p, B, B))
print("B.F =", wc.pairing(p, B, F))
print("K =", wc.render(p, p.canonical), "with K.K =", p.canonical_square)
print()

H, E1, E2, E3 = s3.basis()
print("H.H =", wc.pairing(s3, H, H))
print("E_1.E_1 =", wc.pairing(s3, E1, E1))
print("K =", wc.render(s3, s3.canonical), "with K.K =", s3.canonical_square)
print()

# The sphere constraint: K.A + A.A + 2 must vanish for an embedded sphere.
for coords in ((0, 1, 0, 0), (1, -1, -1, 0), (-1, 2, 0, 0), (1, -2, 0, 0)):
    a = wc.LatticeClass(coords)
    defect = wc.adjunction_defect(s3, a)
    verdict = "sphere candidate" if defect == 0 else f"defect {defect}"
    print(f"{wc.render(s3, a):>12}  square {wc.square(s3, a):>3}  {verdict}")
print()

# Symplectic classes are entered by areas.  Reduction sorts the blow-up
# areas and applies Cremona moves until the class is in the fundamental
# chamber; the returned word replays the walk exactly.
u = wc.from_areas(s3, (10, 1, 4, 2))
red, word = wc.reduce(s3, u)
print("start   ", wc.render_areas(s3, u))
print("reduced ", wc.render_areas(s3, red))
print("word    ", [(m.kind, m.indices) for m in word])
assert wc.apply_word(s3, word, u) == red
assert wc.apply_word(s3, wc.invert_word(word), red) == u
print("word replay and inverse replay both check out")
