#!/usr/bin/env python3
"""Enumerating negative sphere classes and the sets attached to a form."""

from fractions import Fraction

import wallcross as wc

# Exceptional classes (square -1) per number of blow-ups.  The counts are
# the classical line counts on del Pezzo surfaces.
print("square -1 class counts:")
for k in range(1, 9):
    n = len(wc.enumerate_candidates(wc.blow_up(k), -1).classes)
    print(f"  k={k}: {n}")
print()

s = wc.blow_up(3)
print("the six exceptional classes for k=3:")
for a in wc.enumerate_candidates(s, -1).classes:
    print("  ", wc.render(s, a))
print()

# A symplectic form picks out the classes with positive area.  The search
# depth needed for the full set is computed from the form itself, so the
# result is certified complete.
s1 = wc.blow_up(1)
u = wc.from_areas(s1, (1, Fraction(3, 4)))
full = wc.spherical_set(s1, u)
print(f"full sphere-class set of {wc.render_areas(s1, u)} "
      f"(certified floor -{full.square_floor}):")
for sq, classes in full.by_square().items():
    names = ", ".join(wc.render(s1, a) for a in classes)
    print(f"  square {sq}: {names}")
print()

# Certification tiers: square -1 and -2 classes carry a finite certificate
# (Cremona reduction resp. the root property); deeper candidates do not.
graded = wc.spherical_set(s1, u, certification=wc.CERTIFIED_TIER)
for a, status in graded.status:
    print(f"  {wc.render(s1, a):>8}  [{status}]")
print()

# On the 9-fold blow-up no finiteness bound exists; enumeration demands an
# explicit coefficient box and reports the truncation.
s9 = wc.blow_up(9)
try:
    wc.enumerate_candidates(s9, -2)
except wc.MissingBoundsError as exc:
    print("k=9 without a box:", exc)
boxed = wc.enumerate_candidates(s9, -2, wc.EnumerationBounds(coefficient_box=2))
print(f"k=9 with |c| <= 2: {len(boxed.classes)} roots, complete={boxed.complete}")
