#!/usr/bin/env python3
"""Wall structure on the sphere product and stability verdicts."""

from fractions import Fraction

import wallcross as wc

p = wc.product()


def u_of(mu):
    return wc.from_areas(p, (Fraction(mu), 1))


# With areas (mu, 1) the negative sphere classes with positive area are
# exactly B-mF for integers 1 <= m < mu: one new class per integer wall.
for mu in ("3/2", "5/2", "9/2"):
    classes = wc.spherical_set(p, u_of(mu)).classes
    names = ", ".join(wc.render(p, a) for a in classes) or "(none)"
    print(f"mu = {mu:>4}: {names}")
print()

# Two forms in one chamber: no separating class, full stability.
v = wc.max_stable_level(p, u_of("5/2"), u_of("27/10"))
print("5/2 -> 27/10:", v.mode)

# Crossing the wall at mu = 3 loses nothing but gains B-3F (square -6):
# homotopy groups agree in degrees 1..7 and no further.
v = wc.max_stable_level(p, u_of("5/2"), u_of("7/2"))
print(f"5/2 -> 7/2: Level({v.level}), degrees {v.iso_range[0]}..{v.iso_range[1]}")
for line in v.justification:
    print("  ", line)
print()

# A certificate walks the segment chamber by chamber and re-verifies the
# set difference across every wall before trusting the verdict.
cert = wc.certify(p, u_of("5/2"), u_of("9/2"))
print("certificate for 5/2 -> 9/2:")
for w in cert.walls:
    print(f"  t* = {w.t_star}: {w.direction} {wc.render(p, w.wall_class)}")
print("  chain relations:", [link.relation for link in cert.chain])
print("  verdict:", cert.verdict.mode, cert.verdict.level)
