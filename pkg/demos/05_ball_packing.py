#!/usr/bin/env python3
"""Ball packing as blow-up: capacity rays and their critical values."""

from fractions import Fraction

import wallcross as wc

cp2 = wc.blow_up(0)
u = wc.from_areas(cp2, (1,))

# Fixed capacities first: packing balls of sizes c_i corresponds to a
# blow-up class with those areas on the new exceptional classes, and the
# class must keep every certified exceptional area positive.
target, u_c = wc.blowup_class(cp2, u, wc.BallConfig((Fraction(1, 3), Fraction(1, 3))))
print("two balls of capacity 1/3 in the unit plane:")
print("  target:", target.describe())
print("  class: ", wc.render_areas(target, u_c))

try:
    wc.blowup_class(cp2, u, wc.BallConfig((Fraction(3, 5), Fraction(3, 5))))
except wc.ValidationError as exc:
    print("two balls of capacity 3/5 fail:", exc)
print()


def show(profile):
    print(f"  c_max = {profile.c_max} ({profile.c_max_source})")
    if profile.critical_values:
        for wall in profile.walls:
            names = ", ".join(wc.render(profile.target, a) for a in wall.classes)
            print(f"  critical c = {wall.value}: {names}")
    else:
        print("  no interior critical values")
    for f in profile.flagged:
        print(f"  flagged c = {f.value}: {wc.render(profile.target, f.wall_class)}"
              f" (uncertified candidate)")
    for iv in profile.intervals:
        fwd = "forward" if iv.forward else "not forward"
        print(f"  ({iv.lower}, {iv.upper}): {fwd}, {iv.certification}")
    print()


# Growing one ball: no certified wall strictly inside (0, 1), but an
# uncertified square -3 candidate flips at 1/2 and is flagged.
print("one growing ball in the plane:")
show(wc.critical_capacities(cp2, u, wc.BallConfig((Fraction(1),), ray_mode=True)))

# Two equal balls: the certified wall H-E_1-E_2 gives the critical value
# 1/2; past it the ray also leaves the forward cone before c reaches 1.
print("two equal growing balls in the plane:")
show(wc.critical_capacities(cp2, u, wc.BallConfig((Fraction(1),) * 2, ray_mode=True)))

# On the sphere product the first ball rides the standard identification
# of the once-blown-up product with the twice-blown-up plane.
p = wc.product()
print("one growing ball in the unit sphere product:")
show(wc.critical_capacities(
    p, wc.from_areas(p, (1, 1)), wc.BallConfig((Fraction(1),), ray_mode=True)
))
