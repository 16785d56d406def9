"""The same structures over small prime fields, where everything is checkable by brute force.

Over F_p the projective curve has exactly p points (the parametrization is
a bijection from the field), so every law, identity, and geometric
construction can be verified by exhausting all points, pairs, and lines.
"""

import itertools

from descartes_folium import (
    Folium,
    PrimeField,
    all_lines,
    geometric_mul,
    line_curve_intersections,
    pbar,
    proj_mul,
    proj_mul2,
)

for p in (5, 7, 13):
    field = PrimeField(p)
    curve = Folium(field, 1)
    points = curve.enumerate_points()
    roots = field.epsilon_roots()
    print(f"F_{p}: {len(points)} curve points; epsilon roots: {roots}")
    if p == 5:
        print(f"      {points}")

print()
field = PrimeField(5)
curve = Folium(field, 1)
group = [point for point in curve.enumerate_points() if point != curve.origin]

print("multiplication table of the 4-element group (F_5, a = 1), vertex neutral:")
for p1 in group:
    row = "  ".join(str(proj_mul(curve, p1, p2)) for p2 in group)
    print(f"  {p1}:  {row}")

print()
agree = all(
    proj_mul(curve, p1, p2) == proj_mul2(curve, p1, p2) == geometric_mul(curve, p1, p2)
    for p1, p2 in itertools.product(group, repeat=2)
)
print(f"both transports and the chord construction agree on all pairs: {agree}")

print()
split = 0
for line in all_lines(field):
    if line.through_origin:
        continue
    if sum(mult for _, mult in line_curve_intersections(curve, line)) == 3:
        split += 1
print(f"lines of P^2(F_5) avoiding the node that meet the curve three times: {split} of 25")

print()
seven = Folium(PrimeField(7), 1)
e1, e2 = PrimeField(7).epsilon_roots()
extra = [pbar(seven, t) for t in (e1, e2)]
print(f"over F_7 the epsilon roots {e1}, {e2} put two extra points at infinity: {extra}")
print("that is exactly the obstruction to the affine exotic laws over F_7.")
