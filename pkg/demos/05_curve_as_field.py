"""The curve itself is a field: points add, multiply, and distribute.

Extending the multiplicative law by letting the node absorb (O . A = O)
pairs it with the additive law into a full field structure on the curve,
with O playing zero and the vertex playing one.  The coordinate swap is a
field isomorphism onto the second such structure.
"""

import itertools
from fractions import Fraction

from descartes_folium import (
    DivisionByZeroPoint,
    Folium,
    PrimeField,
    Rationals,
    add_south,
    add_west,
    folium_div,
    folium_inv,
    folium_mul,
    pbar,
    sigma,
)

field = Rationals()
curve = Folium(field, 1)
point = lambda v: pbar(curve, field.element(Fraction(v)))

p2, p3, p5 = point(2), point(3), point(5)
print("arithmetic with points, mirrored in the parameters:")
print(f"  pbar(2) + pbar(3)          = {add_south(curve, p2, p3)}  (= pbar(5))")
print(f"  pbar(2) . pbar(3)          = {folium_mul(curve, p2, p3)}  (= pbar(6))")
print(f"  pbar(6) / pbar(3)          = {folium_div(curve, folium_mul(curve, p2, p3), p3)}  (= pbar(2))")
print(f"  O . pbar(5)                = {folium_mul(curve, curve.origin, p5)}  (the node absorbs)")
try:
    folium_inv(curve, curve.origin)
except DivisionByZeroPoint as exc:
    print(f"  1/O -> DivisionByZeroPoint: {exc}")

print()
print("distributivity, spot-checked with points:")
lhs = folium_mul(curve, p2, add_south(curve, p3, p5))
rhs = add_south(curve, folium_mul(curve, p2, p3), folium_mul(curve, p2, p5))
print(f"  pbar(2) . (pbar(3) + pbar(5)) = {lhs}")
print(f"  pbar(2).pbar(3) + pbar(2).pbar(5) = {rhs}")

print()
f5 = Folium(PrimeField(5), 1)
points5 = f5.enumerate_points()
distributive = all(
    folium_mul(f5, a, add_south(f5, b, c))
    == add_south(f5, folium_mul(f5, a, b), folium_mul(f5, a, c))
    for a, b, c in itertools.product(points5, repeat=3)
)
print(f"over F_5, distributivity holds on all {len(points5)**3} point triples: {distributive}")

swap_is_isomorphism = all(
    sigma(add_south(f5, a, b)) == add_west(f5, sigma(a), sigma(b))
    and sigma(folium_mul(f5, a, b)) == folium_mul(f5, sigma(a), sigma(b))
    for a, b in itertools.product(points5, repeat=2)
)
print(f"the coordinate swap is an isomorphism onto the second field structure: {swap_is_isomorphism}")
