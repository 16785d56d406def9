"""A first walk along the folium: the slope parametrization and its special points.

The affine curve x^3 + y^3 - 3axy = 0 crosses itself at the origin, and the
line y = t*x through that node meets the curve in exactly one further point.
Sending t to that point parametrizes the whole projective curve:

    t  ->  (3at : 3at^2 : 1 + t^3)

with t = 0 landing on the node O and t = -1 on the point at infinity I.
"""

from fractions import Fraction

from descartes_folium import Folium, ParameterAtInfinity, Rationals, p_affine, pbar, pbar_inv

field = Rationals()
curve = Folium(field, 1)

print(f"curve: {curve}")
print()

for value in (0, 1, -1, 2, Fraction(1, 2), Fraction(-2, 3)):
    t = field.element(Fraction(value))
    point = pbar(curve, t)
    print(f"  pbar({str(t):>4}) = {point}   on curve: {curve.contains(point)}")

print()
print("the inverse map reads the slope back off the point:")
point = pbar(curve, field.element(2))
print(f"  pbar_inv({point}) = {pbar_inv(curve, point)}")

print()
special = curve.special_points()
print(f"node O    = {special.origin}   (the singular point, parameter 0)")
print(f"infinity  = {special.infinity}   (parameter -1)")
print(f"vertex V  = {special.vertex}   (parameter 1, on the bisector x = y)")
print(f"all points at infinity over the rationals: {special.points_at_infinity}")

print()
print("the affine parametrization divides out z and loses t = -1:")
print(f"  p_affine(1) = {p_affine(curve, field.element(1))}")
try:
    p_affine(curve, field.element(-1))
except ParameterAtInfinity as exc:
    print(f"  p_affine(-1) -> ParameterAtInfinity: {exc}")
