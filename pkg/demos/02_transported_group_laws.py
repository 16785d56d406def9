"""Six group laws on one curve, all by transport of structure.

The slope parametrization is a bijection from the base field onto the
curve, so every group structure of the field can be pushed through it.
Multiplication lands as a law whose neutral element is the vertex V,
addition as a law whose neutral element is the node O, and composing with
the involution P -> pbar(-1/t) produces a third law whose neutral element
is the point at infinity I.  Swapping the two coordinates gives a second
copy of each.
"""

from fractions import Fraction

from descartes_folium import (
    Folium,
    Rationals,
    add_south,
    add_west,
    neg,
    pbar,
    perp,
    proj_inv,
    proj_mul,
    sigma,
    south_mul,
    star_mul,
)

field = Rationals()
curve = Folium(field, 1)
point = lambda v: pbar(curve, field.element(Fraction(v)))

p2, p3 = point(2), point(3)
vertex, infinity = curve.vertex(), curve.infinity

print("multiplicative law (neutral V):")
print(f"  pbar(2) . pbar(3) = {proj_mul(curve, p2, p3)}  (= pbar(6))")
print(f"  pbar(2) . V       = {proj_mul(curve, p2, vertex)}")
print(f"  inverse of pbar(2) is its mirror image: {proj_inv(curve, p2)}")
print()

print("derived star law (neutral I):")
print(f"  pbar(2) * pbar(3) = {star_mul(curve, p2, p3)}  (= pbar(-6))")
print(f"  pbar(2) * I       = {star_mul(curve, p2, infinity)}")
print(f"  I * I = {star_mul(curve, infinity, infinity)}  while I . I = {proj_mul(curve, infinity, infinity)} = V")
print()

print("the perpendicular involution ties the two laws together:")
print(f"  perp(pbar(2)) = {perp(curve, p2)}  (= pbar(-1/2))")
print(f"  perp(V) = {perp(curve, vertex)},  perp(I) = {perp(curve, infinity)}")
print()

print("additive laws (neutral O), one per coordinate order:")
p1 = point(1)
print(f"  pbar(1) + pbar(1)      = {add_south(curve, p1, p1)}  (= pbar(2))")
print(f"  pbar(1) (+)' pbar(1)   = {add_west(curve, p1, p1)}  (= pbar(1/2); the two laws differ)")
print(f"  -I = {neg(curve, infinity)}  (the vertex: the opposite of infinity)")
print()

print("the affine exotic law (neutral O) via the shifted parameter tau = t + 1:")
print(f"  p(1) o p(2) = {south_mul(curve, p1, p2)}  (= p(5): shifted parameters 2 and 3 multiply to 6)")
swapped = sigma(south_mul(curve, p1, p2))
print(f"  sigma carries it onto its mirror-image law: {swapped}")
