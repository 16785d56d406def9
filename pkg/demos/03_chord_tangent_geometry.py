"""The chord-tangent construction recovers the multiplicative law geometrically.

Three curve points away from the node are collinear exactly when their
slope parameters multiply to -1, so a chord through two points determines a
third.  Mirroring that third point across the bisector x = y (or, just as
well, intersecting its chord with the vertex again) is precisely the
product under the transported law.
"""

from fractions import Fraction

from descartes_folium import (
    Folium,
    Rationals,
    chord_or_tangent,
    collinear3,
    geometric_mul,
    geometric_mul_via_vertex,
    pbar,
    perpendicular_chord_check,
    proj_mul,
    slope_cubic,
    tangent_at,
    third_intersection,
)

field = Rationals()
curve = Folium(field, 1)
point = lambda v: pbar(curve, field.element(Fraction(v)))

p2, p3 = point(2), point(3)
line = chord_or_tangent(curve, p2, p3)
third = third_intersection(curve, p2, p3)

print(f"chord through pbar(2) and pbar(3): {line}")
print(f"its third intersection with the curve: {third}  (= pbar(-1/6))")
print(f"collinear? {collinear3(curve, p2, p3, third)}  (2 * 3 * (-1/6) = -1)")
print()

c2, c1 = slope_cubic(curve, line)
print("the same line, read through the slope cubic t^3 + c2 t^2 + c1 t + 1:")
print(f"  c2 = {c2}, c1 = {c1}; its roots are exactly the slopes 2, 3, -1/6")
print()

print("two geometric routes to the product, against the transported law:")
print(f"  mirror of the third point:      {geometric_mul(curve, p2, p3)}")
print(f"  chord of the vertex and third:  {geometric_mul_via_vertex(curve, p2, p3)}")
print(f"  transported multiplication:     {proj_mul(curve, p2, p3)}  (= pbar(6))")
print()

vertex = curve.vertex()
print("tangents work the same way, with doubled contact:")
tangent = tangent_at(curve, vertex)
print(f"  tangent at V: {tangent}; it passes through I: {tangent.contains(curve.infinity)}")
print()

partner = third_intersection(curve, vertex, p2)
print("chords through the vertex produce perpendicular node chords:")
print(f"  third point of the line V-pbar(2): {partner}  (= pbar(-1/2))")
print(f"  x_P x_Q + y_P y_Q = 0? {perpendicular_chord_check(curve, p2, partner)}")
