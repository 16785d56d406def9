"""Render the real curve with its classical decorations to an SVG file.

Sampling is exact rational arithmetic end to end; floats appear only in the
emitted coordinates.  The window around t = -1 (the point at infinity) is
excluded so the leaf and both wings stay on canvas.
"""

from fractions import Fraction

from descartes_folium.plotting import Overlay, render_svg

document = render_svg(
    a=1,
    t_min=Fraction(-9, 10),
    t_max=4,
    samples=400,
    overlays=(
        Overlay("bisector"),
        Overlay("asymptote"),
        Overlay("chord", (Fraction(2), Fraction(3))),
        Overlay("tangent", (Fraction(1),)),
    ),
)

out = "folium_demo.svg"
with open(out, "w", encoding="utf-8") as handle:
    handle.write(document)

print(f"wrote {out} ({len(document)} bytes)")
print("the chord overlay marks pbar(2), pbar(3), and their third intersection t=-1/6;")
print("the tangent overlay touches the vertex, where the curve meets the bisector.")
