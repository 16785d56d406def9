"""SVG and CSV emitters for the real affine curve.

All sampling happens in exact rational arithmetic on an exact grid; floats
appear only when coordinates are finally written out, so the emitted values
match exact evaluation to float precision.  Samples near the parameter of
the infinite point (|t + 1| below the exclusion half-width) are dropped and
the polyline breaks there, which keeps the asymptote blow-up off the canvas.
Output is a pure function of the inputs, byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import Folium
from .errors import DegenerateRange, FileWriteError
from .fields import Rationals
from .geometry import chord_or_tangent, tangent_at, third_intersection
from .parametrization import p_affine

DEFAULT_EXCLUSION = Fraction(1, 1000)

_CURVE_STYLE = 'fill="none" stroke="#1f6fb4"'
_OVERLAY_LINE_STYLE = 'fill="none" stroke="#c44e52"'
_GUIDE_STYLE = 'fill="none" stroke="#999999"'


@dataclass(frozen=True)
class Overlay:
    """One plot overlay: a marked parameter, a chord, a tangent, or a guide line."""

    kind: str  # point | chord | tangent | bisector | asymptote
    params: tuple = ()


def parse_overlay(text: str) -> Overlay:
    """Parse the CLI overlay grammar: bisector | asymptote | point:<t> | tangent:<t> | chord:<t1>,<t2>."""
    head, _, tail = text.partition(":")
    head = head.strip().lower()
    if head in ("bisector", "asymptote"):
        if tail:
            raise ValueError(f"overlay {head!r} takes no parameters")
        return Overlay(head)
    if head == "point":
        return Overlay("point", (Fraction(tail.strip()),))
    if head == "tangent":
        return Overlay("tangent", (Fraction(tail.strip()),))
    if head == "chord":
        parts = [part.strip() for part in tail.split(",")]
        if len(parts) != 2:
            raise ValueError("overlay chord takes two parameters: chord:<t1>,<t2>")
        return Overlay("chord", (Fraction(parts[0]), Fraction(parts[1])))
    raise ValueError(f"unknown overlay {text!r}")


def _sample_grid(t_min: Fraction, t_max: Fraction, samples: int) -> list:
    if samples < 2:
        raise DegenerateRange(f"need at least 2 samples, got {samples}")
    if not t_min < t_max:
        raise DegenerateRange(f"empty parameter range [{t_min}, {t_max}]")
    step = (t_max - t_min) / (samples - 1)
    return [t_min + i * step for i in range(samples)]


def sample_segments(
    curve: Folium,
    t_min: Fraction,
    t_max: Fraction,
    samples: int,
    exclusion: Fraction = DEFAULT_EXCLUSION,
) -> list:
    """Polyline segments [(t, x, y)] of the affine curve, split at the excluded window around t = -1."""
    segments = [[]]
    for t in _sample_grid(t_min, t_max, samples):
        if abs(t + 1) < exclusion:
            if segments[-1]:
                segments.append([])
            continue
        point = p_affine(curve, curve.field.element(t))
        segments[-1].append((t, point.x.value, point.y.value))
    return [segment for segment in segments if len(segment) >= 2]


def _rational_curve(a) -> Folium:
    field = Rationals()
    curve = Folium(field, field.element(Fraction(a)))
    return curve


def render_csv(
    a,
    t_min,
    t_max,
    samples: int,
    exclusion: Fraction = DEFAULT_EXCLUSION,
) -> str:
    """CSV of (t, x, y) samples; floats at the boundary only."""
    curve = _rational_curve(a)
    rows = ["t,x,y"]
    for segment in sample_segments(curve, Fraction(t_min), Fraction(t_max), samples, exclusion):
        for t, x, y in segment:
            rows.append(f"{float(t)!r},{float(x)!r},{float(y)!r}")
    return "\n".join(rows) + "\n"


def _clip_line_to_box(m: float, n: float, c: float, box) -> tuple | None:
    # segment of the affine line m*x + n*y + c = 0 inside the bounding box
    x0, y0, x1, y1 = box
    hits = []
    if n != 0.0:
        for x in (x0, x1):
            y = -(m * x + c) / n
            if y0 - 1e-12 <= y <= y1 + 1e-12:
                hits.append((x, y))
    if m != 0.0:
        for y in (y0, y1):
            x = -(n * y + c) / m
            if x0 - 1e-12 <= x <= x1 + 1e-12:
                hits.append((x, y))
    best = None
    for i in range(len(hits)):
        for j in range(i + 1, len(hits)):
            (ax, ay), (bx, by) = hits[i], hits[j]
            gap = (ax - bx) ** 2 + (ay - by) ** 2
            if best is None or gap > best[0]:
                best = (gap, (ax, ay), (bx, by))
    if best is None or best[0] == 0.0:
        return None
    return best[1], best[2]


def _overlay_elements(curve: Folium, overlays, box) -> tuple:
    shapes = []
    labels = []
    span = max(box[2] - box[0], box[3] - box[1])
    radius = span * 0.012

    def mark(point, text):
        x, y = float(point.x.value), float(point.y.value)
        shapes.append(f'<circle cx="{x!r}" cy="{y!r}" r="{radius!r}" fill="#222222"/>')
        labels.append((x + radius, y + radius, text))

    def rule(line, style, dashed=False):
        clipped = _clip_line_to_box(
            float(line.m.value), float(line.n.value), float(line.p.value), box
        )
        if clipped is None:
            return
        (ax, ay), (bx, by) = clipped
        dash = f' stroke-dasharray="{(span * 0.02)!r}"' if dashed else ""
        shapes.append(
            f'<line x1="{ax!r}" y1="{ay!r}" x2="{bx!r}" y2="{by!r}" {style}'
            f' stroke-width="{(span * 0.004)!r}"{dash}/>'
        )

    field = curve.field
    for overlay in overlays:
        if overlay.kind == "bisector":
            rule(curve.line(1, -1, 0), _GUIDE_STYLE, dashed=True)
        elif overlay.kind == "asymptote":
            # x + y + a = 0 is the asymptote of the real curve
            rule(curve.line(1, 1, curve.a), _GUIDE_STYLE, dashed=True)
        elif overlay.kind == "point":
            (t,) = overlay.params
            mark(p_affine(curve, field.element(t)), f"t={t}")
        elif overlay.kind == "tangent":
            (t,) = overlay.params
            point = p_affine(curve, field.element(t))
            rule(tangent_at(curve, point), _OVERLAY_LINE_STYLE)
            mark(point, f"t={t}")
        elif overlay.kind == "chord":
            t1, t2 = overlay.params
            p1 = p_affine(curve, field.element(t1))
            p2 = p_affine(curve, field.element(t2))
            rule(chord_or_tangent(curve, p1, p2), _OVERLAY_LINE_STYLE)
            third = third_intersection(curve, p1, p2)
            mark(p1, f"t={t1}")
            mark(p2, f"t={t2}")
            if third.is_affine:
                t3 = -1 / (Fraction(t1) * Fraction(t2))
                mark(third, f"t={t3}")
    return shapes, labels


def render_svg(
    a,
    t_min,
    t_max,
    samples: int,
    overlays=(),
    exclusion: Fraction = DEFAULT_EXCLUSION,
    size: int = 640,
) -> str:
    """Deterministic SVG document for the real curve with optional overlays."""
    curve = _rational_curve(a)
    segments = sample_segments(curve, Fraction(t_min), Fraction(t_max), samples, exclusion)
    if not segments:
        raise DegenerateRange("the sampled range contains no drawable segment")

    xs = [float(x) for segment in segments for _, x, _ in segment]
    ys = [float(y) for segment in segments for _, _, y in segment]
    pad = 0.08 * max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    box = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    width = box[2] - box[0]
    height = box[3] - box[1]
    stroke = max(width, height) * 0.005

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{box[0]!r} {(-box[3])!r} {width!r} {height!r}">',
        '<g transform="scale(1,-1)">',
    ]
    for segment in segments:
        coords = " ".join(f"{float(x)!r},{float(y)!r}" for _, x, y in segment)
        parts.append(f'<polyline {_CURVE_STYLE} stroke-width="{stroke!r}" points="{coords}"/>')
    shapes, labels = _overlay_elements(curve, overlays, box)
    parts.extend(shapes)
    parts.append("</g>")
    font = max(width, height) * 0.03
    for x, y, text in labels:
        parts.append(
            f'<text x="{x!r}" y="{(-y)!r}" font-size="{font!r}" '
            f'font-family="monospace">{text}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_plot(
    path: str,
    a,
    t_min,
    t_max,
    samples: int,
    overlays=(),
    exclusion: Fraction = DEFAULT_EXCLUSION,
) -> None:
    """Write SVG (or CSV when the path ends in .csv) to the given path."""
    if str(path).lower().endswith(".csv"):
        payload = render_csv(a, t_min, t_max, samples, exclusion)
    else:
        payload = render_svg(a, t_min, t_max, samples, overlays, exclusion)
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(payload)
    except OSError as exc:
        raise FileWriteError(f"cannot write plot to {path}: {exc}") from exc
