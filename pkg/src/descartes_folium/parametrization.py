"""Normalization maps of the folium and their parameter-level companions.

Four maps parametrize the curve by the slope t = y/x of the chord from the
node:

* ``pbar(t) = (3at : 3at^2 : 1 + t^3)`` covers the whole projective curve,
  with pbar(0) = O and pbar(-1) = I;
* ``pbarbar = sigma . pbar`` swaps the two coordinates;
* ``p_affine`` and ``p_affine_prime`` are the affine restrictions, defined
  away from t^3 = -1.

The inverses are totalized at the node with value 0, which makes pbar a
bijection K -> curve and lets the additive laws act on the whole curve.
"""

from __future__ import annotations

from enum import Enum

from .curve import Folium, ProjectivePoint
from .errors import ParameterAtInfinity
from .fields import FieldElement


def pbar(curve: Folium, t) -> ProjectivePoint:
    """Projective parametrization (3at : 3at^2 : 1 + t^3); total on the field."""
    t = curve.field.element(t)
    x = curve.three_a * t
    return ProjectivePoint(x, x * t, t * t * t + 1)


def pbar_inv(curve: Folium, point: ProjectivePoint) -> FieldElement:
    """Slope parameter y/x of a curve point; 0 at the node."""
    curve.require_on_curve(point)
    if point == curve.origin:
        return curve.field.zero
    # On the curve x = 0 forces y = 0, so x is nonzero away from the node.
    return point.y / point.x


def pbarbar(curve: Folium, t) -> ProjectivePoint:
    """Coordinate-swapped parametrization (3at^2 : 3at : 1 + t^3)."""
    t = curve.field.element(t)
    y = curve.three_a * t
    return ProjectivePoint(y * t, y, t * t * t + 1)


def pbarbar_inv(curve: Folium, point: ProjectivePoint) -> FieldElement:
    """Inverse slope parameter x/y; 0 at the node."""
    curve.require_on_curve(point)
    if point == curve.origin:
        return curve.field.zero
    return point.x / point.y


def p_affine(curve: Folium, t) -> ProjectivePoint:
    """Affine parametrization (3at/(1+t^3), 3at^2/(1+t^3)) as a z = 1 point."""
    t = curve.field.element(t)
    w = t * t * t + 1
    if w.is_zero():
        raise ParameterAtInfinity(f"t = {t} satisfies t^3 = -1; no affine image")
    x = curve.three_a * t / w
    return ProjectivePoint(x, x * t, curve.field.one)


def p_affine_prime(curve: Folium, t) -> ProjectivePoint:
    """The swapped affine parametrization sigma . p_affine."""
    return sigma(p_affine(curve, t))


def alpha(tau: FieldElement) -> FieldElement:
    """Shift tau -> t = tau - 1, carrying the punctured line K\\{0} to K\\{-1}."""
    return tau - 1


def alpha_inv(t: FieldElement) -> FieldElement:
    """Inverse shift t -> tau = t + 1."""
    return t + 1


def sigma(point: ProjectivePoint) -> ProjectivePoint:
    """The coordinate swap (x : y : z) -> (y : x : z); maps the curve to itself."""
    return ProjectivePoint(point.y, point.x, point.z)


class ParamMap(Enum):
    """Selector for the four parametrizations, as exposed by the CLI."""

    PBAR = "pbar"
    PBARBAR = "pbarbar"
    P_AFFINE = "paffine"
    P_AFFINE_PRIME = "paffineprime"

    def evaluate(self, curve: Folium, t) -> ProjectivePoint:
        return _EVALUATORS[self](curve, t)


_EVALUATORS = {
    ParamMap.PBAR: pbar,
    ParamMap.PBARBAR: pbarbar,
    ParamMap.P_AFFINE: p_affine,
    ParamMap.P_AFFINE_PRIME: p_affine_prime,
}
