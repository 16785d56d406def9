"""Composition laws transported onto the folium.

Each law conjugates a group structure of the base field through one of the
parametrizations, which makes that parametrization a group isomorphism by
construction:

* ``proj_mul``   (neutral V):  pbar(t) . pbar(t') = pbar(t t')
* ``proj_mul2``  (neutral V):  the same transport through pbarbar
* ``star_mul``   (neutral I):  pbar(t) * pbar(t') = pbar(-t t')
* ``add_south``  (neutral O):  pbar(t) + pbar(t') = pbar(t + t')
* ``add_west``   (neutral O):  the additive transport through pbarbar
* ``south_mul``  (neutral O):  affine transport through p_affine after the
  shift tau = t + 1; needs -1 to be the only cube root of -1
* ``west_mul``   (neutral O):  the swapped affine transport

``folium_mul`` extends proj_mul to the whole curve by letting the node
absorb, which together with add_south makes the curve a field.
"""

from __future__ import annotations

from enum import Enum

from .curve import Folium, ProjectivePoint
from .errors import (
    DivisionByZeroPoint,
    FieldLacksUniqueCubeRoot,
    OriginNotInGroup,
    PointAtInfinity,
)
from .fields import FieldElement
from .parametrization import (
    p_affine,
    p_affine_prime,
    pbar,
    pbar_inv,
    pbarbar,
    pbarbar_inv,
    sigma,
)


def nonzero_param(curve: Folium, point: ProjectivePoint) -> FieldElement:
    """Slope parameter of a curve point, rejecting the node."""
    t = pbar_inv(curve, point)
    if t.is_zero():
        raise OriginNotInGroup("the node (0 : 0 : 1) is excluded here")
    return t


def _affine_tau(curve: Folium, point: ProjectivePoint) -> FieldElement:
    if point.is_at_infinity:
        raise PointAtInfinity(f"{point} is not an affine point")
    # t != -1 for affine points, so the shifted parameter is never zero.
    return pbar_inv(curve, point) + 1


def _affine_tau_prime(curve: Folium, point: ProjectivePoint) -> FieldElement:
    if point.is_at_infinity:
        raise PointAtInfinity(f"{point} is not an affine point")
    return pbarbar_inv(curve, point) + 1


def _require_unique_cube_root(curve: Folium) -> None:
    if not curve.field.has_unique_cube_root():
        raise FieldLacksUniqueCubeRoot(
            f"{curve.field} has epsilon roots, so the affine parametrization "
            "is not a bijection onto the affine curve"
        )


def proj_mul(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """The multiplicative law with neutral V = pbar(1); node excluded."""
    return pbar(curve, nonzero_param(curve, p1) * nonzero_param(curve, p2))


def proj_mul2(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """The multiplicative transport through pbarbar; coincides with proj_mul pointwise."""
    t1 = pbarbar_inv(curve, p1)
    t2 = pbarbar_inv(curve, p2)
    if t1.is_zero() or t2.is_zero():
        raise OriginNotInGroup("the node (0 : 0 : 1) is excluded here")
    return pbarbar(curve, t1 * t2)


def proj_inv(curve: Folium, point: ProjectivePoint) -> ProjectivePoint:
    """Inverse under proj_mul: the coordinate swap (x : y : z) -> (y : x : z)."""
    nonzero_param(curve, point)
    return sigma(point)


def star_mul(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """The derived law pbar(t) * pbar(t') = pbar(-t t') with neutral I."""
    return pbar(curve, -(nonzero_param(curve, p1) * nonzero_param(curve, p2)))


def perp(curve: Folium, point: ProjectivePoint) -> ProjectivePoint:
    """The involution P -> pbar(-1/t); exchanges V and I."""
    return pbar(curve, -nonzero_param(curve, point).inverse())


def add_south(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """The additive law pbar(t) + pbar(t') = pbar(t + t'); total, neutral O."""
    return pbar(curve, pbar_inv(curve, p1) + pbar_inv(curve, p2))


def neg(curve: Folium, point: ProjectivePoint) -> ProjectivePoint:
    """Additive inverse pbar(-t); the same map serves add_south and add_west."""
    return pbar(curve, -pbar_inv(curve, point))


def add_west(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """The additive transport through pbarbar; total, neutral O, distinct from add_south."""
    return pbarbar(curve, pbarbar_inv(curve, p1) + pbarbar_inv(curve, p2))


def south_mul(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """The affine exotic law: transport of (K\\{0}, *) through p_affine . alpha."""
    _require_unique_cube_root(curve)
    tau = _affine_tau(curve, p1) * _affine_tau(curve, p2)
    return p_affine(curve, tau - 1)


def west_mul(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """The swapped affine exotic law: transport through p_affine_prime . alpha."""
    _require_unique_cube_root(curve)
    tau = _affine_tau_prime(curve, p1) * _affine_tau_prime(curve, p2)
    return p_affine_prime(curve, tau - 1)


def south_inv(curve: Folium, point: ProjectivePoint) -> ProjectivePoint:
    """Inverse under south_mul: shifted parameter tau goes to 1/tau."""
    _require_unique_cube_root(curve)
    return p_affine(curve, _affine_tau(curve, point).inverse() - 1)


def west_inv(curve: Folium, point: ProjectivePoint) -> ProjectivePoint:
    """Inverse under west_mul."""
    _require_unique_cube_root(curve)
    return p_affine_prime(curve, _affine_tau_prime(curve, point).inverse() - 1)


# -- the curve as a field ----------------------------------------------


def folium_add(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """Field addition on the curve: add_south."""
    return add_south(curve, p1, p2)


def folium_mul(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """Field multiplication: proj_mul extended by letting the node absorb."""
    curve.require_on_curve(p1)
    curve.require_on_curve(p2)
    if p1 == curve.origin or p2 == curve.origin:
        return curve.origin
    return proj_mul(curve, p1, p2)


def folium_inv(curve: Folium, point: ProjectivePoint) -> ProjectivePoint:
    """Field inversion; the node has none."""
    curve.require_on_curve(point)
    if point == curve.origin:
        raise DivisionByZeroPoint("the node (0 : 0 : 1) has no multiplicative inverse")
    return sigma(point)


def folium_div(curve: Folium, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """Field division p1 / p2; dividing by the node is an error."""
    return folium_mul(curve, p1, folium_inv(curve, p2))


# -- law catalogue ------------------------------------------------------


class LawKind(Enum):
    """The composition laws the curve carries, keyed by their CLI names."""

    PROJ_MUL = "projmul"
    PROJ_MUL2 = "projmul2"
    STAR_MUL = "star"
    ADD_SOUTH = "addsouth"
    ADD_WEST = "addwest"
    SOUTH_MUL = "southmul"
    WEST_MUL = "westmul"
    FIELD_MUL = "fieldmul"


_APPLY = {
    LawKind.PROJ_MUL: proj_mul,
    LawKind.PROJ_MUL2: proj_mul2,
    LawKind.STAR_MUL: star_mul,
    LawKind.ADD_SOUTH: add_south,
    LawKind.ADD_WEST: add_west,
    LawKind.SOUTH_MUL: south_mul,
    LawKind.WEST_MUL: west_mul,
    LawKind.FIELD_MUL: folium_mul,
}


def apply_law(curve: Folium, law: LawKind, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """Apply one of the composition laws, enforcing its domain."""
    return _APPLY[law](curve, p1, p2)


def law_neutral(curve: Folium, law: LawKind) -> ProjectivePoint:
    """The neutral element of the law (V for the multiplicative laws, O otherwise)."""
    if law in (LawKind.PROJ_MUL, LawKind.PROJ_MUL2, LawKind.FIELD_MUL):
        return curve.vertex()
    if law is LawKind.STAR_MUL:
        return curve.infinity
    return curve.origin


def law_inverse(curve: Folium, law: LawKind, point: ProjectivePoint) -> ProjectivePoint:
    """The inverse of a point under the law; domain errors mirror the law's own."""
    if law in (LawKind.PROJ_MUL, LawKind.PROJ_MUL2):
        return proj_inv(curve, point)
    if law is LawKind.STAR_MUL:
        # The star inverse coincides with the proj_mul inverse: P * sigma(P) = I.
        return proj_inv(curve, point)
    if law in (LawKind.ADD_SOUTH, LawKind.ADD_WEST):
        return neg(curve, point)
    if law is LawKind.SOUTH_MUL:
        return south_inv(curve, point)
    if law is LawKind.WEST_MUL:
        return west_inv(curve, point)
    return folium_inv(curve, point)
