"""The projective Descartes folium and the plane objects it lives on.

The curve is x^3 + y^3 - 3axyz = 0 in P^2(K) with a != 0.  Points and
lines are held in a canonical form chosen so the classical literals
O = (0, 0, 1), I = (1, -1, 0) and affine points (x, y, 1) are already
canonical: the scaling pivot is z when nonzero, else x, else y (for lines
the pivot order is p, m, n on m*x + n*y + p*z = 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldTooLargeForScan, MixedFields, NotOnCurve
from .fields import Field, FieldElement, PrimeField

# Brute-force point enumeration stays below this many residues.
ENUMERATION_BOUND = 10_000


class ProjectivePoint:
    """A point of P^2(K) in canonical form; equality is exact triple equality."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x: FieldElement, y: FieldElement, z: FieldElement):
        if x.field != y.field or x.field != z.field:
            raise MixedFields("point coordinates must share one field")
        for pivot in (z, x, y):
            if not pivot.is_zero():
                if not pivot.is_one():
                    scale = pivot.inverse()
                    x, y, z = x * scale, y * scale, z * scale
                self.x, self.y, self.z = x, y, z
                return
        raise ValueError("(0 : 0 : 0) is not a projective point")

    @classmethod
    def of(cls, field: Field, x, y, z=1) -> "ProjectivePoint":
        return cls(field.element(x), field.element(y), field.element(z))

    @property
    def field(self) -> Field:
        return self.x.field

    @property
    def is_affine(self) -> bool:
        return self.z.is_one()

    @property
    def is_at_infinity(self) -> bool:
        return self.z.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return (
            self.field == other.field
            and self.x.value == other.x.value
            and self.y.value == other.y.value
            and self.z.value == other.z.value
        )

    def __hash__(self):
        return hash((self.field, self.x.value, self.y.value, self.z.value))

    def __str__(self):
        return f"({self.x} : {self.y} : {self.z})"

    __repr__ = __str__


class ProjectiveLine:
    """The line m*x + n*y + p*z = 0, canonicalized with pivot order (p, m, n)."""

    __slots__ = ("m", "n", "p")

    def __init__(self, m: FieldElement, n: FieldElement, p: FieldElement):
        if m.field != n.field or m.field != p.field:
            raise MixedFields("line coefficients must share one field")
        for pivot in (p, m, n):
            if not pivot.is_zero():
                if not pivot.is_one():
                    scale = pivot.inverse()
                    m, n, p = m * scale, n * scale, p * scale
                self.m, self.n, self.p = m, n, p
                return
        raise ValueError("(0 : 0 : 0) is not a line")

    @classmethod
    def of(cls, field: Field, m, n, p) -> "ProjectiveLine":
        return cls(field.element(m), field.element(n), field.element(p))

    @property
    def field(self) -> Field:
        return self.m.field

    def contains(self, point: ProjectivePoint) -> bool:
        """Exact incidence test; well defined on canonical forms."""
        return (self.m * point.x + self.n * point.y + self.p * point.z).is_zero()

    @property
    def through_origin(self) -> bool:
        # O = (0, 0, 1) lies on the line iff the z coefficient vanishes.
        return self.p.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ProjectiveLine):
            return NotImplemented
        return (
            self.field == other.field
            and self.m.value == other.m.value
            and self.n.value == other.n.value
            and self.p.value == other.p.value
        )

    def __hash__(self):
        return hash((self.field, self.m.value, self.n.value, self.p.value))

    def __str__(self):
        return f"[{self.m} : {self.n} : {self.p}]"

    __repr__ = __str__


@dataclass(frozen=True)
class SpecialPoints:
    """The distinguished points of one folium instance.

    `vertex` is None in characteristic 2, where (3a, 3a, 2) collapses onto
    the infinite point; `vertex_equals_infinity` records that coincidence.
    """

    origin: ProjectivePoint
    infinity: ProjectivePoint
    vertex: ProjectivePoint | None
    vertex_equals_infinity: bool
    points_at_infinity: list


class Folium:
    """The projective folium x^3 + y^3 - 3axyz = 0 over an exact field, a != 0."""

    def __init__(self, field: Field, a):
        a = field.element(a)
        if a.is_zero():
            raise ValueError("the folium needs a nonzero parameter a")
        self.field = field
        self.a = a
        self.three_a = field.element(3) * a
        self.origin = ProjectivePoint.of(field, 0, 0, 1)
        self.infinity = ProjectivePoint.of(field, 1, -1, 0)

    def point(self, x, y, z=1) -> ProjectivePoint:
        return ProjectivePoint.of(self.field, x, y, z)

    def line(self, m, n, p) -> ProjectiveLine:
        return ProjectiveLine.of(self.field, m, n, p)

    def evaluate(self, point: ProjectivePoint) -> FieldElement:
        """Value of x^3 + y^3 - 3axyz at the point; zero iff on the curve."""
        if point.field != self.field:
            raise MixedFields(f"{point} does not live over {self.field}")
        x, y, z = point.x, point.y, point.z
        return x * x * x + y * y * y - self.three_a * x * y * z

    def contains(self, point: ProjectivePoint) -> bool:
        return self.evaluate(point).is_zero()

    def require_on_curve(self, point: ProjectivePoint) -> None:
        if not self.contains(point):
            raise NotOnCurve(f"{point} is not on {self}")

    def vertex(self) -> ProjectivePoint:
        """The point (3a : 3a : 2); coincides with the infinite point in char 2."""
        return self.point(self.three_a, self.three_a, 2)

    def special_points(self) -> SpecialPoints:
        roots = self.field.epsilon_roots()
        at_infinity = [self.infinity]
        if roots is not None:
            at_infinity += [self.point(1, e, 0) for e in roots]
        char_two = self.field.characteristic == 2
        return SpecialPoints(
            origin=self.origin,
            infinity=self.infinity,
            vertex=None if char_two else self.vertex(),
            vertex_equals_infinity=char_two,
            points_at_infinity=at_infinity,
        )

    def gradient(self, point: ProjectivePoint) -> tuple:
        """The gradient of the defining cubic at the point."""
        x, y, z = point.x, point.y, point.z
        three = self.field.element(3)
        return (
            three * x * x - self.three_a * y * z,
            three * y * y - self.three_a * x * z,
            -self.three_a * x * y,
        )

    def is_singular_point(self, point: ProjectivePoint) -> bool:
        """True iff the gradient vanishes; on the curve that happens only at the node."""
        self.require_on_curve(point)
        return all(component.is_zero() for component in self.gradient(point))

    def enumerate_points(self) -> list:
        """All curve points by exhaustive scan of the p^2 + p + 1 canonical representatives.

        Deliberately naive so it can serve as an oracle independent of the
        parametrization.  Prime fields with p <= 10^4 only.
        """
        if not isinstance(self.field, PrimeField):
            raise FieldTooLargeForScan("point enumeration needs a finite prime field")
        p = self.field.p
        if p > ENUMERATION_BOUND:
            raise FieldTooLargeForScan(f"point enumeration requires p <= {ENUMERATION_BOUND}")
        a3 = self.three_a.value
        points = []
        for x in range(p):
            for y in range(p):
                if (x * x * x + y * y * y - a3 * x * y) % p == 0:
                    points.append(self.point(x, y, 1))
        for y in range(p):
            if (1 + y * y * y) % p == 0:
                points.append(self.point(1, y, 0))
        if 1 % p == 0:  # last representative (0 : 1 : 0): cubic value is y^3 = 1 there
            points.append(self.point(0, 1, 0))
        return points

    def __eq__(self, other):
        if not isinstance(other, Folium):
            return NotImplemented
        return self.field == other.field and self.a == other.a

    def __hash__(self):
        return hash((self.field, self.a))

    def __repr__(self):
        return f"Folium(a={self.a} over {self.field})"
