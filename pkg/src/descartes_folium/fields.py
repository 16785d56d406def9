"""Exact arithmetic over the supported base fields.

Two fields are supported: the rationals (values are reduced
`fractions.Fraction` instances, denominator always positive) and prime
fields F_p (values are canonical residues in [0, p)).  Characteristic 3 is
rejected outright because the cubic x^3 + y^3 - 3axyz degenerates there.
No floating point appears anywhere in this module.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, FieldTooLargeForScan, MixedFields

# Exhaustive residue scans (epsilon roots) stay below this bound.
EPSILON_SCAN_BOUND = 1 << 16
# Primality is checked by trial division below this bound; larger moduli
# are accepted as declared.
PRIME_CHECK_BOUND = 1 << 32

_RATIONAL_LITERAL = re.compile(r"^[+-]?\d+(\s*/\s*\d+)?$")
_INTEGER_LITERAL = re.compile(r"^[+-]?\d+$")


def is_prime(n: int) -> bool:
    """Deterministic trial division, adequate below PRIME_CHECK_BOUND."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7):
        if n == small:
            return True
        if n % small == 0:
            return False
    i = 11
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class FieldElement:
    """An immutable exact value in a fixed base field.

    Elements of distinct fields never mix: any binary operation across
    fields raises MixedFields.  Plain ints are accepted as the other
    operand and coerced into the element's own field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        self.field = field
        self.value = value

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    # -- arithmetic ---------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(
                    f"cannot combine elements of {self.field} and {other.field}"
                )
            return other.value
        if isinstance(other, int):
            return self.field.element(other).value
        if isinstance(other, Fraction) and self.field.characteristic == 0:
            return other
        return None

    def __add__(self, other):
        v = self._coerced(other)
        if v is None:
            return NotImplemented
        p = self.field.characteristic
        raw = self.value + v
        return FieldElement(self.field, raw % p if p else raw)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerced(other)
        if v is None:
            return NotImplemented
        p = self.field.characteristic
        raw = self.value - v
        return FieldElement(self.field, raw % p if p else raw)

    def __rsub__(self, other):
        v = self._coerced(other)
        if v is None:
            return NotImplemented
        p = self.field.characteristic
        raw = v - self.value
        return FieldElement(self.field, raw % p if p else raw)

    def __mul__(self, other):
        v = self._coerced(other)
        if v is None:
            return NotImplemented
        p = self.field.characteristic
        raw = self.value * v
        return FieldElement(self.field, raw % p if p else raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerced(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise DivisionByZero("division by the zero element")
        p = self.field.characteristic
        if p:
            return FieldElement(self.field, self.value * pow(v, -1, p) % p)
        return FieldElement(self.field, self.value / v)

    def __rtruediv__(self, other):
        v = self._coerced(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise DivisionByZero("division by the zero element")
        p = self.field.characteristic
        if p:
            return FieldElement(self.field, v * pow(self.value, -1, p) % p)
        return FieldElement(self.field, v / self.value)

    def __neg__(self):
        p = self.field.characteristic
        return FieldElement(self.field, (-self.value) % p if p else -self.value)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        p = self.field.characteristic
        if p:
            return FieldElement(self.field, pow(self.value, exponent, p))
        return FieldElement(self.field, self.value**exponent)

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse; raises DivisionByZero on the zero element."""
        if self.value == 0:
            raise DivisionByZero("the zero element has no multiplicative inverse")
        p = self.field.characteristic
        if p:
            return FieldElement(self.field, pow(self.value, -1, p))
        return FieldElement(self.field, 1 / self.value)

    # -- identity -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.value)

    __repr__ = __str__


class Field:
    """Common interface of the supported exact base fields."""

    characteristic: int

    def element(self, value) -> FieldElement:
        raise NotImplementedError

    def from_literal(self, text: str) -> FieldElement:
        raise NotImplementedError

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    @property
    def is_ordered(self) -> bool:
        return self.characteristic == 0

    def epsilon_roots(self):
        """Both roots of e^2 - e + 1 = 0 in this field, or None if there are none.

        The roots, when present, are the parameters of the two extra points
        at infinity; they satisfy e^3 = -1 and multiply to 1.
        """
        raise NotImplementedError

    def has_unique_cube_root(self) -> bool:
        """True iff -1 is the only root of x^3 + 1 = 0 in this field.

        x^3 + 1 = (x + 1)(x^2 - x + 1) and -1 never solves the quadratic
        away from characteristic 3, so this reduces to the epsilon scan.
        """
        return self.epsilon_roots() is None

    def random_element(self, rng) -> FieldElement:
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.spec_string()


class Rationals(Field):
    """The field of rational numbers with exact Fraction arithmetic."""

    characteristic = 0

    def element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields(f"{value!r} does not belong to {self}")
            return value
        if isinstance(value, (int, Fraction)):
            return FieldElement(self, Fraction(value))
        raise TypeError(f"cannot build a rational from {value!r}")

    def from_literal(self, text: str) -> FieldElement:
        text = text.strip()
        if not _RATIONAL_LITERAL.match(text):
            raise ValueError(f"bad rational literal {text!r}; expected <int> or <int>/<int>")
        try:
            return FieldElement(self, Fraction(text.replace(" ", "")))
        except ZeroDivisionError as exc:
            raise ValueError(f"zero denominator in literal {text!r}") from exc

    def epsilon_roots(self):
        # The discriminant of e^2 - e + 1 is -3, which is not a rational
        # square, so there is never a rational root.
        return None

    def random_element(self, rng, max_numerator: int = 99, max_denominator: int = 40) -> FieldElement:
        return FieldElement(
            self,
            Fraction(rng.randint(-max_numerator, max_numerator), rng.randint(1, max_denominator)),
        )

    def spec_string(self) -> str:
        return "q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Rationals()"


class PrimeField(Field):
    """The prime field F_p, p prime and p != 3."""

    def __init__(self, p: int):
        p = int(p)
        if p == 3:
            raise ValueError("characteristic 3 is rejected: the folium cubic degenerates")
        if p < 2:
            raise ValueError(f"modulus must be a prime >= 2, got {p}")
        if p < PRIME_CHECK_BOUND and not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields(f"{value!r} does not belong to {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        raise TypeError(f"cannot build a residue mod {self.p} from {value!r}")

    def from_literal(self, text: str) -> FieldElement:
        text = text.strip()
        if not _INTEGER_LITERAL.match(text):
            raise ValueError(f"bad residue literal {text!r}; expected <int>")
        return FieldElement(self, int(text) % self.p)

    def epsilon_roots(self):
        if self.p >= EPSILON_SCAN_BOUND:
            raise FieldTooLargeForScan(
                f"epsilon scan requires p < {EPSILON_SCAN_BOUND}, got p = {self.p}"
            )
        roots = [e for e in range(self.p) if (e * e - e + 1) % self.p == 0]
        if not roots:
            return None
        # p != 3 keeps the discriminant -3 nonzero, so the roots are distinct.
        return (FieldElement(self, roots[0]), FieldElement(self, roots[1]))

    def random_element(self, rng) -> FieldElement:
        return FieldElement(self, rng.randrange(self.p))

    def spec_string(self) -> str:
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime-field", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_from_spec(spec: str) -> Field:
    """Parse the CLI field grammar: `q` for the rationals, `fp:<p>` for F_p."""
    spec = spec.strip().lower()
    if spec == "q":
        return Rationals()
    if spec.startswith("fp:"):
        tail = spec[3:]
        if not tail.isdigit():
            raise ValueError(f"bad field spec {spec!r}; expected fp:<prime>")
        return PrimeField(int(tail))
    raise ValueError(f"bad field spec {spec!r}; expected q or fp:<prime>")
