"""Shared helpers for the test suite."""

from fractions import Fraction

from descartes_folium import Folium, PrimeField, Rationals


def rational_curve(a=1) -> Folium:
    field = Rationals()
    return Folium(field, field.element(Fraction(a)))


def prime_curve(p: int, a=1) -> Folium:
    field = PrimeField(p)
    return Folium(field, field.element(a))


def random_fraction(rng, max_num: int = 20, max_den: int = 12) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_nonzero_fraction(rng, max_num: int = 20, max_den: int = 12) -> Fraction:
    while True:
        value = random_fraction(rng, max_num, max_den)
        if value != 0:
            return value


def nonzero_points(curve) -> list:
    return [point for point in curve.enumerate_points() if point != curve.origin]


def affine_points(curve) -> list:
    return [point for point in curve.enumerate_points() if point.is_affine]
