"""Branch labels on the rational affine curve and the swap symmetry."""

import random
from fractions import Fraction

import pytest

from descartes_folium import (
    BranchLabel,
    PointAtInfinity,
    UnorderedField,
    classify_branch,
    pbar,
    sigma,
)
from helpers import prime_curve, random_fraction, rational_curve


def q_point(curve, t):
    return pbar(curve, curve.field.element(Fraction(t)))


def test_label_examples():
    curve = rational_curve(1)
    assert classify_branch(curve, curve.origin) == BranchLabel.NODE
    assert classify_branch(curve, curve.point(Fraction(3, 2), Fraction(3, 2))) == BranchLabel.VERTEX
    assert classify_branch(curve, q_point(curve, Fraction(1, 2))) == BranchLabel.SOUTH_INTERIOR
    assert classify_branch(curve, q_point(curve, 2)) == BranchLabel.WEST_INTERIOR
    assert classify_branch(curve, q_point(curve, -3)) == BranchLabel.WEST_INTERIOR
    assert classify_branch(curve, q_point(curve, Fraction(-2, 5))) == BranchLabel.SOUTH_INTERIOR


def test_guards():
    curve = rational_curve(1)
    with pytest.raises(PointAtInfinity):
        classify_branch(curve, curve.infinity)
    f5 = prime_curve(5)
    with pytest.raises(UnorderedField):
        classify_branch(f5, f5.origin)


_SWAP = {
    BranchLabel.SOUTH_INTERIOR: BranchLabel.WEST_INTERIOR,
    BranchLabel.WEST_INTERIOR: BranchLabel.SOUTH_INTERIOR,
    BranchLabel.VERTEX: BranchLabel.VERTEX,
    BranchLabel.NODE: BranchLabel.NODE,
}


@pytest.mark.parametrize("a", [1, Fraction(-2)])
def test_sigma_swaps_interiors_and_fixes_vertex_and_node(a):
    curve = rational_curve(a)
    rng = random.Random(30)
    count = 0
    for _ in range(1000):
        t = random_fraction(rng)
        if t == -1:
            continue
        point = q_point(curve, t)
        assert classify_branch(curve, sigma(point)) == _SWAP[classify_branch(curve, point)]
        count += 1
    assert count > 900


def test_every_affine_point_has_exactly_one_label():
    curve = rational_curve(1)
    rng = random.Random(31)
    for _ in range(500):
        t = random_fraction(rng)
        if t == -1:
            continue
        label = classify_branch(curve, q_point(curve, t))
        assert isinstance(label, BranchLabel)
        expected = (
            BranchLabel.NODE
            if t == 0
            else BranchLabel.VERTEX
            if t == 1
            else BranchLabel.SOUTH_INTERIOR
            if -1 < t < 1
            else BranchLabel.WEST_INTERIOR
        )
        assert label == expected
