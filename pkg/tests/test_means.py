import itertools
from fractions import Fraction

import pytest

from symmetrize import errors
from symmetrize.constructions import rational_simplex, regular_simplex
from symmetrize.means import (
    arithmetic_mean,
    four_symmetrizations,
    harmonic_mean,
    hull_union,
    intersect,
    is_symmetric,
    minkowski_sum,
    polar,
)
from symmetrize.polytope import Polytope, negate, scale, translate
from symmetrize.scalar import APPROX, EXACT

SQUARE = Polytope.from_vertices(list(itertools.product((-1, 1), repeat=2)), EXACT)
DIAMOND = Polytope.from_vertices([(1, 0), (-1, 0), (0, 1), (0, -1)], EXACT)


def test_polar_of_square_is_diamond():
    assert polar(SQUARE) == DIAMOND
    assert polar(DIAMOND) == SQUARE
    assert polar(scale(SQUARE, 2)) == scale(DIAMOND, Fraction(1, 2))


def test_polar_requires_origin_inside():
    with pytest.raises(errors.OriginNotInterior):
        polar(translate(SQUARE, (2, 0)))


def test_minkowski_sum_of_square_and_diamond_is_octagon():
    S = minkowski_sum(SQUARE, DIAMOND)
    assert len(S.vertices) == 8
    assert S.support((1, 0)) == 2


def test_set_operations():
    assert intersect(SQUARE, scale(DIAMOND, 2)) == SQUARE
    assert hull_union(SQUARE, DIAMOND) == SQUARE
    with pytest.raises(errors.EmptyOrLowerDimensionalIntersection):
        intersect(SQUARE, translate(SQUARE, (2, 0)))


def test_means_of_equal_bodies():
    T = rational_simplex(2)
    assert arithmetic_mean(T, T) == T
    assert harmonic_mean(T, T) == T


def test_simplex_symmetrizations_in_3d():
    sy = four_symmetrizations(rational_simplex(3))
    assert (len(sy.minimum.vertices), len(sy.minimum.halfspaces)) == (6, 8)
    assert (len(sy.harmonic.vertices), len(sy.harmonic.halfspaces)) == (14, 12)
    assert (len(sy.arithmetic.vertices), len(sy.arithmetic.halfspaces)) == (12, 14)
    assert (len(sy.maximum.vertices), len(sy.maximum.halfspaces)) == (8, 6)
    for P in sy:
        assert is_symmetric(P)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_regular_simplex_polar(n):
    R = regular_simplex(n, APPROX)
    assert polar(R).isclose(scale(R, -n))


def test_is_symmetric():
    assert is_symmetric(SQUARE)
    assert not is_symmetric(rational_simplex(2))
    assert is_symmetric(negate(SQUARE))
