import itertools
import random
from fractions import Fraction

import pytest
from scipy.spatial import ConvexHull

from symmetrize import errors
from symmetrize.dd import extreme_rays
from symmetrize.polytope import Polytope, linear_image, negate, scale, translate
from symmetrize.scalar import APPROX, EXACT

SQUARE = [(1, 1), (1, -1), (-1, 1), (-1, -1)]


def cube(n):
    return Polytope.from_vertices(list(itertools.product((-1, 1), repeat=n)), EXACT)


def test_square_representations():
    P = Polytope.from_vertices(SQUARE + [(0, 0), (1, 0)], EXACT)
    assert set(P.vertices) == {tuple(map(Fraction, v)) for v in SQUARE}
    assert len(P.halfspaces) == 4
    assert all(h.rho == 1 for h in P.halfspaces)


def test_cube_and_cross_polytope_counts():
    for n in (2, 3, 4):
        C = cube(n)
        assert len(C.vertices) == 2**n
        assert len(C.halfspaces) == 2 * n
        hs = [(tuple(s * (i == j) for j in range(n)), 1) for i in range(n) for s in (1, -1)]
        assert Polytope.from_halfspaces(hs, EXACT) == C


def test_redundant_halfspaces_dropped():
    hs = [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1), ((1, 1), 5)]
    P = Polytope.from_halfspaces(hs, EXACT)
    assert len(P.halfspaces) == 4


def test_errors():
    with pytest.raises(errors.NotFullDimensional):
        Polytope.from_vertices([(0, 0), (1, 1), (2, 2)], EXACT)
    with pytest.raises(errors.Unbounded):
        Polytope.from_halfspaces([((1, 0), 1), ((0, 1), 1)], EXACT)
    with pytest.raises(errors.NoInterior):
        Polytope.from_halfspaces([((1, 0), 0), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 1)], EXACT)
    with pytest.raises(errors.DimensionMismatch):
        Polytope.from_vertices([(0, 0), (1, 0, 0)], EXACT)
    with pytest.raises(errors.ZeroScale):
        scale(cube(2), 0)
    with pytest.raises(errors.SingularMatrix):
        linear_image(cube(2), [[1, 2], [2, 4]])


def test_gauge_and_support():
    P = Polytope.from_vertices([(2, 0), (-1, 1), (-1, -1)], EXACT)
    assert P.gauge((1, 0)) == Fraction(1, 2)
    assert P.gauge((-2, 0)) == 2
    assert P.support((1, 0)) == 2
    assert P.support((0, 1)) == 1
    assert P.contains((Fraction(1, 2), 0))
    assert not P.contains((3, 0))


def test_maps():
    P = cube(2)
    T = translate(P, (1, 2))
    assert T.contains((2, 3)) and not T.contains((-1, 0))
    L = linear_image(P, [[2, 0], [0, 1]])
    assert L.support((1, 0)) == 2
    assert negate(P) == P
    S = Polytope.from_vertices([(1, 0), (0, 1), (-1, -1)], EXACT)
    assert set(negate(S).vertices) == {(-1, 0), (0, -1), (1, 1)}


def test_json_round_trip():
    P = Polytope.from_vertices([(Fraction(1, 3), 0), (0, 1), (-1, -1)], EXACT)
    for rep in ("vertices", "halfspaces"):
        assert Polytope.from_json(P.to_json(rep), EXACT) == P
    with pytest.raises(ValueError):
        Polytope.from_json({"dim": 2}, EXACT)
    with pytest.raises(errors.DimensionMismatch):
        Polytope.from_json({"dim": 3, "vertices": [[0, 0], [1, 0], [0, 1]]}, EXACT)


def test_equality_includes_backend():
    assert cube(2) != cube(2).to_backend(APPROX)
    assert cube(2).to_backend(APPROX).isclose(cube(2).to_backend(APPROX))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hull_against_qhull(n):
    rng = random.Random(n)
    for trial in range(15):
        raw = [[rng.gauss(0, 1) for _ in range(n)] for _ in range(n + 4 + trial % 5)]
        mean = [sum(col) / len(raw) for col in zip(*raw)]
        pts = [tuple(x - m for x, m in zip(p, mean)) for p in raw]
        P = Polytope.from_vertices(pts, APPROX)
        hull = ConvexHull(pts)
        expect = sorted(tuple(round(x, 9) for x in pts[i]) for i in hull.vertices)
        got = sorted(tuple(round(x, 9) for x in v) for v in P.vertices)
        assert got == expect
        # qhull triangulates facets, so compare normals scaled to offset 1
        normals = {tuple(round(x, 6) for x in eq[:-1] / -eq[-1]) for eq in hull.equations}
        ours = {tuple(round(x / h.rho, 6) for x in h.a) for h in P.halfspaces}
        assert ours == normals


def test_exact_and_approx_agree():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.choice((2, 3))
        pts = [tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n + 5)]
        try:
            E = Polytope.from_vertices(pts, EXACT)
        except errors.NotFullDimensional:
            continue
        A = Polytope.from_vertices(pts, APPROX)
        assert E.to_backend(APPROX).isclose(A)


def test_extreme_rays_of_orthant_and_square_cone():
    rays = extreme_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1)], EXACT)
    assert sorted(tuple(r) for r, _ in rays) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    # cone over the square |x| <= t, |y| <= t
    rows = [(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)]
    rays = extreme_rays(rows, EXACT)
    assert len(rays) == 4
    for r, mask in rays:
        tight = [i for i in range(4) if mask >> i & 1]
        assert len(tight) == 2
        assert all(sum(a * b for a, b in zip(rows[i], r)) == 0 for i in tight)
    with pytest.raises(errors.NotFullDimensional):
        extreme_rays([(1, 0, 0), (0, 1, 0)], EXACT)
