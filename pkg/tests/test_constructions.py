import math
from fractions import Fraction

import pytest

from symmetrize import errors, formulas
from symmetrize.constructions import (
    CONSTRUCTIONS,
    alpha_pentagon,
    asymmetry_descent,
    beta_hexagon,
    beta_pentagon,
    embed,
    golden_house,
    golden_house_witness,
    random_body,
    random_centered_polytope,
    rational_simplex,
    regular_kgon,
    regular_simplex,
    simplex_cap,
    truncated_hexagon,
)
from symmetrize.containment import (
    check_equivalence,
    is_minkowski_centered,
    measure_alpha,
    measure_beta,
    measure_omega,
    minkowski_asymmetry,
    parallel_support_witness,
)
from symmetrize.polytope import negate, translate
from symmetrize.scalar import APPROX, EXACT

TOL = 1e-7


def test_simplex_cap_family():
    for s in (Fraction(1), Fraction(6, 5), Fraction(3, 2), Fraction(2)):
        C = simplex_cap(2, s)
        assert minkowski_asymmetry(C).s == s
        assert is_minkowski_centered(C)
        assert measure_alpha(C).value == 2 / (s + 1)
        assert measure_omega(C).value == (s + 1) / 2
    assert len(simplex_cap(2, 1).vertices) == 6
    with pytest.raises(errors.ParameterOutOfRange):
        simplex_cap(2, 3)
    with pytest.raises(errors.BadParams):
        simplex_cap(2, 1.5, EXACT)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_golden_house(n):
    G = golden_house(n)
    assert abs(minkowski_asymmetry(G).s - formulas.gamma1(n)) < TOL
    assert is_minkowski_centered(G)
    p = golden_house_witness(n)
    assert abs(G.gauge(p) - 1) < TOL
    assert abs(G.gauge(tuple(-x for x in p)) - 1) < TOL
    assert parallel_support_witness(G) is not None


def test_golden_house_in_the_plane_has_golden_asymmetry():
    assert abs(minkowski_asymmetry(golden_house(2)).s - (1 + math.sqrt(5)) / 2) < TOL


@pytest.mark.parametrize("s", [1.7, 1.9, 2.0])
def test_alpha_pentagon(s):
    C = alpha_pentagon(s)
    assert abs(minkowski_asymmetry(C).s - s) < TOL
    assert abs(measure_alpha(C).value - s / (s * s - 1)) < TOL


def test_alpha_pentagon_range():
    with pytest.raises(errors.ParameterOutOfRange):
        alpha_pentagon(1.5)


@pytest.mark.parametrize("s", [Fraction(6, 5), Fraction(3, 2), Fraction(2)])
def test_beta_hexagon(s):
    C = beta_hexagon(s)
    assert minkowski_asymmetry(C).s == s
    assert measure_beta(C).value == 4 * s / (s + 1) ** 2


@pytest.mark.parametrize("s", [Fraction(33, 20), Fraction(5, 3), Fraction(19, 10), Fraction(2)])
def test_beta_pentagon(s):
    C = beta_pentagon(s)
    assert minkowski_asymmetry(C).s == s
    assert measure_beta(C).value == formulas.beta_pentagon_factor(s)


def test_beta_pentagon_frozen_value():
    # two-case formula at s = 1.65 (first branch)
    assert abs(float(measure_beta(beta_pentagon(Fraction(33, 20))).value) - 0.957910) < 1e-6


def test_beta_pentagon_exact_and_approx_agree():
    for s in (Fraction(33, 20), Fraction(9, 5)):
        e = measure_beta(beta_pentagon(s)).value
        a = measure_beta(beta_pentagon(float(s), APPROX)).value
        assert abs(float(e) - a) < TOL


@pytest.mark.parametrize("k", [3, 5, 7, 9])
def test_regular_kgon(k):
    C = regular_kgon(k)
    s = minkowski_asymmetry(C).s
    assert abs(s - 1 / math.cos(math.pi / k)) < TOL
    assert abs(measure_omega(C).value - (s + 1) / 2) < 1e-6


def test_regular_kgon_rejects_even_k():
    with pytest.raises(errors.EvenK):
        regular_kgon(6)


def test_truncated_hexagon():
    C = truncated_hexagon(Fraction(3, 2))
    assert minkowski_asymmetry(C).s == Fraction(3, 2)
    w = measure_omega(C).value
    assert w == Fraction(29, 24)
    assert Fraction(25, 24) <= w <= Fraction(5, 4) - Fraction(1, 10**6)


def test_asymmetry_descent():
    G = golden_house(2)
    for t in (1.0, 1.2, 1.4):
        D = asymmetry_descent(G, t)
        assert abs(minkowski_asymmetry(D).s - t) < TOL
        assert is_minkowski_centered(D)
        assert tuple(check_equivalence(D, negate(D))) == (True, True)
    with pytest.raises(errors.PrerequisiteFails):
        asymmetry_descent(rational_simplex(2), Fraction(3, 2))


def test_random_constructions_are_seeded():
    a = random_centered_polytope(3, 6, 11)
    assert a == random_centered_polytope(3, 6, 11)
    assert is_minkowski_centered(a)
    b = random_body(2, 5, 4)
    assert b == random_body(2, 5, 4)
    assert b.origin_interior()


def test_registry_lists_every_constructor():
    assert set(CONSTRUCTIONS) >= {
        "regular_simplex",
        "rational_simplex",
        "simplex_cap",
        "golden_house",
        "alpha_pentagon",
        "beta_hexagon",
        "beta_pentagon",
        "regular_kgon",
        "truncated_hexagon",
    }


def test_regular_simplex_is_exact_only_when_rational():
    with pytest.raises(errors.BadParams):
        regular_simplex(2, EXACT)


# --- embedding -----------------------------------------------------------------------


@pytest.mark.parametrize(
    "C",
    [simplex_cap(2, Fraction(3, 2)), beta_hexagon(Fraction(7, 5)), rational_simplex(2)],
    ids=["cap", "hexagon", "simplex"],
)
def test_embed_keeps_asymmetry_and_factors(C):
    s = minkowski_asymmetry(C).s
    for n in (3, 4):
        E = embed(C, n)
        assert E.dim == n
        assert minkowski_asymmetry(E).s == s
        assert is_minkowski_centered(E)
        assert measure_alpha(E).value == measure_alpha(C).value
        assert measure_beta(E).value == measure_beta(C).value


def test_embed_with_unit_apex_ratio_keeps_omega():
    C = truncated_hexagon(Fraction(3, 2))
    E = embed(C, 3, apex_ratio=1)
    assert minkowski_asymmetry(E).s == Fraction(3, 2)
    assert measure_omega(E).value == measure_omega(C).value
    assert measure_alpha(E).value == 1


def test_embed_errors():
    C = simplex_cap(2, Fraction(3, 2))
    with pytest.raises(errors.ParameterOutOfRange):
        embed(C, 2)
    with pytest.raises(errors.ParameterOutOfRange):
        embed(C, 3, apex_ratio=2)
    with pytest.raises(errors.NotMinkowskiCentered):
        embed(translate(C, (Fraction(1, 10), 0)), 3)


def test_embed_keeps_symmetric_bodies_symmetric():
    from symmetrize.means import is_symmetric
    from symmetrize.polytope import Polytope

    square = Polytope.from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)], EXACT)
    E = embed(square, 3)
    assert is_symmetric(E)
    assert minkowski_asymmetry(E).s == 1
