import math
from fractions import Fraction

import pytest

from symmetrize import errors, formulas as F


def test_gamma1_values():
    assert F.gamma1(2) == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-15)
    for n in range(2, 9):
        g = F.gamma1(n)
        assert g * g - (n - 1) * g - 1 == pytest.approx(0, abs=1e-12)
        assert n - 1 < g < n


def test_threshold_values_frozen():
    assert F.gamma2(2) == pytest.approx(1.9832254691, abs=1e-10)
    assert F.gamma2(2) == pytest.approx((32 + math.sqrt(3508)) / 46, abs=1e-14)
    assert F.gamma3(2) == pytest.approx(1.9939255288, abs=1e-10)
    assert F.gamma3(4) == pytest.approx(3.99960077, abs=1e-8)
    assert F.gamma3(6) == pytest.approx(5.99993062, abs=1e-8)


@pytest.mark.parametrize("n", range(2, 11))
def test_thresholds_are_roots(n):
    g2, g3 = F.gamma2(n), F.gamma3(n)
    assert float(F.alpha_stability_bound(n, g2)) == pytest.approx(1, abs=1e-9)
    assert float(F.beta_stability_bound(n, g3)) == pytest.approx(1, abs=1e-9)
    for g, (a, b, c) in ((g2, F.gamma2_quadratic(n)), (g3, F.gamma3_quadratic(n))):
        assert a * g * g + b * g + c == pytest.approx(0, abs=1e-9 * abs(a) * n * n)
    assert n - 1 / n < g2 < g3 < n
    assert F.gamma1(n) <= g2


def test_gamma3_discriminant_factors():
    for n in range(2, 12):
        a, b, c = F.gamma3_quadratic(n)
        left = b * b - 4 * a * c
        right = (n**4 + 3 * n**3 + 3 * n**2 + n - 1) * (n**6 + 5 * n**5 + 10 * n**4 + 10 * n**3 + 8 * n**2 + 7 * n - 1)
        assert left == right


@pytest.mark.parametrize("n", [2, 4, 6])
def test_stability_factors_at_the_simplex(n):
    assert F.psi(n, Fraction(n)) == 1
    assert F.mu(n, Fraction(n)) == 1
    assert F.rho_star(n, Fraction(n)) == 1


def test_psi_identity():
    for n in (2, 3, 4):
        for s in (Fraction(n) - Fraction(1, 4 * n), Fraction(n) - Fraction(1, 10 * n)):
            assert F.psi(n, s) == (n + 1) * F.rho_star(n, s) / F.mu(n, s) - n
            assert F.mu(n, s) * F.psi(n, s) == F.rho_star(n, s) + n * (F.rho_star(n, s) - F.mu(n, s))


def test_stability_domain():
    with pytest.raises(errors.DomainError):
        F.psi(2, Fraction(3, 2))
    with pytest.raises(errors.DomainError):
        F.mu(2, Fraction(5, 2))
    with pytest.raises(errors.DomainError):
        F.psi(1, 1)


def test_observed_directions():
    for n in (2, 4):
        obs = F.observed_directions(n)
        assert obs["alpha"] == (">1", "<1")
        assert obs["beta"] == (">1", "<1")


def test_simplex_factors():
    assert F.simplex_alpha(2) == Fraction(2, 3)
    assert F.simplex_beta(2) == Fraction(8, 9)
    assert F.simplex_alpha(4) == Fraction(4, 5)
    assert F.simplex_beta(4) == Fraction(24, 25)
    assert F.simplex_alpha(3) == F.simplex_beta(3) == 1
    t = F.threshold_table(4)
    assert t.simplex_beta == Fraction(24, 25)


def test_reverse_factors():
    r = F.reverse_factors(Fraction(3, 2))
    assert r.as_dict() == {
        "i": Fraction(3, 2),
        "ii": Fraction(6, 5),
        "iii": Fraction(6, 5),
        "iv": Fraction(5, 4),
        "v": Fraction(5, 4),
        "vi": Fraction(5, 4),
    }
    with pytest.raises(errors.ParameterOutOfRange):
        F.reverse_factors(Fraction(1, 2))


def test_bounds_at_one_and_three_halves():
    b = F.alpha_beta_bounds(2, 1)
    assert (b.alpha_low, b.alpha_high, b.beta_low, b.beta_high) == (1, 1, 1, 1)
    b = F.alpha_beta_bounds(2, Fraction(3, 2))
    assert b.alpha_low == Fraction(4, 5)
    assert b.beta_low == Fraction(24, 25)
    assert b.alpha_low_region == F.PROVED
    assert b.alpha_high_region == F.PROVED
    assert b.alpha_high_floor is None


def test_bounds_regions_above_gamma1():
    b = F.alpha_beta_bounds(2, 1.7)
    assert b.alpha_high_region == F.OPEN
    assert b.alpha_high_floor == pytest.approx(1.7 / (1.7**2 - 1))
    b = F.alpha_beta_bounds(2, 1.995)
    assert b.alpha_high_region == F.BOUND and b.beta_high_region == F.BOUND
    assert b.alpha_high < 1 and b.beta_high < 1
    b = F.alpha_beta_bounds(3, 2.9)
    assert b.alpha_high_region == F.OPEN
    with pytest.raises(errors.ParameterOutOfRange):
        F.alpha_beta_bounds(2, 3)


def test_planar_factors():
    assert F.beta_hexagon_factor(Fraction(19, 10)) == pytest.approx(0.903686, abs=1e-6)
    assert F.beta_pentagon_factor(Fraction(33, 20)) == pytest.approx(0.957910, abs=1e-6)
    assert F.beta_pentagon_factor(Fraction(5, 3)) == Fraction(15, 16)
    assert F.beta_pentagon_factor(Fraction(19, 10)) == F.beta_hexagon_factor(Fraction(19, 10))
    assert F.alpha_pentagon_factor(2) == Fraction(2, 3)
    assert F.kgon_asymmetry(3) == pytest.approx(2)


def test_pentagon_harmonic_factors():
    s = Fraction(33, 20)
    mu2, mu3 = F.pentagon_harmonic_factors(s)
    assert mu3 == (s + 1) ** 2 / (4 * s)
    assert 1 / min(mu2, mu3) == F.beta_pentagon_factor(s)
    # mu2 changes branch at the positive root of 3s^2 - 3s - 4
    r = F.PENTAGON_SWITCH
    assert 3 * r * r - 3 * r - 4 == pytest.approx(0, abs=1e-12)
    for t in (r - 0.01, r + 0.01):
        a = (t * t - 1) / t
        b = (t + 1) ** 2 * (t - 1) / (2 * (2 * t * t - t - 2))
        assert F.pentagon_harmonic_factors(t)[0] == pytest.approx(min(a, b))
    assert (t * t - 1) / t > (t + 1) ** 2 * (t - 1) / (2 * (2 * t * t - t - 2))


def test_pentagon_formula_matches_on_a_grid():
    for k in range(0, 39):
        s = F.PHI + k * (2 - F.PHI) / 38
        mu2, mu3 = F.pentagon_harmonic_factors(s)
        assert 1 / min(mu2, mu3) == pytest.approx(F.beta_pentagon_factor(s), abs=1e-12)


def test_thresholds_increase_with_n():
    for f in (F.gamma1, F.gamma2, F.gamma3):
        values = [f(n) for n in range(2, 11)]
        assert all(a < b for a, b in zip(values, values[1:]))
