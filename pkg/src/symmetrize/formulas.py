"""Closed-form factors and thresholds used as oracles for measured values.

Functions accept ints, Fractions or floats.  Rational input gives an exact
Fraction wherever the formula has no radical; the thresholds ``gamma1``,
``gamma2`` and ``gamma3`` are always floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import errors
from .scalar import parse_scalar

PHI = (1 + math.sqrt(5)) / 2


def _num(x):
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, bool):
        raise errors.BadParams("expected a number")
    if isinstance(x, int):
        return Fraction(x)
    return x


def _sqrt(x):
    if isinstance(x, Fraction):
        p, q = x.numerator, x.denominator
        rp, rq = math.isqrt(p), math.isqrt(q)
        if rp * rp == p and rq * rq == q:
            return Fraction(rp, rq)
        return math.sqrt(x)
    return math.sqrt(x)


# --- stability factors ----------------------------------------------------------


def _stability_domain(n: int, s):
    s = _num(s)
    if n < 2:
        raise errors.DomainError("stability factors need n >= 2")
    if not (n - Fraction(1, n) < s <= n):
        raise errors.DomainError(f"s must lie in (n - 1/n, n] = ({n - 1 / n}, {n}]")
    return s


def rho_star(n: int, s):
    """Upper bound on the Banach-Mazur distance to the simplex when ``s = n - eps``."""
    s = _stability_domain(n, s)
    eps = n - s
    return 1 + (n + 1) * eps / (1 - n * eps)


def mu(n: int, s):
    """Lower bound on the distance from the origin to the facets of an inscribed simplex."""
    s = _stability_domain(n, s)
    return Fraction(n + 1) / (s + 1) * (1 - s * (n + 1) * (n - s) / (1 - n * (n - s)))


def psi(n: int, s):
    """Stability factor: ``C ∩ (-C) ⊆ psi n/(n+1) conv(C ∪ -C)`` near the simplex.

    Equal to ``(n+1) rho_star / mu - n``.
    """
    s = _stability_domain(n, s)
    return (n - s + 1) * (s + 1) / (1 - (n - s) * (n + s * (n + 1))) - n


def alpha_stability_bound(n: int, s):
    return psi(n, s) * Fraction(n, n + 1)


def beta_stability_bound(n: int, s):
    return mu(n, s) * psi(n, s) * Fraction(n * (n + 2), (n + 1) ** 2)


# --- thresholds -----------------------------------------------------------------


def gamma1(n: int) -> float:
    """Positive root of ``g^2 - (n-1) g - 1 = 0``."""
    _need_dim(n)
    return (n - 1 + math.sqrt((n - 2) * n + 5)) / 2


def gamma2(n: int) -> float:
    """Root of ``psi(n, s) n/(n+1) = 1`` above ``n - 1/n``."""
    _need_dim(n)
    disc = (
        n**8 + 6 * n**7 + 17 * n**6 + 28 * n**5 + 28 * n**4
        + 12 * n**3 - 4 * n**2 - 12 * n - 4
    )
    return (n**4 + n**3 + 2 * n**2 + math.sqrt(disc)) / (2 * (n**3 + 2 * n**2 + 3 * n + 1))


def gamma2_quadratic(n: int):
    """Coefficients ``(a, b, c)`` with ``a s^2 + b s + c = 0`` at ``s = gamma2(n)``."""
    return (
        -(n**3 + 2 * n**2 + 3 * n + 1),
        n**2 * (n**2 + n + 2),
        (n + 1) * (n**3 + n - 1),
    )


def gamma3_quadratic(n: int):
    """Coefficients ``(a, b, c)`` with ``a s^2 + b s + c = 0`` at ``s = gamma3(n)``."""
    return (
        n * (n**3 + 3 * n**2 + 4 * n + 3),
        -(n**5 + 2 * n**4 + 2 * n**3 + 2 * n**2 - 2 * n - 1),
        -(n**5 + 2 * n**4 + n**3 + 2 * n**2 + n - 1),
    )


def gamma3(n: int) -> float:
    """Root of ``mu psi n(n+2)/(n+1)^2 = 1`` above ``n - 1/n``."""
    _need_dim(n)
    a, b, c = gamma3_quadratic(n)
    return (-b + math.sqrt(b * b - 4 * a * c)) / (2 * a)


def _need_dim(n):
    if not isinstance(n, int) or n < 2:
        raise errors.DomainError("n must be an integer >= 2")


@dataclass(frozen=True)
class ThresholdTable:
    n: int
    gamma1: float
    gamma2: float
    gamma3: float
    simplex_alpha: Fraction
    simplex_beta: Fraction


def threshold_table(n: int) -> ThresholdTable:
    return ThresholdTable(
        n=n,
        gamma1=gamma1(n),
        gamma2=gamma2(n),
        gamma3=gamma3(n),
        simplex_alpha=simplex_alpha(n),
        simplex_beta=simplex_beta(n),
    )


def simplex_alpha(n: int) -> Fraction:
    return Fraction(1) if n % 2 else Fraction(n, n + 1)


def simplex_beta(n: int) -> Fraction:
    return Fraction(1) if n % 2 else Fraction(n * (n + 2), (n + 1) ** 2)


def observed_directions(n: int, offset: float = 1e-4) -> dict:
    """Sign of each stability bound minus 1 on both sides of its threshold.

    Returns ``{"alpha": (below, above), "beta": (below, above)}`` where each
    entry is ``"<1"``, ``"=1"`` or ``">1"``.
    """

    def sign(x):
        return ">1" if x > 1 + 1e-12 else "<1" if x < 1 - 1e-12 else "=1"

    g2, g3 = gamma2(n), gamma3(n)
    return {
        "alpha": (
            sign(alpha_stability_bound(n, g2 - offset)),
            sign(alpha_stability_bound(n, min(g2 + offset, n))),
        ),
        "beta": (
            sign(beta_stability_bound(n, g3 - offset)),
            sign(beta_stability_bound(n, min(g3 + offset, n))),
        ),
    }


# --- factor bounds --------------------------------------------------------------

PROVED = "proved-equal"
BOUND = "bound-only"
OPEN = "open"


@dataclass(frozen=True)
class FactorBounds:
    """Known bounds on the optimal factors at asymmetry ``s`` in dimension ``n``.

    ``alpha_low`` / ``beta_low`` bound the smallest factor any body can have;
    ``alpha_high`` / ``beta_high`` bound the largest one, and the ``*_floor``
    values are factors realised by explicit bodies, so the largest factor is
    at least that big.
    """

    n: int
    s: object
    alpha_low: object
    alpha_low_region: str
    alpha_high: object
    alpha_high_region: str
    alpha_high_floor: Optional[object]
    beta_low: object
    beta_low_region: str
    beta_high: object
    beta_high_region: str
    beta_high_floor: Optional[object]
    omega_low: object
    omega_high: object


def alpha_beta_bounds(n: int, s) -> FactorBounds:
    s = _num(s)
    if n < 1 or not (1 <= s <= n):
        raise errors.ParameterOutOfRange("need 1 <= s <= n")
    one = Fraction(1) if isinstance(s, Fraction) else 1.0
    low_region = PROVED if s <= 2 else BOUND

    even = n % 2 == 0 and n >= 2
    g1 = gamma1(n) if n >= 2 else 1.0
    if s <= g1:
        a_high, a_region = one, PROVED
        b_high, b_region = one, PROVED
    else:
        a_high, a_region = one, OPEN
        b_high, b_region = one, OPEN
        if even and s > gamma2(n):
            a_high, a_region = alpha_stability_bound(n, s), BOUND
        if even and s > gamma3(n):
            b_high, b_region = beta_stability_bound(n, s), BOUND

    in_golden = s >= PHI - 1e-12 and s <= 2
    a_floor = s / (s * s - 1) if in_golden else None
    b_floor = max(s / (s * s - 1), 4 * s / (s + 1) ** 2) if in_golden else None

    return FactorBounds(
        n=n,
        s=s,
        alpha_low=2 * one / (s + 1),
        alpha_low_region=low_region,
        alpha_high=a_high,
        alpha_high_region=a_region,
        alpha_high_floor=a_floor,
        beta_low=4 * s / (s + 1) ** 2,
        beta_low_region=low_region,
        beta_high=b_high,
        beta_high_region=b_region,
        beta_high_floor=b_floor,
        omega_low=(s + 1) ** 2 / (4 * s),
        omega_high=(s + 1) / 2,
    )


# --- reverse containment factors -------------------------------------------------


@dataclass(frozen=True)
class ReverseFactors:
    max_in_min: object
    max_in_arith: object
    harm_in_min: object
    arith_in_min: object
    max_in_harm: object
    arith_in_harm: object

    def as_dict(self) -> dict:
        return {
            "i": self.max_in_min,
            "ii": self.max_in_arith,
            "iii": self.harm_in_min,
            "iv": self.arith_in_min,
            "v": self.max_in_harm,
            "vi": self.arith_in_harm,
        }


def reverse_factors(s) -> ReverseFactors:
    """Factors for containing a larger symmetrization in a smaller one."""
    s = _num(s)
    if s < 1:
        raise errors.ParameterOutOfRange("asymmetry is at least 1")
    two_s = 2 * s / (s + 1)
    half = (s + 1) / 2
    return ReverseFactors(s, two_s, two_s, half, half, half)


# --- planar constructions ---------------------------------------------------------


def alpha_pentagon_factor(s):
    s = _num(s)
    return s / (s * s - 1)


def beta_hexagon_factor(s):
    s = _num(s)
    return 4 * s / (s + 1) ** 2


def pentagon_harmonic_factors(s):
    """Scalings ``(mu2, mu3)`` taking the harmonic-mean vertices of the beta
    pentagon onto the boundary of its arithmetic mean.

    Every harmonic vertex scales by one of the two; ``mu2`` switches formula
    at the positive root of ``3s^2 - 3s - 4``.
    """
    s = _num(s)
    mu2 = min((s * s - 1) / s, (s + 1) ** 2 * (s - 1) / (2 * (2 * s * s - s - 2)))
    mu3 = (s + 1) ** 2 / (4 * s)
    return mu2, mu3


PENTAGON_SWITCH = (3 + math.sqrt(57)) / 6


def beta_pentagon_factor(s):
    """``s/(s^2-1)`` up to ``s = 5/3`` and ``4s/(s+1)^2`` beyond."""
    s = _num(s)
    if s <= Fraction(5, 3):
        return s / (s * s - 1)
    return 4 * s / (s + 1) ** 2


def simplex_cap_alpha(s):
    s = _num(s)
    return 2 / (s + 1)


def kgon_asymmetry(k: int) -> float:
    return 1 / math.cos(math.pi / k)


__all__ = [
    "BOUND",
    "FactorBounds",
    "OPEN",
    "PENTAGON_SWITCH",
    "PHI",
    "PROVED",
    "ReverseFactors",
    "ThresholdTable",
    "alpha_beta_bounds",
    "alpha_pentagon_factor",
    "alpha_stability_bound",
    "beta_hexagon_factor",
    "beta_pentagon_factor",
    "beta_stability_bound",
    "gamma1",
    "gamma2",
    "gamma2_quadratic",
    "gamma3",
    "gamma3_quadratic",
    "kgon_asymmetry",
    "mu",
    "observed_directions",
    "pentagon_harmonic_factors",
    "psi",
    "reverse_factors",
    "rho_star",
    "simplex_alpha",
    "simplex_beta",
    "simplex_cap_alpha",
    "threshold_table",
]
