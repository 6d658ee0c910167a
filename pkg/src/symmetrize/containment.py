"""Minimal homothetic containment, optimality certificates and derived factors.

The workhorse is :func:`circumradius`, the smallest ``rho`` such that a
translate of ``rho * C`` covers ``K``.  It is solved as the linear program

    max  sum_{v,a} y_{v,a} (a . v)
    s.t. sum y = 1,  sum y_{v,a} a = 0,  y >= 0

over pairs (vertex ``v`` of ``K``, facet ``a . x <= 1`` of ``C``).  The shadow
prices of its equality rows are exactly ``(rho, t)``, and the support of an
optimal ``y`` is a set of touching points with outer normals whose convex
combination vanishes, which is the optimality certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Optional

from . import errors
from .means import four_symmetrizations, polar
from .polytope import Polytope, _centroid, negate, scale, solve_inequality_lp
from .scalar import Backend, common_backend, dot


# --- certificates ---------------------------------------------------------------


@dataclass(frozen=True)
class ContainmentCertificate:
    """Touching points ``p`` with outer normals ``u`` and weights ``lam``.

    Valid for ``inner ⊆ outer`` when every ``p`` lies in ``inner`` and on the
    boundary of ``outer``, every ``u`` is an outer normal of ``outer`` at its
    ``p``, the weights are a probability vector and ``sum lam_j u_j = 0``.
    """

    points: tuple
    normals: tuple
    coefficients: tuple

    def __len__(self) -> int:
        return len(self.points)

    def validate(self, inner: Polytope, outer: Polytope, tol: Optional[float] = None) -> bool:
        return validate_certificate(self, inner, outer, tol)


def validate_certificate(cert, inner: Polytope, outer: Polytope, tol=None) -> bool:
    """Check a certificate from scratch, without the LP that produced it."""
    B = common_backend(inner.backend, outer.backend)
    exact = B.exact
    if tol is None:
        tol = 0 if exact else 10 * B.tol
    n = outer.dim
    k = len(cert.points)
    if not 2 <= k <= n + 1 or len(cert.normals) != k or len(cert.coefficients) != k:
        return False

    def near(x, y, scale_=1):
        return x == y if exact else abs(x - y) <= tol * max(1, scale_)

    lam = cert.coefficients
    if any(l < -tol for l in lam) or not near(sum(lam), 1):
        return False
    for p, u in zip(cert.points, cert.normals):
        if not inner.contains(p) or not outer.contains(p):
            return False
        # u is an outer normal at p iff p maximises u over outer
        h = max(dot(u, v) for v in outer.vertices)
        if not near(dot(u, p), h, abs(h)):
            return False
    for i in range(n):
        comb = sum(l * u[i] for l, u in zip(lam, cert.normals))
        mag = max(abs(u[i]) for u in cert.normals)
        if not near(comb, 0, mag):
            return False
    return True


# --- circumradius ---------------------------------------------------------------


@dataclass
class Circumradius:
    """Result of :func:`circumradius`; iterates as ``(rho, t)``."""

    rho: object
    t: tuple
    pairs: list = field(repr=False, default_factory=list)
    weights: tuple = field(repr=False, default=())
    lp: object = field(repr=False, default=None)
    solution: object = field(repr=False, default=None)

    def __iter__(self):
        yield self.rho
        yield self.t


def _points_of(K, backend: Backend):
    if isinstance(K, Polytope):
        return list(K.vertices)
    return [backend.vec(p) for p in K]


def circumradius(K, C: Polytope) -> Circumradius:
    """Smallest ``rho`` with ``K ⊆ rho*C + t`` for some ``t``.

    ``K`` may be a polytope or any finite point set (for instance the two
    endpoints of a segment).
    """
    B = C.backend if not isinstance(K, Polytope) else common_backend(K.backend, C.backend)
    C = C.to_backend(B)
    pts = _points_of(K.to_backend(B) if isinstance(K, Polytope) else K, B)
    if any(len(p) != C.dim for p in pts):
        raise errors.DimensionMismatch("K and C live in different dimensions")
    if C.origin_interior():
        shift = tuple(B.convert(0) for _ in range(C.dim))
    else:
        shift = _centroid(list(C.vertices), B)
    normals = []
    for h in C.halfspaces:
        off = h.rho - dot(h.a, shift)
        normals.append(tuple(x / off for x in h.a))
    n = C.dim
    zero, one = B.convert(0), B.convert(1)
    A, b, pairs = [], [], []
    for v in pts:
        for a in normals:
            A.append([-one] + [-x for x in a])
            b.append(-dot(a, v))
            pairs.append((v, a))
    c = [-one] + [zero] * n
    status, value, x, y, lp, sol = solve_inequality_lp(c, A, b, B)
    if status != "optimal":
        raise errors.LPError("circumradius LP: " + status)
    rho = x[0]
    t = tuple(tx - rho * sx for tx, sx in zip(x[1:], shift))
    return Circumradius(rho, t, pairs, y, lp, sol)


def _certificate_from(cr: Circumradius, backend: Backend) -> ContainmentCertificate:
    cut = 0 if backend.exact else 10 * backend.tol
    chosen = [(pair, w) for pair, w in zip(cr.pairs, cr.weights) if w > cut]
    total = sum(w for _, w in chosen)
    pts = tuple(p for (p, _), _ in chosen)
    nrm = tuple(a for (_, a), _ in chosen)
    lam = tuple(w / total for _, w in chosen)
    return ContainmentCertificate(pts, nrm, lam)


@dataclass
class Containment:
    """Outcome of :func:`is_optimally_contained`; iterates as ``(optimal, certificate)``."""

    optimal: bool
    certificate: Optional[ContainmentCertificate]
    contained: bool
    ratio: object
    verified: bool = False

    def __iter__(self):
        yield self.optimal
        yield self.certificate

    def __bool__(self) -> bool:
        return self.optimal


def is_optimally_contained(K: Polytope, C: Polytope) -> Containment:
    """``K ⊆ C`` and no smaller homothet of ``C`` covers ``K``.

    When optimal, the certificate read off the LP is re-checked by
    :func:`validate_certificate` and the outcome stored in ``verified``.
    """
    B = common_backend(K.backend, C.backend)
    K, C = K.to_backend(B), C.to_backend(B)
    if not C.contains_polytope(K):
        raise errors.NotContained("K is not a subset of C")
    cr = circumradius(K, C)
    rho = cr.rho
    if B.exact:
        tight = rho == 1
    else:
        tight = rho >= 1 - 10 * B.tol
    if not tight:
        return Containment(False, None, True, rho)
    cert = _certificate_from(cr, B)
    return Containment(True, cert, True, rho, validate_certificate(cert, K, C))


# --- asymmetry ----------------------------------------------------------------


@dataclass
class Asymmetry:
    """Minkowski asymmetry ``s`` and a Minkowski center; iterates as ``(s, center)``."""

    s: object
    center: tuple
    certificate: ContainmentCertificate = field(repr=False, default=None)
    raw: Circumradius = field(repr=False, default=None)

    def __iter__(self):
        yield self.s
        yield self.center


@lru_cache(maxsize=512)
def minkowski_asymmetry(C: Polytope) -> Asymmetry:
    """Smallest ``s`` with ``C - c ⊆ s(c - C)``, together with such a center ``c``."""
    B = C.backend
    mC = negate(C)
    cr = circumradius(mC, C)
    s = cr.rho
    slack = 0 if B.exact else 1e3 * B.tol
    if not (1 - slack <= s <= C.dim + slack):
        raise errors.LPError(f"asymmetry {s} outside [1, {C.dim}]")
    center = tuple(-x / (1 + s) for x in cr.t)
    return Asymmetry(s, center, _certificate_from(cr, B), cr)


def is_minkowski_centered(C: Polytope, s=None) -> bool:
    """True if the origin is a Minkowski center of ``C``.

    Checked directly as ``-C ⊆ s C`` rather than by comparing with the center
    returned by the LP, since the center need not be unique.
    """
    if not C.origin_interior():
        return False
    if s is None:
        s = minkowski_asymmetry(C).s
    B = C.backend
    worst = max(C.gauge(tuple(-x for x in v)) for v in C.vertices)
    if B.exact:
        return worst <= s
    return worst <= s + 1e3 * B.tol * max(1, abs(s))


def _require_centered(C: Polytope):
    asym = minkowski_asymmetry(C)
    if not is_minkowski_centered(C, asym.s):
        raise errors.NotMinkowskiCentered("the origin is not a Minkowski center")
    return asym


# --- equivalence and factors ----------------------------------------------------


class Equivalence(NamedTuple):
    minmax_opt: bool
    harm_arith_opt: bool


def check_equivalence(K: Polytope, C: Polytope) -> Equivalence:
    """Optimality of ``K∩C ⊆ conv(K∪C)`` and of ``harm(K,C) ⊆ arith(K,C)``."""
    from .means import arithmetic_mean, harmonic_mean, hull_union, intersect

    B = common_backend(K.backend, C.backend)
    K, C = K.to_backend(B), C.to_backend(B)
    mn = intersect(K, C)
    mx = hull_union(K, C)
    hm = harmonic_mean(K, C)
    am = arithmetic_mean(K, C)
    return Equivalence(
        is_optimally_contained(mn, mx).optimal, is_optimally_contained(hm, am).optimal
    )


class FactorReport(NamedTuple):
    """Minimal factor ``value`` with ``inner ⊆ value * outer`` (both 0-symmetric)."""

    value: object
    inner: Polytope
    outer: Polytope
    certificate: ContainmentCertificate


def symmetric_factor(inner: Polytope, outer: Polytope) -> FactorReport:
    """Containment factor between two 0-symmetric bodies.

    For 0-symmetric sets the optimal translation is zero, so the factor is
    the largest gauge of an inner vertex.  The maximising vertex ``v`` and its
    mirror ``-v`` touch opposite parallel facets, which certifies optimality.
    """
    best, arg, facet = None, None, None
    for v in inner.vertices:
        for h in outer.halfspaces:
            g = dot(h.a, v) / h.rho
            if best is None or g > best:
                best, arg, facet = g, v, h
    half = inner.backend.convert(1) / 2
    cert = ContainmentCertificate(
        (arg, tuple(-x for x in arg)),
        (facet.a, tuple(-x for x in facet.a)),
        (half, half),
    )
    return FactorReport(best, inner, outer, cert)


def measure_alpha(C: Polytope) -> FactorReport:
    """Factor of ``C∩(-C) ⊆ α conv(C∪-C)`` for Minkowski centered ``C``."""
    _require_centered(C)
    sy = four_symmetrizations(C)
    return symmetric_factor(sy.minimum, sy.maximum)


def measure_beta(C: Polytope) -> FactorReport:
    """Factor of ``harm ⊆ β arith`` for Minkowski centered ``C``."""
    _require_centered(C)
    sy = four_symmetrizations(C)
    return symmetric_factor(sy.harmonic, sy.arithmetic)


def measure_omega(C: Polytope) -> FactorReport:
    """Factor of ``arith ⊆ ω harm`` for Minkowski centered ``C``."""
    _require_centered(C)
    sy = four_symmetrizations(C)
    return symmetric_factor(sy.arithmetic, sy.harmonic)


@dataclass
class PartCheck:
    part: str
    inner: str
    outer: str
    expected: object
    measured: object
    contained: bool
    optimal: bool
    passed: bool


def reverse_factor_table(s, backend: Backend) -> dict:
    """Expected reverse factors for asymmetry ``s``, keyed by part label."""
    one = backend.convert(1)
    two = backend.convert(2)
    return {
        "i": ("maximum", "minimum", s),
        "ii": ("maximum", "arithmetic", two * s / (s + one)),
        "iii": ("harmonic", "minimum", two * s / (s + one)),
        "iv": ("arithmetic", "minimum", (s + one) / two),
        "v": ("maximum", "harmonic", (s + one) / two),
        "vi": ("arithmetic", "harmonic", (s + one) / two),
    }


def verify_reverse_factors(C: Polytope, asym: Optional[Asymmetry] = None) -> list:
    """Check every reverse containment of the symmetrization chain.

    Parts i-v must hold with equality and be optimal; part vi is only an
    upper bound, so it passes when the measured factor does not exceed it.
    """
    if asym is None:
        asym = _require_centered(C)
    elif not is_minkowski_centered(C, asym.s):
        raise errors.NotMinkowskiCentered("the origin is not a Minkowski center")
    B = C.backend
    s = asym.s
    sy = four_symmetrizations(C)._asdict()
    out = []
    for part, (inner_name, outer_name, expected) in reverse_factor_table(s, B).items():
        inner, outer = sy[inner_name], sy[outer_name]
        measured = symmetric_factor(inner, outer).value
        target = scale(outer, expected)
        if target.contains_polytope(inner):
            res = is_optimally_contained(inner, target)
        else:
            res = Containment(False, None, False, None)
        if B.exact:
            equal = measured == expected
            below = measured <= expected
        else:
            equal = abs(measured - expected) <= 1e-7
            below = measured <= expected + 1e-7
        if part == "vi":
            passed = below and res.contained
        else:
            passed = equal and res.optimal
        out.append(
            PartCheck(part, inner_name, outer_name, expected, measured, res.contained, res.optimal, passed)
        )
    return out


# --- parallel support -----------------------------------------------------------


class Witness(NamedTuple):
    """``p, -p ∈ bd(C)`` supported by ``a.x <= rho`` and ``-a.x <= rho``."""

    p: tuple
    a: tuple
    rho: object


def parallel_support_witness(C: Polytope) -> Optional[Witness]:
    """Lexicographically smallest boundary point ``p`` with ``-p`` also on the
    boundary and parallel supporting hyperplanes at both, or ``None``.
    """
    if not C.origin_interior():
        raise errors.OriginNotInterior("witness search needs the origin inside C")
    B = C.backend
    sy = four_symmetrizations(C)
    for v in sy.minimum.vertices:
        for h in sy.maximum.halfspaces:
            g = dot(h.a, v) / h.rho
            if (g == 1) if B.exact else g >= 1 - 10 * B.tol:
                return Witness(v, h.a, h.rho)
    return None


# --- diameters -----------------------------------------------------------------


def diameter(K, C: Polytope):
    """``2 max R([x, y], C)`` over vertex pairs of ``K``."""
    B = C.backend
    pts = _points_of(K, B) if not isinstance(K, Polytope) else list(K.to_backend(common_backend(K.backend, B)).vertices)
    best = B.convert(0)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            r = circumradius([pts[i], pts[j]], C).rho
            if r > best:
                best = r
    return 2 * best


def dmax(K, C: Polytope):
    """Largest ``||x - y||_C`` over ordered vertex pairs of ``K``."""
    B = C.backend
    pts = _points_of(K, B) if not isinstance(K, Polytope) else list(K.vertices)
    best = B.convert(0)
    for x in pts:
        for y in pts:
            g = C.gauge(tuple(a - b for a, b in zip(x, y)))
            if g > best:
                best = g
    return best


# --- polarity ---------------------------------------------------------------------


def polar_optimality_check(P: Polytope, K: Polytope) -> bool:
    """Whether optimality of ``P ⊆ K`` agrees with that of ``K° ⊆ P°``.

    Both bodies must be 0-symmetric; without symmetry the two can differ.
    """
    from .means import is_symmetric

    if not (is_symmetric(P) and is_symmetric(K)):
        raise errors.NotSymmetric("polar optimality needs 0-symmetric bodies")
    a = is_optimally_contained(P, K).optimal
    b = is_optimally_contained(polar(K), polar(P)).optimal
    return a == b


def closest_facet_point(P: Polytope):
    """Foot ``v`` of the perpendicular from 0 to a nearest facet, and ``||v||^2``."""
    best = None
    for h in P.halfspaces:
        nn = dot(h.a, h.a)
        d2 = h.rho * h.rho / nn
        if best is None or d2 < best[0]:
            best = (d2, h)
    d2, h = best
    nn = dot(h.a, h.a)
    v = tuple(h.rho * x / nn for x in h.a)
    return v, d2


def closest_facet_polarity(P: Polytope) -> Containment:
    """Optimal containment of ``P°`` in ``||v||^-2 P`` for 0-symmetric ``P``."""
    from .means import is_symmetric

    if not is_symmetric(P):
        raise errors.NotSymmetric("closest facet polarity needs a 0-symmetric body")
    v, d2 = closest_facet_point(P)
    return is_optimally_contained(polar(P), scale(P, 1 / d2))
