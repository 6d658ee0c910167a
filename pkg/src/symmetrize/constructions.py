"""Parametrised test bodies.

Every constructor returns a :class:`~symmetrize.polytope.Polytope` whose
Minkowski center is the origin.  Bodies with rational data can be built with
the exact backend; where a construction involves irrational numbers only
through a coordinate scaling (``sqrt(3)``, ``phi + 1``) the exact variant
drops that scaling, which is an affine change of coordinates and leaves every
containment factor untouched.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import errors
from .containment import (
    is_minkowski_centered,
    minkowski_asymmetry,
    parallel_support_witness,
)
from .means import intersect
from .polytope import Polytope, scale, translate
from .scalar import APPROX, EXACT, Backend, parse_scalar

PHI = (1 + math.sqrt(5)) / 2


def _param(s, backend: Backend):
    if backend.exact:
        if isinstance(s, float):
            raise errors.BadParams("exact constructions need a rational parameter")
        return parse_scalar(s)
    return float(parse_scalar(s)) if isinstance(s, str) else float(s)


# --- simplices ------------------------------------------------------------------


def regular_simplex(n: int, backend: Backend = APPROX) -> Polytope:
    """Regular simplex with unit vertices centred at the origin (approx only)."""
    if n < 1:
        raise errors.ParameterOutOfRange("dimension must be at least 1")
    if backend.exact:
        raise errors.BadParams("the regular simplex has irrational vertices")
    return Polytope.from_vertices(_regular_vertices(n), backend)


def rational_simplex(n: int, backend: Backend = EXACT) -> Polytope:
    """``conv{e_1, ..., e_n, -(1, ..., 1)}``, centroid at the origin."""
    if n < 1:
        raise errors.ParameterOutOfRange("dimension must be at least 1")
    verts = []
    for i in range(n):
        verts.append(tuple(1 if j == i else 0 for j in range(n)))
    verts.append(tuple(-1 for _ in range(n)))
    return Polytope.from_vertices(verts, backend)


def _simplex(n: int, backend: Backend) -> Polytope:
    return rational_simplex(n, backend) if backend.exact else regular_simplex(n, backend)


def simplex_cap(n: int, s, backend: Backend = EXACT) -> Polytope:
    """``S ∩ (-s S)`` for a simplex ``S`` centred at its centroid, ``1 <= s <= n``."""
    s = _param(s, backend)
    if not 1 <= s <= n:
        raise errors.ParameterOutOfRange(f"s must lie in [1, {n}]")
    S = _simplex(n, backend)
    return intersect(S, scale(S, -s))


# --- golden house ---------------------------------------------------------------


def golden_house(n: int, backend: Backend = APPROX) -> Polytope:
    """Simplex with two opposite slabs cut off along ``p1 - p2``.

    Its asymmetry is the smallest value at which the minimum and maximum
    symmetrizations stop being optimally contained.
    """
    if n < 2:
        raise errors.ParameterOutOfRange("golden house needs n >= 2")
    S = regular_simplex(n, backend)
    p1, p2 = _regular_vertices(n)[:2]
    xi = (1 - n + math.sqrt((n - 2) * n + 5)) / 4
    eta = 2 * xi * (1 + 1 / n)
    d = tuple(a - b for a, b in zip(p1, p2))
    slab = Polytope.from_halfspaces(
        list(S.halfspaces) + [(d, eta), (tuple(-x for x in d), eta)], backend
    )
    nu = (1 - 2 * xi) / (1 - 2 * xi - n)
    s = n - 1 + 2 * xi
    # Minkowski center on the axis through p1 + p2
    c = tuple(s / (s + 1) * nu / 2 * (a + b) for a, b in zip(p1, p2))
    return translate(slab, tuple(-x for x in c))


def _regular_vertices(n: int):
    basis = []
    for k in range(1, n + 1):
        c = 1 / math.sqrt(k * (k + 1))
        basis.append([c] * k + [-k * c] + [0.0] * (n - k))
    r = math.sqrt((n + 1) / n)
    verts = []
    for i in range(n + 1):
        e = [-1 / (n + 1)] * (n + 1)
        e[i] += 1
        verts.append(tuple(r * sum(b[j] * e[j] for j in range(n + 1)) for b in basis))
    return verts


def golden_house_witness(n: int):
    """The symmetric boundary pair ``±xi (p1 - p2)`` of :func:`golden_house`."""
    p1, p2 = _regular_vertices(n)[:2]
    xi = (1 - n + math.sqrt((n - 2) * n + 5)) / 4
    return tuple(xi * (a - b) for a, b in zip(p1, p2))


# --- planar families ------------------------------------------------------------


def _golden_ok(s, backend) -> bool:
    if backend.exact:
        return s > 0 and s * s - s - 1 >= 0
    return s >= PHI - 1e-12


def alpha_pentagon(s, backend: Backend = APPROX) -> Polytope:
    """Pentagon with asymmetry ``s`` in ``[phi, 2]`` and min/max factor ``s/(s^2-1)``."""
    s = _param(s, backend)
    if not (_golden_ok(s, backend) and s <= 2):
        raise errors.ParameterOutOfRange("alpha pentagon needs phi <= s <= 2")
    k = 1 if backend.exact else PHI + 1
    one = backend.convert(1)
    top = k * (2 - s - one / (s + 1))
    low = -k / (s + 1)
    apex = k * s / (s + 1)
    verts = [(one, top), (-one, top), (one, low), (-one, low), (0 * one, apex)]
    return Polytope.from_vertices(verts, backend)


def beta_hexagon(s, backend: Backend = EXACT) -> Polytope:
    """Hexagon with asymmetry ``s`` in ``[1, 2]`` and harmonic/arithmetic factor ``4s/(s+1)^2``."""
    s = _param(s, backend)
    if not 1 <= s <= 2:
        raise errors.ParameterOutOfRange("beta hexagon needs 1 <= s <= 2")
    k = Fraction(1, 3) if backend.exact else math.sqrt(3) / 3
    half = backend.convert(1) / 2
    pts = [
        (k * (1 - s * half), s * half),
        (k * (s + 1) * half, half - s * half),
        (k * (s - half), -half),
    ]
    verts = []
    for x, y in pts:
        verts += [(x, y), (-x, y)]
    return Polytope.from_vertices(verts, backend)


def beta_pentagon(s, backend: Backend = EXACT) -> Polytope:
    """Pentagon for ``s`` in ``[phi, 2]`` whose harmonic/arithmetic factor switches
    formula at ``s = 5/3``.
    """
    s = _param(s, backend)
    if not (_golden_ok(s, backend) and s <= 2):
        raise errors.ParameterOutOfRange("beta pentagon needs phi <= s <= 2")
    one = backend.convert(1)
    kx = (s - 1) / 2 if backend.exact else math.sqrt(3) / 2 * (s - 1)
    ky = Fraction(3, 2) if backend.exact else 1.5
    top = ky * (-one / (s + 1) + 2 - s)
    low = -ky / (s + 1)
    apex = ky * s / (s + 1)
    verts = [(kx, top), (-kx, top), (kx, low), (-kx, low), (0 * one, apex)]
    return Polytope.from_vertices(verts, backend)


def regular_kgon(k: int, backend: Backend = APPROX) -> Polytope:
    """Regular ``k``-gon (odd ``k``) with circumradius 1 centred at the origin."""
    if k < 3:
        raise errors.ParameterOutOfRange("k must be at least 3")
    if k % 2 == 0:
        raise errors.EvenK("k must be odd")
    if backend.exact:
        raise errors.BadParams("regular k-gons have irrational vertices")
    verts = [
        (math.cos(math.pi / 2 + 2 * math.pi * j / k), math.sin(math.pi / 2 + 2 * math.pi * j / k))
        for j in range(k)
    ]
    return Polytope.from_vertices(verts, backend)


def truncated_hexagon(s, backend: Backend = EXACT) -> Polytope:
    """Hexagonal body for ``1 < s < 2`` whose arithmetic/harmonic factor stays
    strictly below ``(s+1)/2``.
    """
    s = _param(s, backend)
    if not 1 < s < 2:
        raise errors.ParameterOutOfRange("truncated hexagon needs 1 < s < 2")
    S = _simplex(2, backend)
    cut = scale(S, -s)
    K = intersect(S, cut)
    # order vertices clockwise, starting on an edge cut out by -sS
    verts = sorted(
        K.vertices, key=lambda v: -math.atan2(float(v[1]), float(v[0]))
    )
    B = backend

    def on_cut(p, q):
        for h in cut.halfspaces:
            if B.is_zero(_dot(h.a, p) - h.rho) and B.is_zero(_dot(h.a, q) - h.rho):
                return True
        return False

    for start in range(6):
        ring = verts[start:] + verts[:start]
        if on_cut(ring[0], ring[1]):
            break
    p = {i + 1: ring[i] for i in range(6)}
    one = B.convert(1)

    def mid(a, b):
        return tuple((x + y) / 2 for x, y in zip(a, b))

    def diff(a, b):
        return tuple((x - y) / (s + one) for x, y in zip(a, b))

    pts = [
        p[2], p[4], p[6],
        mid(p[1], p[2]), mid(p[3], p[4]), mid(p[5], p[6]),
        diff(p[1], p[4]), diff(p[3], p[6]), diff(p[5], p[2]),
    ]
    return Polytope.from_vertices(pts, B)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# --- transformations -------------------------------------------------------------


def asymmetry_descent(C: Polytope, s_target) -> Polytope:
    """Body with asymmetry ``s_target`` that keeps the parallel-support property.

    Built from the touching points of the optimal containment ``-C ⊆ s C``
    (rescaled onto the boundary of ``C``), their images under ``x -> -s_target x``
    and a symmetric boundary pair ``±p`` of ``C`` with parallel supports.
    """
    B = C.backend
    s_target = _param(s_target, B)
    asym = minkowski_asymmetry(C)
    s = asym.s
    if not is_minkowski_centered(C, s):
        raise errors.NotMinkowskiCentered("descent needs a Minkowski centered body")
    if B.exact:
        ok = 1 <= s_target <= s
    else:
        ok = 1 - 1e-12 <= s_target <= s + 1e-9
    if not ok:
        raise errors.ParameterOutOfRange("target asymmetry must lie in [1, s(C)]")
    w = parallel_support_witness(C)
    if w is None:
        raise errors.PrerequisiteFails("C has no symmetric pair with parallel supports")
    touch = []
    for v in asym.certificate.points:
        q = tuple(x / s for x in v)
        if q not in touch:
            touch.append(q)
    pts = list(touch)
    pts += [tuple(-s_target * x for x in q) for q in touch]
    pts += [w.p, tuple(-x for x in w.p)]
    return Polytope.from_vertices(pts, B)


def random_centered_polytope(n: int, m: int, seed: int, backend: Backend = EXACT) -> Polytope:
    """Hull of ``m`` seeded random points, translated to its Minkowski center.

    Exact polytopes use integer points in ``[-12, 12]^n``; approximate ones
    use standard normal coordinates.  Draws repeat until the hull is
    full-dimensional.
    """
    if m < n + 1:
        raise errors.ParameterOutOfRange("need at least n + 1 points")
    rng = random.Random(seed)
    for _ in range(_MAX_DRAWS):
        try:
            P = Polytope.from_vertices(_draw(rng, n, m, backend), backend)
        except errors.NotFullDimensional:
            continue
        c = minkowski_asymmetry(P).center
        return translate(P, tuple(-x for x in c))
    raise errors.NotFullDimensional("no full-dimensional draw")


def random_body(n: int, m: int, seed: int, backend: Backend = EXACT) -> Polytope:
    """Seeded random polytope that contains the origin in its interior."""
    rng = random.Random(seed)
    for _ in range(_MAX_DRAWS):
        try:
            P = Polytope.from_vertices(_draw(rng, n, m, backend), backend)
        except errors.NotFullDimensional:
            continue
        if P.origin_interior():
            return P
    raise errors.NoInterior("no draw contained the origin")


_MAX_DRAWS = 200


def _draw(rng, n, m, backend):
    if backend.exact:
        return [tuple(rng.randint(-12, 12) for _ in range(n)) for _ in range(m)]
    return [tuple(rng.gauss(0.0, 1.0) for _ in range(n)) for _ in range(m)]


def embed(C: Polytope, n_target: int, delta=None, apex_ratio=None) -> Polytope:
    """Lift a Minkowski centered ``C`` into ``R^n_target`` as an iterated bipyramid.

    Each new axis ``e`` adds the apexes ``delta e`` and ``-apex_ratio delta e``.
    The apex ratio defaults to ``s(C)``, which keeps the asymmetry and the
    min/max and harmonic/arithmetic factors.  ``apex_ratio=1`` keeps the
    asymmetry and the arithmetic/harmonic factor instead.  A prism over ``C``
    would keep the asymmetry but always has min/max factor 1.
    """
    if n_target <= C.dim:
        raise errors.ParameterOutOfRange("target dimension must exceed dim(C)")
    B = C.backend
    if delta is None:
        delta = Fraction(1, 1000) if B.exact else 1e-3
    delta = B.convert(delta)
    if delta <= 0:
        raise errors.ParameterOutOfRange("delta must be positive")
    s = minkowski_asymmetry(C).s
    if not is_minkowski_centered(C, s):
        raise errors.NotMinkowskiCentered("embed needs a Minkowski centered body")
    r = s if apex_ratio is None else B.convert(apex_ratio)
    if not B.le(1, r) or not B.le(r, s):
        raise errors.ParameterOutOfRange("apex ratio must lie in [1, s(C)]")
    zero = B.convert(0)
    pts = list(C.vertices)
    for d in range(C.dim, n_target):
        pts = [v + (zero,) for v in pts]
        pts.append((zero,) * d + (delta,))
        pts.append((zero,) * d + (-r * delta,))
    return Polytope.from_vertices(pts, B)


CONSTRUCTIONS = {
    "regular_simplex": regular_simplex,
    "rational_simplex": rational_simplex,
    "simplex_cap": simplex_cap,
    "golden_house": golden_house,
    "alpha_pentagon": alpha_pentagon,
    "beta_hexagon": beta_hexagon,
    "beta_pentagon": beta_pentagon,
    "regular_kgon": regular_kgon,
    "truncated_hexagon": truncated_hexagon,
    "random_centered_polytope": random_centered_polytope,
    "random_body": random_body,
}
