"""Set operations and the four classical symmetrizations.

For a body ``C`` with the origin in its interior the four symmetrizations
are, from smallest to largest,

* minimum:     ``C ∩ (-C)``
* harmonic:    ``(½(C° + (-C)°))°``
* arithmetic:  ``½(C - C)``
* maximum:     ``conv(C ∪ -C)``
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from . import errors
from .polytope import Halfspace, Polytope, negate, scale, unify


def polar(P: Polytope) -> Polytope:
    """Polar body ``{y : x.y <= 1 for all x in P}``.

    Both representations swap roles, so no hull computation is needed.
    """
    if not P.origin_interior():
        raise errors.OriginNotInterior("polar needs the origin in the interior")
    B = P.backend
    one = B.convert(1)
    verts = [tuple(x / h.rho for x in h.a) for h in P.halfspaces]
    hs = [(v, one) for v in P.vertices]
    return Polytope._finish(P.dim, B, verts, hs)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    B, (P, Q) = unify(P, Q)
    pts = [tuple(x + y for x, y in zip(u, v)) for u in P.vertices for v in Q.vertices]
    return Polytope.from_vertices(pts, B)


def intersect(P: Polytope, Q: Polytope) -> Polytope:
    B, (P, Q) = unify(P, Q)
    try:
        return Polytope.from_halfspaces(list(P.halfspaces) + list(Q.halfspaces), B)
    except errors.NoInterior:
        raise errors.EmptyOrLowerDimensionalIntersection(
            "intersection is empty or has no interior"
        ) from None


def hull_union(P: Polytope, Q: Polytope) -> Polytope:
    B, (P, Q) = unify(P, Q)
    return Polytope.from_vertices(list(P.vertices) + list(Q.vertices), B)


def arithmetic_mean(K: Polytope, C: Polytope) -> Polytope:
    S = minkowski_sum(K, C)
    return scale(S, _half(S))


def harmonic_mean(K: Polytope, C: Polytope) -> Polytope:
    """Polar of the arithmetic mean of the polars."""
    S = minkowski_sum(polar(K), polar(C))
    return polar(scale(S, _half(S)))


def _half(P: Polytope):
    return P.backend.convert(1) / 2


class Symmetrizations(NamedTuple):
    minimum: Polytope
    harmonic: Polytope
    arithmetic: Polytope
    maximum: Polytope


@lru_cache(maxsize=512)
def four_symmetrizations(C: Polytope) -> Symmetrizations:
    """The chain ``min ⊆ harm ⊆ arith ⊆ max`` of 0-symmetric bodies built from C."""
    mC = negate(C)
    return Symmetrizations(
        minimum=intersect(C, mC),
        harmonic=harmonic_mean(C, mC),
        arithmetic=arithmetic_mean(C, mC),
        maximum=hull_union(C, mC),
    )


def gauge(C: Polytope, x):
    return C.gauge(x)


def support(C: Polytope, a):
    return C.support(a)


def is_symmetric(P: Polytope) -> bool:
    """True if ``P = -P`` (within tolerance in approx mode)."""
    if P.backend.exact:
        return set(P.vertices) == set(negate(P).vertices)
    return P.isclose(negate(P), 1e3 * P.backend.tol)


__all__ = [
    "Halfspace",
    "Symmetrizations",
    "arithmetic_mean",
    "four_symmetrizations",
    "gauge",
    "harmonic_mean",
    "hull_union",
    "intersect",
    "is_symmetric",
    "minkowski_sum",
    "polar",
    "support",
]
