"""Full-dimensional convex polytopes with both representations.

A :class:`Polytope` always carries its vertex list and its irredundant
facet list.  Whichever representation is supplied, the other is computed at
construction time by the double description method, so instances are
immutable and safe to share between threads.

Canonical form
--------------
* vertices are sorted lexicographically;
* a facet ``a . x <= rho`` is scaled so that ``max |a_i| = 1`` (exact) or
  ``||a|| = 1`` (approx), and facets are sorted lexicographically.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import errors
from .dd import extreme_rays
from .linalg import independent_rows, inverse, matvec, rank, solve, transpose
from .lp import LinearProgram, solve_lp
from .scalar import EXACT, Approx, Backend, common_backend, dot, format_scalar, parse_scalar


class Halfspace(NamedTuple):
    """The closed halfspace ``a . x <= rho``."""

    a: tuple
    rho: object


# --- helpers -------------------------------------------------------------


def _normalize_halfspace(a, rho, backend: Backend) -> Halfspace:
    if backend.exact:
        m = max(abs(x) for x in a)
    else:
        m = math.sqrt(sum(x * x for x in a))
    if m == 0:
        raise errors.DimensionMismatch("halfspace with zero normal")
    if backend.exact:
        return Halfspace(tuple(x / m for x in a), rho / m)
    # adding 0.0 turns -0.0 into 0.0 so sorting and output are stable
    return Halfspace(tuple(x / m + 0.0 for x in a), rho / m + 0.0)


def _refine_vertex(guess, tight, backend):
    """Re-solve a float vertex from n independent tight halfspaces."""
    n = len(guess)
    rows = [list(h.a) for h in tight]
    idx = independent_rows(rows, Approx(1e-7))
    if len(idx) < n:
        return guess
    try:
        return tuple(solve([rows[i] for i in idx[:n]], [tight[i].rho for i in idx[:n]], backend))
    except errors.SingularMatrix:
        return guess


def _refine_facet(guess, tight_pts, backend):
    """Re-solve a float facet normal from n affinely independent points."""
    n = len(guess)
    p0 = tight_pts[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in tight_pts[1:]]
    idx = independent_rows(diffs, Approx(1e-7))
    if len(idx) < n - 1:
        return guess
    k = max(range(n), key=lambda j: abs(guess[j]))
    e = [0.0] * n
    e[k] = 1.0
    try:
        a = solve([diffs[i] for i in idx[: n - 1]] + [e], [0.0] * (n - 1) + [guess[k]], backend)
    except errors.SingularMatrix:
        return guess
    return tuple(a)


def _dedupe(points: list, backend: Backend, fast: bool = False) -> list:
    if backend.exact:
        return sorted(set(points))
    if fast:
        # grid bucketing; misses near cell borders are harmless upstream
        g = 10 * backend.tol
        seen = {}
        for p in points:
            seen.setdefault(tuple(round(x / g) for x in p), p)
        return sorted(seen.values())
    out: list = []
    tol = backend.tol
    for p in sorted(points):
        for q in out:
            if max(abs(x - y) for x, y in zip(p, q)) <= tol:
                break
        else:
            out.append(p)
    return out


def _affine_rank(points: Sequence[Sequence], backend: Backend) -> int:
    if not points:
        return -1
    p0 = points[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    if not diffs:
        return 0
    return rank(diffs, backend)


def _centroid(points, backend):
    k = len(points)
    n = len(points[0])
    div = backend.convert(k)
    return tuple(sum((p[i] for p in points), backend.convert(0)) / div for i in range(n))


def solve_inequality_lp(c, A, b, backend: Backend):
    """Solve ``max c.x s.t. A x <= b`` with ``x`` free, through its dual.

    The dual ``min b.y, A^T y = c, y >= 0`` has only ``len(c)`` rows, which
    keeps the tableau small when there are many more constraints than
    variables.  Returns ``(status, value, x, y, lp, solution)``; ``x`` is read
    off the shadow prices of the dual's equality rows.
    """
    n = len(c)
    m = len(A)
    cols = transpose(A) if m else [[] for _ in range(n)]
    lp = LinearProgram(
        objective=list(b),
        constraints=[(cols[k], "==", c[k]) for k in range(n)],
        sense="min",
        bounds=[(0, None)] * m,
        backend=backend,
    )
    sol = solve_lp(lp)
    if sol.status == "infeasible":
        return "unbounded", None, None, None, lp, sol
    if sol.status == "unbounded":
        return "infeasible", None, None, None, lp, sol
    return "optimal", sol.value, tuple(sol.dual), tuple(sol.x), lp, sol


def interior_point(halfspaces: Sequence[Halfspace], backend: Backend):
    """Center of a largest inscribed cube (max-norm normals) or ball (unit normals).

    Returns ``(point, slack)``; ``slack > 0`` iff the system has interior.
    Raises Unbounded when the slack can grow without limit.
    """
    n = len(halfspaces[0].a)
    A, b = [], []
    for h in halfspaces:
        w = max(abs(x) for x in h.a) if backend.exact else math.sqrt(sum(x * x for x in h.a))
        A.append(list(h.a) + [w])
        b.append(h.rho)
    zero, one = backend.convert(0), backend.convert(1)
    c = [zero] * n + [one]
    status, value, x, _, _, _ = solve_inequality_lp(c, A, b, backend)
    if status == "unbounded":
        raise errors.Unbounded("halfspace system contains arbitrarily large balls")
    if status != "optimal":
        raise errors.NoInterior("interior point LP failed: " + status)
    return tuple(x[:n]), x[n]


def _facets_from_points(points: list, backend: Backend):
    """Facets of conv(points) as ``(a, b, tight_mask)`` in original coordinates."""
    n = len(points[0])
    if backend.exact:
        c = tuple(Fraction(0) for _ in range(n))
        shifted = points
    else:
        c = _centroid(points, backend)
        shifted = [tuple(x - y for x, y in zip(p, c)) for p in points]
    one = backend.convert(1)
    rows = [[-x for x in p] + [one] for p in shifted]
    rays = extreme_rays(rows, backend)
    facets = []
    for ray, mask in rays:
        a = ray[:n]
        if backend.exact:
            a = [Fraction(x) for x in a]
            b = Fraction(ray[n])
        else:
            b = ray[n]
        if all(x == 0 for x in a):
            continue
        facets.append((tuple(a), b + dot(a, c), mask))
    return facets


def _vertex_mask(points, facets, backend, n):
    keep = []
    for i, p in enumerate(points):
        bit = 1 << i
        normals = [f[0] for f in facets if f[2] & bit]
        if len(normals) >= n and rank(normals, backend) == n:
            keep.append(i)
    return keep


def _order_pairs(pairs, backend):
    """Drop duplicate polar points and order them far-first."""
    seen = {}
    for p, h in pairs:
        key = p if backend.exact else tuple(round(x, 9) for x in p)
        seen.setdefault(key, (p, h))
    out = list(seen.values())
    out.sort(key=lambda ph: (-sum(float(x) ** 2 for x in ph[0]), ph[0]))
    return out


def _order_for_dd(points, backend):
    # far points first: the initial simplex is then large and fewer points
    # trigger updates later on
    c = _centroid(points, backend)
    return sorted(
        points,
        key=lambda p: (-sum((float(x) - float(y)) ** 2 for x, y in zip(p, c)), p),
    )


# --- the class -------------------------------------------------------------


class Polytope:
    """An immutable full-dimensional polytope in ``R^n``."""

    __slots__ = ("dim", "backend", "vertices", "halfspaces")

    def __init__(self, dim, backend, vertices, halfspaces):
        # trusted constructor; use from_vertices / from_halfspaces instead
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "backend", backend)
        if backend.exact:
            vkey = hkey = None
        else:
            # sort on rounded keys so float noise does not reorder entries
            def vkey(v):
                return tuple(round(x, 7) for x in v) + tuple(v)

            def hkey(h):
                return tuple(round(x, 7) for x in h.a) + tuple(h.a)

        object.__setattr__(self, "vertices", tuple(sorted(vertices, key=vkey)))
        object.__setattr__(self, "halfspaces", tuple(sorted(halfspaces, key=hkey)))

    def __setattr__(self, key, value):
        raise AttributeError("Polytope is immutable")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_vertices(cls, points: Iterable[Sequence], backend: Backend = EXACT) -> "Polytope":
        pts = [backend.vec(p) for p in points]
        if not pts:
            raise errors.NotFullDimensional("empty point set")
        n = len(pts[0])
        if n == 0 or any(len(p) != n for p in pts):
            raise errors.DimensionMismatch("points of inconsistent dimension")
        pts = _dedupe(pts, backend, fast=True)
        if len(pts) < n + 1 or _affine_rank(pts, backend) < n:
            raise errors.NotFullDimensional("points do not span the space")
        pts = _order_for_dd(pts, backend)
        facets = _facets_from_points(pts, backend)
        keep = _vertex_mask(pts, facets, backend, n)
        verts = _dedupe([pts[i] for i in keep], backend)
        if not backend.exact:
            refined = []
            for a, b, mask in facets:
                on = [p for i, p in enumerate(pts) if mask >> i & 1]
                refined.append((_refine_facet(a, on, backend), b, mask))
            facets = refined
        return cls._finish(n, backend, verts, [(a, b) for a, b, _ in facets])

    @classmethod
    def from_halfspaces(cls, halfspaces: Iterable, backend: Backend = EXACT) -> "Polytope":
        hs = []
        for h in halfspaces:
            a, rho = (h.a, h.rho) if isinstance(h, Halfspace) else h
            hs.append(Halfspace(backend.vec(a), backend.convert(rho)))
        if not hs:
            raise errors.Unbounded("no halfspaces")
        n = len(hs[0].a)
        if any(len(h.a) != n for h in hs):
            raise errors.DimensionMismatch("halfspaces of inconsistent dimension")
        hs = [h for h in hs if any(not backend.is_zero(x) for x in h.a)] or hs
        hs = [_normalize_halfspace(h.a, h.rho, backend) for h in hs]
        c, slack = interior_point(hs, backend)
        if (slack <= 0) if backend.exact else (slack <= 10 * backend.tol):
            raise errors.NoInterior("halfspace system has empty interior")
        pairs = []
        for h in hs:
            r = h.rho - dot(h.a, c)
            pairs.append((tuple(x / r for x in h.a), h))
        pairs = _order_pairs(pairs, backend)
        polar_pts = [p for p, _ in pairs]
        try:
            if _affine_rank(polar_pts, backend) < n:
                raise errors.NotFullDimensional("")
            facets = _facets_from_points(polar_pts, backend)
        except errors.NotFullDimensional:
            raise errors.Unbounded("halfspace system is unbounded") from None
        verts = []
        for u, beta, _ in facets:
            big = max(1, max(abs(x) for x in u))
            if (beta <= 0) if backend.exact else (beta <= 10 * backend.tol * big):
                raise errors.Unbounded("halfspace system is unbounded")
            verts.append(tuple(x / beta + y for x, y in zip(u, c)))
        if not backend.exact:
            verts = [
                _refine_vertex(v, [h for i, (_, h) in enumerate(pairs) if f[2] >> i & 1], backend)
                for v, f in zip(verts, facets)
            ]
        # halfspace i is a facet iff the vertices on it span a hyperplane
        keep = []
        for i, (_, h) in enumerate(pairs):
            bit = 1 << i
            on = [verts[k] for k, f in enumerate(facets) if f[2] & bit]
            if len(on) >= n and _affine_rank(on, backend) == n - 1:
                keep.append((h.a, h.rho))
        return cls._finish(n, backend, _dedupe(verts, backend), keep)

    @classmethod
    def _finish(cls, n, backend, verts, facets) -> "Polytope":
        hs = []
        for a, b in facets:
            h = _normalize_halfspace(a, b, backend)
            if not backend.exact:
                # recompute the offset as the support value for accuracy
                h = Halfspace(h.a, max(dot(h.a, v) for v in verts))
            hs.append(h)
        if backend.exact:
            hs = sorted(set(hs))
        else:
            uniq: list = []
            for h in sorted(hs):
                for g in uniq:
                    if max(abs(x - y) for x, y in zip(h.a, g.a)) <= 1e3 * backend.tol:
                        break
                else:
                    uniq.append(h)
            hs = uniq
        return cls(n, backend, verts, hs)

    # -- queries -------------------------------------------------------------

    def contains(self, x: Sequence) -> bool:
        x = self.backend.vec(x)
        B = self.backend
        if B.exact:
            return all(dot(h.a, x) <= h.rho for h in self.halfspaces)
        return all(dot(h.a, x) <= h.rho + B.tol * (1 + abs(h.rho)) for h in self.halfspaces)

    def contains_polytope(self, other: "Polytope") -> bool:
        return all(self.contains(v) for v in other.vertices)

    def origin_interior(self) -> bool:
        B = self.backend
        return all(B.is_pos(h.rho) for h in self.halfspaces)

    def gauge(self, x: Sequence):
        """Minkowski functional ``min{t >= 0 : x in tP}``; needs 0 interior."""
        if not self.origin_interior():
            raise errors.OriginNotInterior("gauge needs the origin in the interior")
        x = self.backend.vec(x)
        best = self.backend.convert(0)
        for h in self.halfspaces:
            v = dot(h.a, x) / h.rho
            if v > best:
                best = v
        return best

    def support(self, a: Sequence):
        a = self.backend.vec(a)
        return max(dot(a, v) for v in self.vertices)

    def to_backend(self, backend: Backend) -> "Polytope":
        if backend == self.backend:
            return self
        if backend.exact:
            raise ValueError("cannot convert an approximate polytope to exact")
        verts = [tuple(float(x) for x in v) for v in self.vertices]
        hs = [(tuple(float(x) for x in h.a), float(h.rho)) for h in self.halfspaces]
        return Polytope._finish(self.dim, backend, verts, hs)

    def isclose(self, other: "Polytope", tol: float = 1e-7) -> bool:
        if self.dim != other.dim or len(self.vertices) != len(other.vertices):
            return False
        used = set()
        for v in self.vertices:
            for j, w in enumerate(other.vertices):
                if j not in used and max(abs(float(x) - float(y)) for x, y in zip(v, w)) <= tol:
                    used.add(j)
                    break
            else:
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return (
            self.backend == other.backend
            and self.dim == other.dim
            and self.vertices == other.vertices
            and self.halfspaces == other.halfspaces
        )

    def __hash__(self) -> int:
        return hash((self.backend, self.dim, self.vertices))

    def __repr__(self) -> str:
        return (
            f"Polytope(dim={self.dim}, backend={self.backend!r}, "
            f"{len(self.vertices)} vertices, {len(self.halfspaces)} facets)"
        )

    # -- serialization ---------------------------------------------------------

    def to_json(self, representation: str = "vertices") -> dict:
        if representation == "vertices":
            return {
                "dim": self.dim,
                "vertices": [[format_scalar(x) for x in v] for v in self.vertices],
            }
        return {
            "dim": self.dim,
            "halfspaces": [
                {"a": [format_scalar(x) for x in h.a], "rho": format_scalar(h.rho)}
                for h in self.halfspaces
            ],
        }

    @classmethod
    def from_json(cls, obj: dict, backend: Backend = EXACT) -> "Polytope":
        conv = (lambda t: parse_scalar(t)) if backend.exact else (lambda t: float(parse_scalar(t)))
        dim = obj.get("dim")
        if "vertices" in obj:
            pts = [[conv(x) for x in v] for v in obj["vertices"]]
            P = cls.from_vertices(pts, backend)
        elif "halfspaces" in obj:
            hs = [([conv(x) for x in h["a"]], conv(h["rho"])) for h in obj["halfspaces"]]
            P = cls.from_halfspaces(hs, backend)
        else:
            raise ValueError("polytope JSON needs 'vertices' or 'halfspaces'")
        if dim is not None and dim != P.dim:
            raise errors.DimensionMismatch("declared dim does not match data")
        return P


# --- elementary maps ----------------------------------------------------------


def translate(P: Polytope, t: Sequence) -> Polytope:
    B = P.backend
    t = B.vec(t)
    if len(t) != P.dim:
        raise errors.DimensionMismatch("translation vector has wrong length")
    verts = [tuple(x + y for x, y in zip(v, t)) for v in P.vertices]
    hs = [(h.a, h.rho + dot(h.a, t)) for h in P.halfspaces]
    return Polytope._finish(P.dim, B, verts, hs)


def linear_image(P: Polytope, A: Sequence[Sequence]) -> Polytope:
    """Image of ``P`` under an invertible linear map."""
    B = P.backend
    A = [B.vec(row) for row in A]
    if len(A) != P.dim or any(len(r) != P.dim for r in A):
        raise errors.DimensionMismatch("matrix must be dim x dim")
    Ainv = inverse(A, B)
    AinvT = transpose(Ainv)
    verts = [matvec(A, v) for v in P.vertices]
    hs = [(matvec(AinvT, h.a), h.rho) for h in P.halfspaces]
    return Polytope._finish(P.dim, B, verts, hs)


def scale(P: Polytope, rho) -> Polytope:
    B = P.backend
    rho = B.convert(rho)
    if rho == 0:
        raise errors.ZeroScale("scaling factor is zero")
    verts = [tuple(rho * x for x in v) for v in P.vertices]
    if rho > 0:
        hs = [(h.a, rho * h.rho) for h in P.halfspaces]
    else:
        hs = [(tuple(-x for x in h.a), -rho * h.rho) for h in P.halfspaces]
    return Polytope._finish(P.dim, B, verts, hs)


def negate(P: Polytope) -> Polytope:
    return scale(P, -1)


def unify(*polys: Polytope):
    """Bring polytopes to a common backend, checking dimensions agree."""
    dims = {P.dim for P in polys}
    if len(dims) != 1:
        raise errors.DimensionMismatch(f"dimensions differ: {sorted(dims)}")
    B = common_backend(*(P.backend for P in polys))
    return B, [P.to_backend(B) for P in polys]
