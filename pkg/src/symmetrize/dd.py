"""Double description method for pointed polyhedral cones.

The only entry point used elsewhere is :func:`extreme_rays`, which lists the
extreme rays of ``{y : r . y >= 0 for every row r}`` together with the set of
rows each ray makes tight.  Exact inputs are rescaled to primitive integer
vectors so the inner loop runs on Python ints instead of Fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .errors import NotFullDimensional
from .linalg import independent_rows, inverse, transpose
from .scalar import Backend, primitive_int_vector


def _normalize_float(v):
    m = max(abs(x) for x in v)
    if m == 0:
        return v
    return [x / m for x in v]


def _normalize_int(v):
    g = reduce(math.gcd, v, 0)
    if g > 1:
        return [x // g for x in v]
    return v


def extreme_rays(rows: Sequence[Sequence], backend: Backend):
    """Extreme rays of the cone ``{y : A y >= 0}``.

    Returns a list of ``(ray, mask)`` where ``mask`` is an int bitset of the
    row indices tight at the ray.  Exact rays are primitive integer vectors,
    approx rays are floats scaled to max-abs 1.

    Raises NotFullDimensional if the cone has a nontrivial lineality space,
    i.e. the rows do not span the ambient space.
    """
    if not rows:
        raise NotFullDimensional("no constraints")
    d = len(rows[0])
    exact = backend.exact
    if exact:
        A = [primitive_int_vector(r) for r in rows]
        norm = _normalize_int
    else:
        A = [_normalize_float([float(x) for x in r]) for r in rows]
        norm = _normalize_float
    tol = backend.tol

    as_field = [[Fraction(x) for x in r] for r in A] if exact else A
    basis_idx = independent_rows(as_field, backend)
    if len(basis_idx) < d:
        raise NotFullDimensional("constraint rows do not span the space")
    inv = inverse([as_field[i] for i in basis_idx], backend)
    rays = []
    masks = []
    full = 0
    for i in basis_idx:
        full |= 1 << i
    for j, col in enumerate(transpose(inv)):
        r = primitive_int_vector(col) if exact else _normalize_float(col)
        rays.append(r)
        masks.append(full & ~(1 << basis_idx[j]))

    chosen = set(basis_idx)
    for k in range(len(A)):
        if k in chosen:
            continue
        row = A[k]
        bit = 1 << k
        vals = [sum(a * b for a, b in zip(row, r)) for r in rays]
        if exact:
            pos = [i for i, v in enumerate(vals) if v > 0]
            neg = [i for i, v in enumerate(vals) if v < 0]
            zer = [i for i, v in enumerate(vals) if v == 0]
        else:
            pos = [i for i, v in enumerate(vals) if v > tol]
            neg = [i for i, v in enumerate(vals) if v < -tol]
            zer = [i for i, v in enumerate(vals) if -tol <= v <= tol]
        if not neg:
            for i in zer:
                masks[i] |= bit
            continue
        new_rays = []
        new_masks = []
        need = d - 2
        for p in pos:
            mp = masks[p]
            for q in neg:
                z = mp & masks[q]
                if z.bit_count() < need:
                    continue
                count = 0
                for m in masks:
                    if m & z == z:
                        count += 1
                        if count > 2:
                            break
                if count > 2:
                    continue
                vp, vq = vals[p], vals[q]
                rp, rq = rays[p], rays[q]
                r = [vp * b - vq * a for a, b in zip(rp, rq)]
                new_rays.append(norm(r))
                new_masks.append(z | bit)
        rays_next = [rays[i] for i in pos] + [rays[i] for i in zer] + new_rays
        masks_next = (
            [masks[i] for i in pos] + [masks[i] | bit for i in zer] + new_masks
        )
        rays, masks = rays_next, masks_next
    return list(zip(rays, masks))
