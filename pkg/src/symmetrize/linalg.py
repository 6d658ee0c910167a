"""Small dense linear algebra over either scalar backend."""

from __future__ import annotations

from typing import Sequence

from .errors import SingularMatrix
from .scalar import Backend


def _pivot_row(M, col, start, backend: Backend):
    if backend.exact:
        for r in range(start, len(M)):
            if M[r][col] != 0:
                return r
        return None
    best, best_val = None, backend.tol
    for r in range(start, len(M)):
        v = abs(M[r][col])
        if v > best_val:
            best, best_val = r, v
    return best


def row_echelon(rows: Sequence[Sequence], backend: Backend):
    """Return (echelon matrix, pivot columns, original indices of pivot rows).

    Rows are processed in order, so the returned row indices pick the first
    linearly independent subset.
    """
    M = [list(r) for r in rows]
    order = list(range(len(M)))
    ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = _pivot_row(M, c, r, backend)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        order[r], order[p] = order[p], order[r]
        pv = M[r][c]
        for i in range(r + 1, len(M)):
            f = M[i][c]
            if f == 0:
                continue
            f = f / pv
            Mi, Mr = M[i], M[r]
            for j in range(c, ncols):
                Mi[j] -= f * Mr[j]
            if not backend.exact:
                Mi[c] = 0.0
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots, order[:r]


def rank(rows: Sequence[Sequence], backend: Backend) -> int:
    if not rows:
        return 0
    return len(row_echelon(rows, backend)[1])


def independent_rows(rows: Sequence[Sequence], backend: Backend) -> list[int]:
    """Indices of a maximal linearly independent subset, greedy in row order."""
    chosen: list[int] = []
    basis: list[list] = []
    for i, row in enumerate(rows):
        if rank(basis + [list(row)], backend) > len(basis):
            basis.append(list(row))
            chosen.append(i)
    return chosen


def solve(A: Sequence[Sequence], b: Sequence, backend: Backend) -> list:
    """Solve the square system A x = b by Gaussian elimination."""
    n = len(A)
    M = [list(A[i]) + [b[i]] for i in range(n)]
    for c in range(n):
        p = _pivot_row(M, c, c, backend)
        if p is None:
            raise SingularMatrix("matrix is singular")
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        for i in range(n):
            if i == c or M[i][c] == 0:
                continue
            f = M[i][c] / pv
            for j in range(c, n + 1):
                M[i][j] -= f * M[c][j]
    return [M[i][n] / M[i][i] for i in range(n)]


def inverse(A: Sequence[Sequence], backend: Backend) -> list[list]:
    n = len(A)
    one, zero = backend.convert(1), backend.convert(0)
    M = [list(A[i]) + [one if j == i else zero for j in range(n)] for i in range(n)]
    for c in range(n):
        p = _pivot_row(M, c, c, backend)
        if p is None:
            raise SingularMatrix("matrix is singular")
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for i in range(n):
            if i == c or M[i][c] == 0:
                continue
            f = M[i][c]
            Mi, Mc = M[i], M[c]
            for j in range(2 * n):
                Mi[j] -= f * Mc[j]
    return [row[n:] for row in M]


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*A)]


def matvec(A: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, x)), 0) for row in A)
