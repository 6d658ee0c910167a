"""Dense two-phase primal simplex with dual (shadow price) extraction.

Sign convention for duals: ``dual[i]`` is the rate of change of the optimal
value with respect to the right-hand side of constraint ``i``.  With this
convention the multipliers satisfy ``c = A^T y + w + d`` where ``w`` are the
multipliers of finite upper bounds and ``d`` are the reduced costs of
variables with a finite lower bound, and strong duality reads

    c . x*  =  b . y + u . w + l . d.

Exact problems use Bland's rule.  Approximate problems use Dantzig pricing
with a lexicographic ratio test, falling back to Bland's rule if the
iteration budget runs out.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional, Sequence

import gmpy2

from .errors import LPError
from .scalar import EXACT, Backend

LE, GE, EQ = "<=", ">=", "=="


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    relation: str
    rhs: object


class LinearProgram:
    """Linear program ``min|max c.x`` subject to linear constraints.

    Variables are free unless ``bounds`` gives a ``(lower, upper)`` pair,
    either entry of which may be ``None``.
    """

    def __init__(
        self,
        objective: Sequence,
        constraints: Sequence = (),
        sense: str = "min",
        bounds: Optional[Sequence] = None,
        backend: Backend = EXACT,
    ):
        if sense not in ("min", "max"):
            raise ValueError("sense must be 'min' or 'max'")
        self.backend = backend
        self.sense = sense
        self.c = backend.vec(objective)
        nvar = len(self.c)
        cons = []
        for con in constraints:
            if not isinstance(con, Constraint):
                coeffs, rel, rhs = con
                con = Constraint(tuple(coeffs), rel, rhs)
            if con.relation not in (LE, GE, EQ):
                raise ValueError(f"bad relation {con.relation!r}")
            if len(con.coeffs) != nvar:
                raise ValueError("constraint length does not match objective")
            cons.append(
                Constraint(backend.vec(con.coeffs), con.relation, backend.convert(con.rhs))
            )
        self.constraints = tuple(cons)
        if bounds is None:
            bounds = [(None, None)] * nvar
        if len(bounds) != nvar:
            raise ValueError("bounds length does not match objective")
        self.bounds = tuple(
            (
                None if lo is None else backend.convert(lo),
                None if hi is None else backend.convert(hi),
            )
            for lo, hi in bounds
        )

    @property
    def nvars(self) -> int:
        return len(self.c)


@dataclass
class LpSolution:
    status: str
    value: object = None
    x: tuple = ()
    dual: tuple = ()
    upper_dual: dict = field(default_factory=dict)
    reduced_costs: tuple = ()
    iterations: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


# --- audit hook ---------------------------------------------------------

_observers: list = []
_obs_lock = threading.Lock()


@contextmanager
def record_solutions():
    """Collect every ``(lp, solution)`` pair solved inside the block."""
    log: list = []
    with _obs_lock:
        _observers.append(log)
    try:
        yield log
    finally:
        with _obs_lock:
            _observers.remove(log)


def _notify(lp, sol):
    if _observers:
        with _obs_lock:
            for log in _observers:
                log.append((lp, sol))


# --- tableau machinery --------------------------------------------------

# exact tableaux run on gmpy2 rationals, which are much faster than Fraction
_fast = gmpy2.mpq


def _slow(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))



class _Tableau:
    def __init__(self, rows, rhs, ncols, backend):
        self.backend = backend
        self.m = len(rows)
        self.n = ncols  # structural columns, artificials follow
        if backend.exact:
            one, zero = _fast(1), _fast(0)
        else:
            one, zero = 1.0, 0.0
        self.zero = zero
        self.T = []
        for i, (r, b) in enumerate(zip(rows, rhs)):
            art = [zero] * self.m
            art[i] = one
            self.T.append(list(r) + art + [b])
        self.basis = [self.n + i for i in range(self.m)]
        self.iterations = 0

    def pivot(self, r, c):
        T = self.T
        pr = T[r]
        pv = pr[c]
        pr = [x / pv for x in pr]
        T[r] = pr
        exact = self.backend.exact
        support = [j for j, x in enumerate(pr) if x != 0]
        for row in T + [self.obj]:
            if row is pr:
                continue
            f = row[c]
            if f == 0:
                continue
            for j in support:
                row[j] -= f * pr[j]
            if not exact:
                row[c] = 0.0
        self.basis[r] = c
        self.iterations += 1

    def set_costs(self, costs):
        """Install the objective row of reduced costs for cost vector ``costs``."""
        obj = list(costs) + [self.zero]
        for i, bi in enumerate(self.basis):
            cb = costs[bi]
            if cb != 0:
                row = self.T[i]
                obj = [a - cb * b for a, b in zip(obj, row)]
        self.obj = obj  # last entry is -value

    def _entering(self, allowed, bland):
        obj = self.obj
        tol = self.backend.tol
        if bland:
            for j in range(allowed):
                if obj[j] < -tol:
                    return j
            return None
        best, best_val = None, -tol
        for j in range(allowed):
            if obj[j] < best_val:
                best, best_val = j, obj[j]
        return best

    def _leaving(self, c, bland):
        T = self.T
        tol = self.backend.tol
        cand = []
        for i in range(self.m):
            a = T[i][c]
            if a > tol:
                cand.append((T[i][-1] / a, i))
        if not cand:
            return None
        if self.backend.exact:
            best = min(r for r, _ in cand)
            ties = [i for r, i in cand if r == best]
            return min(ties, key=lambda i: self.basis[i])
        best = min(r for r, _ in cand)
        ties = [i for r, i in cand if r <= best + tol * (1 + abs(best))]
        if len(ties) == 1:
            return ties[0]
        if bland:
            return min(ties, key=lambda i: self.basis[i])
        # lexicographic rule on rows of the basis inverse
        n = self.n

        def key(i):
            a = T[i][c]
            return tuple(round(x / a, 12) for x in T[i][n : n + self.m])

        return min(ties, key=lambda i: (key(i), self.basis[i]))

    def run(self, allowed, bland):
        budget = 50 * (self.m + allowed) + 1000
        steps = 0
        while True:
            use_bland = bland or steps > budget
            c = self._entering(allowed, use_bland)
            if c is None:
                return "optimal"
            r = self._leaving(c, use_bland)
            if r is None:
                return "unbounded"
            self.pivot(r, c)
            steps += 1
            if steps > 20 * budget:
                raise LPError("simplex failed to terminate")


def _standard_form(lp: LinearProgram):
    """Translate to ``min c~ z, A z = b >= 0, z >= 0``.

    Returns the data plus the maps needed to recover x and the duals.
    """
    B = lp.backend
    zero, one = B.convert(0), B.convert(1)
    # variable map: x_j = off_j + sum coef * z_col
    var_cols = []
    offsets = []
    ncol = 0
    for lo, hi in lp.bounds:
        if lo is not None:
            var_cols.append([(ncol, one)])
            offsets.append(lo)
            ncol += 1
        else:
            var_cols.append([(ncol, one), (ncol + 1, -one)])
            offsets.append(zero)
            ncol += 2
    nz = ncol
    rows = []
    for con in lp.constraints:
        rows.append((con.coeffs, con.relation, con.rhs, "user"))
    for j, (lo, hi) in enumerate(lp.bounds):
        if hi is not None:
            e = [zero] * lp.nvars
            e[j] = one
            rows.append((tuple(e), LE, hi, j))
    nslack = sum(1 for r in rows if r[1] != EQ)
    total = nz + nslack
    A, b, signs, origin = [], [], [], []
    s = nz
    for coeffs, rel, rhs, tag in rows:
        row = [zero] * total
        shift = zero
        for j, a in enumerate(coeffs):
            if a == 0:
                continue
            shift += a * offsets[j]
            for col, coef in var_cols[j]:
                row[col] += a * coef
        rhs = rhs - shift
        if rel == LE:
            row[s] = one
            s += 1
        elif rel == GE:
            row[s] = -one
            s += 1
        sign = 1
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
            sign = -1
        A.append(row)
        b.append(rhs)
        signs.append(sign)
        origin.append(tag)
    flip = -1 if lp.sense == "max" else 1
    cost = [zero] * total
    const = zero
    for j, cj in enumerate(lp.c):
        const += cj * offsets[j]
        for col, coef in var_cols[j]:
            cost[col] += flip * cj * coef
    return A, b, cost, total, var_cols, offsets, signs, origin, const


def solve_lp(lp: LinearProgram) -> LpSolution:
    """Solve ``lp`` with the two-phase simplex method."""
    B = lp.backend
    A, b, cost, total, var_cols, offsets, signs, origin, const = _standard_form(lp)
    m = len(A)
    zero = B.convert(0)
    bland = B.exact
    if m == 0:
        # no constraints: optimal iff every cost coefficient is nonnegative
        if any(B.is_neg(c) for c in cost):
            sol = LpSolution("unbounded")
            _notify(lp, sol)
            return sol
        x = tuple(offsets)
        val = sum((c * xv for c, xv in zip(lp.c, x)), zero)
        d = tuple(lp.c)
        sol = LpSolution("optimal", val, x, (), {}, d, 0)
        _notify(lp, sol)
        return sol

    if B.exact:
        A = [[_fast(x) for x in row] for row in A]
        b = [_fast(x) for x in b]
        cost = [_fast(x) for x in cost]
        zero = _fast(zero)
    tab = _Tableau(A, b, total, B)
    one = B.convert(1) if not B.exact else _fast(1)
    phase1 = [zero] * total + [one] * m
    tab.set_costs(phase1)
    tab.run(total, bland)
    infeas = -tab.obj[-1]
    scale = 1 + max((abs(v) for v in b), default=0)
    if (infeas > 0) if B.exact else (infeas > 10 * B.tol * scale):
        sol = LpSolution("infeasible", iterations=tab.iterations)
        _notify(lp, sol)
        return sol
    # drive artificial variables out of the basis where possible
    for i in range(m):
        if tab.basis[i] >= total:
            row = tab.T[i]
            for j in range(total):
                if not B.is_zero(row[j]):
                    tab.pivot(i, j)
                    break
    phase2 = list(cost) + [zero] * m
    tab.set_costs(phase2)
    status = tab.run(total, bland)
    if status == "unbounded":
        sol = LpSolution("unbounded", iterations=tab.iterations)
        _notify(lp, sol)
        return sol

    if B.exact:
        zero = B.convert(0)
        tab.obj = [_slow(x) for x in tab.obj]
    z = [zero] * (total + m)
    for i, bi in enumerate(tab.basis):
        z[bi] = _slow(tab.T[i][-1]) if B.exact else tab.T[i][-1]
    x = []
    for j, cols in enumerate(var_cols):
        xv = offsets[j]
        for col, coef in cols:
            xv += coef * z[col]
        x.append(xv)
    flip = -1 if lp.sense == "max" else 1
    ystd = [-tab.obj[total + i] for i in range(m)]
    duals_all = [flip * signs[i] * ystd[i] for i in range(m)]
    user = tuple(duals_all[i] for i in range(m) if origin[i] == "user")
    upper = {origin[i]: duals_all[i] for i in range(m) if origin[i] != "user"}
    # reduced costs in the original sense: d = c - A^T y - w
    d = []
    for j in range(lp.nvars):
        dj = lp.c[j]
        for con, y in zip(lp.constraints, user):
            dj -= con.coeffs[j] * y
        if j in upper:
            dj -= upper[j]
        d.append(dj)
    value = sum((c * xv for c, xv in zip(lp.c, x)), zero)
    sol = LpSolution(
        "optimal", value, tuple(x), user, upper, tuple(d), tab.iterations
    )
    _notify(lp, sol)
    return sol


def dual_objective(lp: LinearProgram, sol: LpSolution):
    """Value of the dual certificate carried by ``sol``."""
    val = sum((con.rhs * y for con, y in zip(lp.constraints, sol.dual)), lp.backend.convert(0))
    for j, w in sol.upper_dual.items():
        val += lp.bounds[j][1] * w
    for j, (lo, _) in enumerate(lp.bounds):
        if lo is not None:
            val += lo * sol.reduced_costs[j]
    return val


def check_certificate(lp: LinearProgram, sol: LpSolution, tol=None) -> bool:
    """Independently check primal feasibility, dual feasibility and zero gap."""
    B = lp.backend
    if tol is None:
        tol = 0 if B.exact else 1e3 * B.tol
    if not sol.optimal:
        return False

    def le(a, b):
        return a <= b + tol

    def close(a, b):
        return abs(a - b) <= tol * (1 + abs(a) + abs(b)) if tol else a == b

    x = sol.x
    # primal feasibility
    for con in lp.constraints:
        lhs = sum((a * xv for a, xv in zip(con.coeffs, x)), 0)
        if con.relation == LE and not le(lhs, con.rhs):
            return False
        if con.relation == GE and not le(con.rhs, lhs):
            return False
        if con.relation == EQ and not close(lhs, con.rhs):
            return False
    for xv, (lo, hi) in zip(x, lp.bounds):
        if lo is not None and not le(lo, xv):
            return False
        if hi is not None and not le(xv, hi):
            return False
    # dual sign conditions (for max problems all signs flip)
    s = 1 if lp.sense == "min" else -1
    for con, y in zip(lp.constraints, sol.dual):
        if con.relation == LE and s * y > tol:
            return False
        if con.relation == GE and s * y < -tol:
            return False
    for j, w in sol.upper_dual.items():
        if s * w > tol:
            return False
    for j, (lo, _) in enumerate(lp.bounds):
        dj = sol.reduced_costs[j]
        if lo is None and not close(dj, 0):
            return False
        if lo is not None and s * dj < -tol:
            return False
    return close(sol.value, dual_objective(lp, sol))
