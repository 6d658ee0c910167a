import random
from fractions import Fraction

import pytest
from scipy.optimize import linprog

from symmetrize.lp import LinearProgram, check_certificate, dual_objective, record_solutions, solve_lp
from symmetrize.scalar import APPROX, EXACT


def test_small_max_problem():
    # max 3x + 2y, x + y <= 4, x + 3y <= 6, x, y >= 0 -> x = 4, y = 0
    lp = LinearProgram([3, 2], [([1, 1], "<=", 4), ([1, 3], "<=", 6)], "max", [(0, None), (0, None)])
    sol = solve_lp(lp)
    assert sol.status == "optimal"
    assert sol.value == 12
    assert sol.x == (4, 0)
    assert sol.dual == (3, 0)
    assert check_certificate(lp, sol)


def test_infeasible_and_unbounded():
    lp = LinearProgram([1], [([1], "<=", 1), ([1], ">=", 2)])
    assert solve_lp(lp).status == "infeasible"
    lp = LinearProgram([1], [([1], "<=", 1)], "min")
    assert solve_lp(lp).status == "unbounded"


def test_equality_and_free_variables():
    lp = LinearProgram([1, 1], [([1, -1], "==", Fraction(1, 3)), ([1, 1], ">=", 1)])
    sol = solve_lp(lp)
    assert sol.value == 1
    assert check_certificate(lp, sol)
    assert dual_objective(lp, sol) == sol.value


def test_degenerate_problem_terminates():
    # classic cycling example for Dantzig's rule without anti-cycling
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6]
    A = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    b = [0, 0, 1]
    for B in (EXACT, APPROX):
        lp = LinearProgram(c, [(r, "<=", v) for r, v in zip(A, b)], "min", [(0, None)] * 4, B)
        sol = solve_lp(lp)
        assert sol.status == "optimal"
        assert abs(float(sol.value) + 0.05) < 1e-9
        assert check_certificate(lp, sol)


def _random_lp(rng, exact):
    n = rng.randint(2, 5)
    m = rng.randint(2, 6)
    c = [rng.randint(-5, 5) for _ in range(n)]
    rows, rels, rhs = [], [], []
    for _ in range(m):
        rows.append([rng.randint(-4, 4) for _ in range(n)])
        rels.append(rng.choice(["<=", "<=", ">=", "=="]))
        rhs.append(rng.randint(-3, 8))
    bounds = [rng.choice([(0, None), (None, None), (-2, 3), (0, 4)]) for _ in range(n)]
    sense = rng.choice(["min", "max"])
    return n, c, rows, rels, rhs, bounds, sense


def _scipy(c, rows, rels, rhs, bounds, sense):
    sign = 1 if sense == "min" else -1
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for r, rel, v in zip(rows, rels, rhs):
        if rel == "<=":
            A_ub.append(r)
            b_ub.append(v)
        elif rel == ">=":
            A_ub.append([-x for x in r])
            b_ub.append(-v)
        else:
            A_eq.append(r)
            b_eq.append(v)
    res = linprog(
        [sign * x for x in c],
        A_ub=A_ub or None,
        b_ub=b_ub or None,
        A_eq=A_eq or None,
        b_eq=b_eq or None,
        bounds=bounds,
        method="highs",
    )
    status = {0: "optimal", 2: "infeasible", 3: "unbounded"}[res.status]
    return status, (sign * res.fun if status == "optimal" else None)


@pytest.mark.parametrize("backend", [EXACT, APPROX], ids=["exact", "approx"])
def test_random_lps_against_highs(backend):
    rng = random.Random(2024)
    seen = {"optimal": 0, "infeasible": 0, "unbounded": 0}
    for _ in range(150):
        n, c, rows, rels, rhs, bounds, sense = _random_lp(rng, backend.exact)
        lp = LinearProgram(c, list(zip(rows, rels, rhs)), sense, bounds, backend)
        sol = solve_lp(lp)
        status, value = _scipy(c, rows, rels, rhs, bounds, sense)
        assert sol.status == status
        seen[status] += 1
        if status == "optimal":
            assert abs(float(sol.value) - value) <= 1e-7 * (1 + abs(value))
            assert check_certificate(lp, sol)
            gap = dual_objective(lp, sol) - sol.value
            assert gap == 0 if backend.exact else abs(gap) <= 1e-7
    assert all(v > 0 for v in seen.values())


def test_record_solutions_collects_every_solve():
    lp = LinearProgram([1], [([1], ">=", 2)])
    with record_solutions() as log:
        solve_lp(lp)
        solve_lp(lp)
    assert len(log) == 2
    solve_lp(lp)
    assert len(log) == 2
