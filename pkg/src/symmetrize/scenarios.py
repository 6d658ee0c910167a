"""Named, reproducible checks of the quantitative claims about symmetrizations.

Each scenario builds bodies, measures factors and compares them with closed
forms.  A scenario returns a :class:`ScenarioReport` whose checks carry the
computed value, the expected value, where the expectation comes from and the
tolerance used.  Reports are deterministic for fixed parameters.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import errors, formulas
from .constructions import (
    PHI,
    alpha_pentagon,
    asymmetry_descent,
    beta_hexagon,
    beta_pentagon,
    golden_house,
    golden_house_witness,
    random_body,
    random_centered_polytope,
    rational_simplex,
    regular_kgon,
    regular_simplex,
    simplex_cap,
    truncated_hexagon,
)
from .containment import (
    check_equivalence,
    closest_facet_point,
    closest_facet_polarity,
    diameter,
    dmax,
    is_minkowski_centered,
    is_optimally_contained,
    measure_alpha,
    measure_beta,
    measure_omega,
    minkowski_asymmetry,
    parallel_support_witness,
    symmetric_factor,
    validate_certificate,
    verify_reverse_factors,
)
from .linalg import rank
from .lp import check_certificate, record_solutions
from .means import (
    arithmetic_mean,
    four_symmetrizations,
    harmonic_mean,
    hull_union,
    intersect,
    is_symmetric,
    polar,
)
from .polytope import Polytope, linear_image, negate, scale
from .scalar import APPROX, EXACT, REPORT_TOL, Approx, Backend, format_scalar, parse_scalar

CLAIM = "claim"
TRIVIAL = "trivial"
DERIVED = "derived"


# --- report structures ------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    """One comparison.  ``relation`` is one of ``==``, ``<=``, ``>=``, ``in``, ``is``."""

    name: str
    computed: object
    expected: object
    relation: str
    provenance: str
    tolerance: Optional[float]
    passed: bool


@dataclass
class ScenarioReport:
    scenario: str
    claim: str
    statement: str
    params: dict
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    # comparison helpers, all append to ``checks``

    def equal(self, name, computed, expected, prov, tol=None):
        if tol is None:
            ok = computed == expected
        else:
            ok = abs(computed - expected) <= tol
        self.checks.append(Check(name, computed, expected, "==", prov, tol, bool(ok)))
        return ok

    def at_most(self, name, computed, bound, prov, tol=None):
        ok = computed <= bound + (tol or 0)
        self.checks.append(Check(name, computed, bound, "<=", prov, tol, bool(ok)))
        return ok

    def at_least(self, name, computed, bound, prov, tol=None):
        ok = computed >= bound - (tol or 0)
        self.checks.append(Check(name, computed, bound, ">=", prov, tol, bool(ok)))
        return ok

    def within(self, name, computed, lo, hi, prov, tol=None):
        t = tol or 0
        ok = lo - t <= computed <= hi + t
        self.checks.append(Check(name, computed, (lo, hi), "in", prov, tol, bool(ok)))
        return ok

    def holds(self, name, value, expected, prov):
        ok = value == expected
        self.checks.append(Check(name, value, expected, "is", prov, None, bool(ok)))
        return ok


# --- claims catalog -----------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    label: str
    statement: str


CLAIMS = {
    "chain": Claim(
        "symmetrization chain",
        "For 0 in int(K ∩ C): K∩C ⊆ (½(K°+C°))° ⊆ ½(K+C) ⊆ conv(K∪C); with K = -C the "
        "gauges satisfy ||x||_max <= ||x||_arith <= ||x||_harm <= ||x||_min and "
        "||x||_min <= (s+1)/2 ||x||_arith <= s ||x||_max.",
    ),
    "equivalence": Claim(
        "min/max versus harmonic/arithmetic optimality",
        "K∩C ⊆opt conv(K∪C) holds exactly when (½(K°+C°))° ⊆opt ½(K+C).",
    ),
    "simplex-factors": Claim(
        "simplex factors",
        "For a Minkowski centered simplex S in even dimension n, S∩(-S) ⊆opt n/(n+1) conv(S∪-S) "
        "and the harmonic mean sits in n(n+2)/(n+1)^2 times the arithmetic mean; in odd "
        "dimension both factors are 1.",
    ),
    "reverse-factors": Claim(
        "reverse containment factors",
        "For Minkowski centered C with asymmetry s: max ⊆opt s·min, max ⊆opt 2s/(s+1)·arith, "
        "harm ⊆opt 2s/(s+1)·min, arith ⊆opt (s+1)/2·min, max ⊆opt (s+1)/2·harm and "
        "arith ⊆ (s+1)/2·harm, the last being optimal for S∩(-sS).",
    ),
    "golden-house": Claim(
        "golden house threshold",
        "A truncated simplex with asymmetry gamma1(n) = (n-1+sqrt((n-2)n+5))/2 keeps the whole "
        "chain of means optimally nested.",
    ),
    "stability": Claim(
        "stability near the simplex",
        "For even n and s close to n: alpha <= psi n/(n+1) when s > gamma2 and "
        "beta <= mu psi n(n+2)/(n+1)^2 when s > gamma3.",
    ),
    "factor-regions": Claim(
        "alpha and beta regions",
        "alpha(s) >= 2/(s+1) and beta(s) >= 4s/(s+1)^2 with equality up to s = 2; both are 1 "
        "up to gamma1; planar bodies realise alpha = s/(s^2-1) and the two-branch beta.",
    ),
    "kgon": Claim(
        "odd regular polygons",
        "A regular k-gon with odd k has asymmetry 1/cos(pi/k) and ½(C-C) ⊆opt (s+1)/2 harm.",
    ),
    "nonopt-omega": Claim(
        "non-optimal arithmetic/harmonic factor",
        "A truncated hexagon with asymmetry s has arith ⊆ omega·harm with "
        "(s+1)^2/(4s) <= omega < (s+1)/2.",
    ),
    "descent": Claim(
        "asymmetry descent",
        "A body with parallel supports at a symmetric boundary pair yields bodies of every "
        "smaller asymmetry with the same optimality of the chain.",
    ),
    "polarity": Claim(
        "polar optimality",
        "For 0-symmetric P ⊆ K: P ⊆opt K iff K° ⊆opt P°; and P° ⊆opt ||v||^-2 P for the foot v "
        "of the perpendicular from 0 to a nearest facet of P.",
    ),
    "diameters": Claim(
        "diameter identities",
        "D_max(K, C) = D(K, C∩(-C)) and D(K, C) = D(K, ½(C-C)).",
    ),
    "invariants": Claim(
        "corpus invariants",
        "Representation round trips, bipolarity, LP duality, certificate soundness, "
        "asymmetry bounds, factor ranges and affine invariance on a seeded corpus.",
    ),
}


# --- parameters -------------------------------------------------------------------


def _int(text) -> int:
    return int(text)


def _scalar(text) -> Fraction:
    return parse_scalar(text)


def _int_list(text) -> list:
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    return [int(x) for x in str(text).split(",") if x.strip()]


def _scalar_list(text) -> list:
    if isinstance(text, (list, tuple)):
        return [parse_scalar(x) for x in text]
    return [parse_scalar(x) for x in str(text).split(",") if x.strip()]


@dataclass(frozen=True)
class Scenario:
    name: str
    claim: str
    func: Callable
    params: dict  # name -> (parser, default text)
    summary: str


SCENARIOS: dict = {}


def _scenario(name, claim, summary, **params):
    def register(func):
        SCENARIOS[name] = Scenario(name, claim, func, params, summary)
        return func

    return register


@dataclass(frozen=True)
class Context:
    backend: Optional[Backend]
    approx: Approx
    seed: int

    def corpus_backend(self) -> Backend:
        return self.backend or EXACT

    def rational_backend(self) -> Backend:
        return self.backend or EXACT


def _parse_params(sc: Scenario, given: dict) -> dict:
    unknown = set(given) - set(sc.params)
    if unknown:
        raise errors.BadParams(f"unknown parameter(s) for {sc.name}: {', '.join(sorted(unknown))}")
    out = {}
    for key, (parser, default) in sc.params.items():
        raw = given.get(key, default)
        try:
            out[key] = parser(raw)
        except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
            raise errors.BadParams(f"bad value for {key}: {raw!r}") from exc
    return out


def run_scenario(
    name: str,
    params: Optional[dict] = None,
    *,
    backend: Optional[str] = None,
    tol: Optional[float] = None,
    seed: int = 0,
    timing: bool = False,
) -> ScenarioReport:
    """Run one scenario.  ``backend`` overrides the default for corpus-based and
    rational constructions; ``tol`` sets the approx tolerance."""
    if name not in SCENARIOS:
        raise errors.UnknownScenario(f"unknown scenario {name!r}")
    sc = SCENARIOS[name]
    values = _parse_params(sc, dict(params or {}))
    if backend not in (None, "auto", "exact", "approx"):
        raise errors.BadParams(f"unknown backend {backend!r}")
    approx = Approx(tol) if tol is not None else APPROX
    chosen = {"exact": EXACT, "approx": approx}.get(backend or "auto")
    ctx = Context(chosen, approx, int(seed))
    claim = CLAIMS[sc.claim]
    shown = {k: _show(v) for k, v in values.items()}
    if backend not in (None, "auto"):
        shown["backend"] = backend
    if tol is not None:
        shown["tol"] = repr(float(tol))
    shown["seed"] = str(ctx.seed)
    report = ScenarioReport(name, claim.label, claim.statement, shown)
    # start cold so LP logs and counts do not depend on earlier runs
    minkowski_asymmetry.cache_clear()
    four_symmetrizations.cache_clear()
    start = time.perf_counter()
    sc.func(report, ctx, **values)
    if timing:
        report.wall_time = round(time.perf_counter() - start, 3)
    return report


def _show(v) -> str:
    if isinstance(v, list):
        return ",".join(_show(x) for x in v)
    return format_scalar(v)


# --- shared helpers ---------------------------------------------------------------


def _tol(B: Backend):
    return None if B.exact else REPORT_TOL


def _centered_corpus(count: int, seed: int, backend: Backend, dims=(2, 3)):
    """Seeded Minkowski centered polytopes, alternating through ``dims``."""
    out = []
    for i in range(count):
        n = dims[i % len(dims)]
        m = n + 2 + (i // len(dims)) % 3
        out.append((f"random{n}d#{i}", random_centered_polytope(n, m, seed * 100003 + i, backend)))
    return out


def _body_pairs(count: int, seed: int, backend: Backend, dims=(2, 3)):
    out = []
    for i in range(count):
        n = dims[i % len(dims)]
        K = random_body(n, n + 3, seed * 100003 + 2 * i, backend)
        C = random_body(n, n + 3, seed * 100003 + 2 * i + 1, backend)
        out.append((f"pair{n}d#{i}", K, C))
    return out


def _directions(rng: random.Random, n: int, B: Backend, count: int):
    dirs = []
    while len(dirs) < count:
        if B.exact:
            x = tuple(Fraction(rng.randint(-20, 20)) for _ in range(n))
        else:
            x = tuple(rng.gauss(0.0, 1.0) for _ in range(n))
        if any(v != 0 for v in x):
            dirs.append(x)
    return dirs


def _slack(B: Backend):
    return 0 if B.exact else 10 * B.tol


def _nested(inner: Polytope, outer: Polytope) -> bool:
    return all(outer.contains(v) for v in inner.vertices)


def _norm_chains(report, label, C, s, rng, count):
    B = C.backend
    sy = four_symmetrizations(C)
    half = (s + 1) / 2
    eps = _slack(B)
    worst = None
    for x in _directions(rng, C.dim, B, count):
        g_max = sy.maximum.gauge(x)
        g_ar = sy.arithmetic.gauge(x)
        g_hm = sy.harmonic.gauge(x)
        g_mn = sy.minimum.gauge(x)
        slacks = [
            g_ar - g_max,
            g_hm - g_ar,
            g_mn - g_hm,
            half * g_ar - g_mn,
            s * g_max - half * g_ar,
        ]
        m = min(slacks)
        if worst is None or m < worst:
            worst = m
    report.at_least(f"{label}: smallest gauge-chain slack", worst, 0, CLAIM, eps or None)


# --- scenarios ----------------------------------------------------------------------


@_scenario(
    "firey-chain",
    "chain",
    "nesting of the four means for random pairs and gauge chains for centered bodies",
    count=(_int, "20"),
    directions=(_int, "100"),
)
def _firey_chain(report, ctx, count, directions):
    B = ctx.corpus_backend()
    for name, K, C in _body_pairs(count, ctx.seed, B):
        mn, mx = intersect(K, C), hull_union(K, C)
        hm, am = harmonic_mean(K, C), arithmetic_mean(K, C)
        ok = _nested(mn, hm) and _nested(hm, am) and _nested(am, mx)
        report.holds(f"{name}: min ⊆ harm ⊆ arith ⊆ max", ok, True, CLAIM)
    rng = random.Random(ctx.seed)
    for name, C in _centered_corpus(count, ctx.seed, B):
        sy = four_symmetrizations(C)
        ok = (
            _nested(sy.minimum, sy.harmonic)
            and _nested(sy.harmonic, sy.arithmetic)
            and _nested(sy.arithmetic, sy.maximum)
        )
        report.holds(f"{name}: chain for C and -C", ok, True, CLAIM)
        _norm_chains(report, name, C, minkowski_asymmetry(C).s, rng, directions)


def _equivalence_pairs(count, seed, B, approx):
    pairs = [(n, K, C) for n, K, C in _body_pairs(count, seed, B)]
    for name, C in _centered_corpus(count, seed, B):
        pairs.append((name + " vs -C", C, negate(C)))
    for n in (2, 3):
        S = rational_simplex(n, EXACT)
        pairs.append((f"rational simplex {n}", S, negate(S)))
        R = regular_simplex(n, approx)
        pairs.append((f"regular simplex {n}", R, negate(R)))
    G = golden_house(2, approx)
    pairs.append(("golden house 2", G, negate(G)))
    H = simplex_cap(2, Fraction(3, 2), EXACT)
    pairs.append(("simplex cap 3/2", H, negate(H)))
    pairs.append(("C vs C", H, H))
    return pairs


@_scenario(
    "thm11-equivalence",
    "equivalence",
    "agreement of min/max and harmonic/arithmetic optimality",
    count=(_int, "20"),
)
def _equivalence(report, ctx, count):
    B = ctx.corpus_backend()
    agree = 0
    total = 0
    for name, K, C in _equivalence_pairs(count, ctx.seed, B, ctx.approx):
        e = check_equivalence(K, C)
        total += 1
        agree += e.minmax_opt == e.harm_arith_opt
        report.holds(f"{name}: both optimal or both not", e.minmax_opt == e.harm_arith_opt, True, CLAIM)
    report.notes.append(f"{agree} of {total} pairs agree")


@_scenario(
    "simplex-means",
    "simplex-factors",
    "alpha, beta and the four means of a Minkowski centered simplex",
    n=(_int_list, "2,3,4"),
)
def _simplex_means(report, ctx, n):
    for d in n:
        if not 1 <= d <= 5:
            raise errors.BadParams("simplex-means needs 1 <= n <= 5")
    for d in n:
        _simplex_means_one(report, ctx, d)


def _simplex_means_one(report, ctx, n):
    S = rational_simplex(n, EXACT)
    R = regular_simplex(n, ctx.approx)
    report.equal(f"n={n}: s(rational simplex)", minkowski_asymmetry(S).s, Fraction(n), CLAIM)
    report.equal(f"n={n}: s(regular simplex)", minkowski_asymmetry(R).s, float(n), CLAIM, REPORT_TOL)
    a_exp, b_exp = formulas.simplex_alpha(n), formulas.simplex_beta(n)
    report.equal(f"n={n}: alpha(rational simplex)", measure_alpha(S).value, a_exp, CLAIM)
    report.equal(f"n={n}: beta(rational simplex)", measure_beta(S).value, b_exp, CLAIM)
    report.equal(f"n={n}: alpha(regular simplex)", measure_alpha(R).value, float(a_exp), CLAIM, REPORT_TOL)
    report.equal(f"n={n}: beta(regular simplex)", measure_beta(R).value, float(b_exp), CLAIM, REPORT_TOL)
    odd = n % 2 == 1
    for label, P in (("rational", S), ("regular", R)):
        e = check_equivalence(P, negate(P))
        report.holds(f"n={n}, {label}: min ⊆opt max", e.minmax_opt, odd, CLAIM)
        report.holds(f"n={n}, {label}: harm ⊆opt arith", e.harm_arith_opt, odd, CLAIM)
    report.holds(f"n={n}: polar(S) = -nS", polar(R).isclose(scale(R, -n), REPORT_TOL), True, CLAIM)
    if n == 3:
        sy = four_symmetrizations(S)
        shape = {
            "minimum": (6, 8),
            "harmonic": (14, 12),
            "arithmetic": (12, 14),
            "maximum": (8, 6),
        }
        for key, (nv, nf) in shape.items():
            P = getattr(sy, key)
            report.equal(f"n=3: {key} vertex count", len(P.vertices), nv, CLAIM)
            report.equal(f"n=3: {key} facet count", len(P.halfspaces), nf, CLAIM)


@_scenario(
    "reverse-factors",
    "reverse-factors",
    "reverse containments on random centered bodies and on S∩(-sS)",
    count=(_int, "20"),
)
def _reverse_factors(report, ctx, count):
    B = ctx.corpus_backend()
    for name, C in _centered_corpus(count, ctx.seed, B):
        for part in verify_reverse_factors(C):
            report.holds(f"{name}: part {part.part} ({part.outer} factor)", part.passed, True, CLAIM)
    R = ctx.rational_backend()
    for n in (2, 3):
        grid = [Fraction(1), Fraction(3, 2)] + [Fraction(k) for k in range(2, n + 1)]
        for s in grid:
            C = simplex_cap(n, s if R.exact else float(s), R)
            w = measure_omega(C).value
            report.equal(f"omega(S∩(-sS)), n={n}, s={s}", w, (s + 1) / 2 if R.exact else float(s + 1) / 2, CLAIM, _tol(R))
            sy = four_symmetrizations(C)
            target = scale(sy.harmonic, R.convert((s + 1) / 2))
            report.holds(
                f"arith ⊆opt (s+1)/2 harm, n={n}, s={s}",
                is_optimally_contained(sy.arithmetic, target).optimal,
                True,
                CLAIM,
            )
    for s in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2)):
        f = formulas.reverse_factors(s)
        report.equal(f"2s/(s+1) · (s+1)/2 = s at s={s}", f.max_in_arith * f.arith_in_min, s, DERIVED)


@_scenario(
    "golden-house",
    "golden-house",
    "asymmetry, parallel supports and optimal chains of the golden house",
    n=(_int_list, "2,3,4"),
    descent=(_scalar_list, "6/5,7/5"),
)
def _golden_house(report, ctx, n, descent):
    for d in n:
        if d < 2:
            raise errors.BadParams("golden house needs n >= 2")
        C = golden_house(d, ctx.approx)
        g1 = formulas.gamma1(d)
        asym = minkowski_asymmetry(C)
        report.equal(f"n={d}: s = gamma1", asym.s, g1, CLAIM, REPORT_TOL)
        report.at_least(f"n={d}: gamma1 > n-1", g1, d - 1, CLAIM)
        report.holds(f"n={d}: Minkowski centered", is_minkowski_centered(C, asym.s), True, CLAIM)
        w = parallel_support_witness(C)
        report.holds(f"n={d}: parallel supports at ±p", w is not None, True, CLAIM)
        p = golden_house_witness(d)
        on_bd = abs(C.gauge(p) - 1) <= REPORT_TOL and abs(C.gauge(tuple(-x for x in p)) - 1) <= REPORT_TOL
        report.holds(f"n={d}: ±xi(p1-p2) on the boundary", on_bd, True, CLAIM)
        e = check_equivalence(C, negate(C))
        report.holds(f"n={d}: min ⊆opt max", e.minmax_opt, True, CLAIM)
        report.holds(f"n={d}: harm ⊆opt arith", e.harm_arith_opt, True, CLAIM)
        if d == 2:
            for t in descent:
                D = asymmetry_descent(C, float(t))
                report.equal(f"descent to {t}: s", minkowski_asymmetry(D).s, float(t), CLAIM, REPORT_TOL)
                e = check_equivalence(D, negate(D))
                report.holds(f"descent to {t}: equivalence (true, true)", e.minmax_opt and e.harm_arith_opt, True, CLAIM)


def _stability_grid(text):
    if isinstance(text, (list, tuple)):
        return list(text)
    out = []
    for item in str(text).split(","):
        item = item.strip()
        if item:
            out.append(formulas.gamma2(2) if item == "gamma2" else parse_scalar(item))
    return out


@_scenario(
    "stability",
    "stability",
    "measured factors of S∩(-sS) against the stability bounds, and the threshold roots",
    s=(_stability_grid, "gamma2,199/100,2"),
)
def _stability(report, ctx, s):
    n = 2
    for sv in s:
        sf = float(sv)
        C = simplex_cap(n, sf, ctx.approx)
        a = measure_alpha(C).value
        b = measure_beta(C).value
        report.at_most(f"s={sf:.6f}: alpha <= psi·2/3", a, float(formulas.alpha_stability_bound(n, sf)), CLAIM, REPORT_TOL)
        report.at_most(f"s={sf:.6f}: beta <= mu psi·8/9", b, float(formulas.beta_stability_bound(n, sf)), CLAIM, REPORT_TOL)
    for d in (2, 4, 6):
        report.equal(f"psi({d},{d}) = 1", formulas.psi(d, Fraction(d)), Fraction(1), CLAIM)
        report.equal(f"mu({d},{d}) = 1", formulas.mu(d, Fraction(d)), Fraction(1), CLAIM)
        g2, g3 = formulas.gamma2(d), formulas.gamma3(d)
        report.equal(f"n={d}: psi n/(n+1) = 1 at gamma2", float(formulas.alpha_stability_bound(d, g2)), 1.0, CLAIM, 1e-9)
        report.equal(f"n={d}: mu psi n(n+2)/(n+1)^2 = 1 at gamma3", float(formulas.beta_stability_bound(d, g3)), 1.0, CLAIM, 1e-9)
        report.holds(
            f"n={d}: n-1 < gamma1 <= gamma2 < gamma3 < n and n-1/n < gamma2",
            d - 1 < formulas.gamma1(d) <= g2 < g3 < d and d - 1 / d < g2,
            True,
            CLAIM,
        )
    for d in (2, 4):
        obs = formulas.observed_directions(d)
        report.holds(f"n={d}: alpha bound crosses 1 downward at gamma2", obs["alpha"], (">1", "<1"), DERIVED)
        report.holds(f"n={d}: beta bound crosses 1 downward at gamma3", obs["beta"], (">1", "<1"), DERIVED)
        report.notes.append(
            f"n={d}: psi n/(n+1) is {obs['alpha'][0]} just below gamma2 and {obs['alpha'][1]} just above; "
            f"mu psi n(n+2)/(n+1)^2 is {obs['beta'][0]} just below gamma3 and {obs['beta'][1]} just above"
        )


PLOT_COLUMNS = (
    "s",
    "alpha_low",
    "alpha_measured",
    "alpha_high_bound",
    "alpha_high_floor",
    "alpha_pentagon_measured",
    "beta_low",
    "beta_measured",
    "beta_high_bound",
    "beta_high_floor",
    "beta_pentagon_measured",
    "alpha_low_region",
    "alpha_high_region",
    "beta_low_region",
    "beta_high_region",
)


def plot_rows(n: int, grid, backend: Optional[Backend] = None) -> list:
    """Rows of bounds and measured factors over ``grid`` for the alpha/beta plots."""
    if n != 2:
        raise errors.BadParams("plot data is available for n = 2 only")
    rows = []
    for s in grid:
        s = parse_scalar(s) if not isinstance(s, (Fraction, float)) else s
        if not 1 <= s <= n:
            raise errors.BadParams(f"grid value {s} outside [1, {n}]")
        rows.append(_plot_row(n, s, backend))
    return rows


def _plot_row(n, s, backend):
    exact = isinstance(s, Fraction) and (backend is None or backend.exact)
    B = EXACT if exact else (backend if backend is not None and not backend.exact else APPROX)
    sv = s if exact else float(s)
    bounds = formulas.alpha_beta_bounds(n, sv)
    row = {
        "s": sv,
        "alpha_low": bounds.alpha_low,
        "alpha_measured": measure_alpha(simplex_cap(n, sv, B)).value,
        "alpha_high_bound": bounds.alpha_high,
        "alpha_high_floor": bounds.alpha_high_floor,
        "alpha_pentagon_measured": None,
        "beta_low": bounds.beta_low,
        "beta_measured": measure_beta(beta_hexagon(sv, B)).value,
        "beta_high_bound": bounds.beta_high,
        "beta_high_floor": bounds.beta_high_floor,
        "beta_pentagon_measured": None,
        "alpha_low_region": bounds.alpha_low_region,
        "alpha_high_region": bounds.alpha_high_region,
        "beta_low_region": bounds.beta_low_region,
        "beta_high_region": bounds.beta_high_region,
    }
    if _at_least_phi(sv):
        row["alpha_pentagon_measured"] = measure_alpha(alpha_pentagon(sv, B)).value
        row["beta_pentagon_measured"] = measure_beta(beta_pentagon(sv, B)).value
    return row


def _at_least_phi(s) -> bool:
    if isinstance(s, Fraction):
        return s > 0 and s * s - s - 1 >= 0
    return s >= PHI - 1e-12


@_scenario(
    "alpha-beta-region",
    "factor-regions",
    "planar bodies attaining the alpha/beta bounds, with plot rows",
    grid=(_scalar_list, "1,6/5,3/2,33/20,5/3,17/10,9/5,19/10,2"),
)
def _alpha_beta_region(report, ctx, grid):
    B = ctx.rational_backend()
    rows = plot_rows(2, grid, B)
    report.rows = rows
    for row in rows:
        s = row["s"]
        tol = None if isinstance(s, Fraction) else REPORT_TOL
        tag = format_scalar(s)
        report.equal(f"s={tag}: alpha(S∩(-sS)) = 2/(s+1)", row["alpha_measured"], row["alpha_low"], CLAIM, tol)
        report.equal(f"s={tag}: beta(hexagon) = 4s/(s+1)^2", row["beta_measured"], row["beta_low"], CLAIM, tol)
        report.at_most(f"s={tag}: alpha(S∩(-sS)) <= upper bound", row["alpha_measured"], row["alpha_high_bound"], CLAIM, tol)
        report.at_most(f"s={tag}: beta(hexagon) <= upper bound", row["beta_measured"], row["beta_high_bound"], CLAIM, tol)
        if row["alpha_pentagon_measured"] is not None:
            report.equal(
                f"s={tag}: alpha(pentagon) = s/(s^2-1)",
                row["alpha_pentagon_measured"], formulas.alpha_pentagon_factor(s), CLAIM, tol,
            )
            report.equal(
                f"s={tag}: beta(pentagon) two-branch formula",
                row["beta_pentagon_measured"], formulas.beta_pentagon_factor(s), CLAIM, tol,
            )
            _pentagon_vertex_factors(report, s, tag)


def _pentagon_vertex_factors(report, s, tag):
    """Every harmonic vertex of the beta pentagon scales onto the arithmetic
    mean by mu2 or mu3, so beta = 1/min(mu2, mu3)."""
    B = EXACT if isinstance(s, Fraction) else APPROX
    sy = four_symmetrizations(beta_pentagon(s, B))
    mu2, mu3 = formulas.pentagon_harmonic_factors(s)
    tol = None if B.exact else REPORT_TOL
    values = [1 / sy.arithmetic.gauge(v) for v in sy.harmonic.vertices]

    def matches(x, y):
        return x == y if B.exact else abs(x - y) <= REPORT_TOL

    ok = all(matches(v, mu2) or matches(v, mu3) for v in values)
    report.holds(f"s={tag}: harmonic vertex scalings are mu2 or mu3", ok, True, DERIVED)
    report.equal(f"s={tag}: smallest scaling = min(mu2, mu3)", min(values), min(mu2, mu3), DERIVED, tol)


@_scenario(
    "kgon-omega",
    "kgon",
    "asymmetry and arithmetic/harmonic factor of odd regular polygons",
    k=(_int_list, "3,5,7"),
)
def _kgon(report, ctx, k):
    for kk in k:
        C = regular_kgon(kk, ctx.approx)
        s = minkowski_asymmetry(C).s
        report.equal(f"k={kk}: s = 1/cos(pi/k)", s, formulas.kgon_asymmetry(kk), CLAIM, REPORT_TOL)
        report.equal(f"k={kk}: omega = (s+1)/2", measure_omega(C).value, (s + 1) / 2, CLAIM, 1e-6)


@_scenario(
    "nonopt-omega",
    "nonopt-omega",
    "truncated hexagon whose arithmetic mean is strictly inside (s+1)/2 harm",
    s=(_scalar, "3/2"),
)
def _nonopt_omega(report, ctx, s):
    B = ctx.rational_backend()
    sv = B.convert(s)
    tol = _tol(B)
    C = truncated_hexagon(sv, B)
    asym = minkowski_asymmetry(C)
    report.equal("s(C)", asym.s, sv, CLAIM, tol)
    report.holds("Minkowski centered", is_minkowski_centered(C, asym.s), True, CLAIM)
    w = measure_omega(C).value
    low, high = (sv + 1) ** 2 / (4 * sv), (sv + 1) / 2
    report.within("(s+1)^2/(4s) <= omega <= (s+1)/2 - 1e-6", w, low, high - B.convert("1e-6"), CLAIM, tol)
    sy = four_symmetrizations(C)
    res = is_optimally_contained(sy.arithmetic, scale(sy.harmonic, high))
    report.holds("arith ⊆ (s+1)/2 harm is not optimal", res.optimal, False, CLAIM)
    K = simplex_cap(2, sv, B)
    mk = four_symmetrizations(K).minimum
    same = sy.minimum == mk if B.exact else sy.minimum.isclose(mk, REPORT_TOL)
    report.holds("C∩(-C) = K∩(-K) for K = S∩(-sS)", same, True, CLAIM)
    report.holds("omega(C) < omega(S∩(-sS))", w < measure_omega(K).value, True, DERIVED)
    report.notes.append(f"measured omega = {format_scalar(w)}")


@_scenario(
    "descent",
    "descent",
    "asymmetry descent from the golden house",
    n=(_int, "2"),
    steps=(_scalar_list, "0,1/4,1/2,3/4,1"),
)
def _descent(report, ctx, n, steps):
    C = golden_house(n, ctx.approx)
    s = minkowski_asymmetry(C).s
    for t in steps:
        if not 0 <= t <= 1:
            raise errors.BadParams("descent steps must lie in [0, 1]")
        target = (1 - float(t)) * s + float(t)
        D = asymmetry_descent(C, target)
        asym = minkowski_asymmetry(D)
        report.equal(f"t={t}: s = (1-t)s(C)+t", asym.s, target, CLAIM, REPORT_TOL)
        report.holds(f"t={t}: Minkowski centered", is_minkowski_centered(D, asym.s), True, CLAIM)
        report.holds(f"t={t}: parallel supports", parallel_support_witness(D) is not None, True, CLAIM)
        e = check_equivalence(D, negate(D))
        report.holds(f"t={t}: equivalence (true, true)", e.minmax_opt and e.harm_arith_opt, True, CLAIM)
        if t == 1:
            report.holds("t=1: symmetric", is_symmetric(D), True, CLAIM)


@_scenario(
    "polar-optimality",
    "polarity",
    "polar optimality for symmetric pairs and the closest-facet factor",
    count=(_int, "10"),
)
def _polar_optimality(report, ctx, count):
    cross = Polytope.from_vertices([(1, 0), (-1, 0), (0, 1), (0, -1)], EXACT)
    square = Polytope.from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)], EXACT)
    report.holds("cross-polytope ⊆opt square", is_optimally_contained(cross, square).optimal, True, TRIVIAL)
    report.holds("square° ⊆opt cross-polytope°", is_optimally_contained(polar(square), polar(cross)).optimal, True, TRIVIAL)
    for n in (2, 4):
        P = four_symmetrizations(regular_simplex(n, ctx.approx)).arithmetic
        expected = (n + 1) ** 2 / (n * n * (n + 2))
        report.equal(f"n={n}: ||v||^2 = (n+1)^2/(n^2(n+2)) for ½(S-S)", closest_facet_point(P)[1], expected, CLAIM, REPORT_TOL)
    for n in (2, 3):
        P = four_symmetrizations(regular_simplex(n, ctx.approx)).arithmetic
        report.holds(f"n={n}: P° ⊆opt ||v||^-2 P for ½(S-S)", closest_facet_polarity(P).optimal, True, CLAIM)
    B = ctx.corpus_backend()
    corpus = _centered_corpus(2 * count, ctx.seed, B)
    for i in range(count):
        name_p, A = corpus[2 * i]
        name_q, Q = corpus[2 * i + 1]
        if A.dim != Q.dim:
            Q = corpus[(2 * i + 2) % len(corpus)][1] if corpus[(2 * i + 2) % len(corpus)][1].dim == A.dim else A
        P = four_symmetrizations(A).arithmetic
        Qs = four_symmetrizations(Q).minimum
        f = symmetric_factor(P, Qs).value
        K = scale(Qs, f)
        a = is_optimally_contained(P, K).optimal
        b = is_optimally_contained(polar(K), polar(P)).optimal
        report.holds(f"{name_p}: P ⊆opt K and K° ⊆opt P°", (a, b), (True, True), CLAIM)
        d2 = closest_facet_point(P)[1]
        report.holds(f"{name_p}: P° ⊆opt ||v||^-2 P", closest_facet_polarity(P).optimal, True, CLAIM)
        report.notes.append(f"{name_p}: ||v||^2 = {format_scalar(d2)}")


@_scenario(
    "diameters",
    "diameters",
    "diameter identities on random pairs",
    count=(_int, "20"),
)
def _diameters(report, ctx, count):
    B = ctx.corpus_backend()
    tol = None if B.exact else 1e-9
    for name, K, C in _body_pairs(count, ctx.seed + 7, B):
        sy = four_symmetrizations(C)
        report.equal(f"{name}: D_max(K,C) = D(K, C∩-C)", dmax(K, C), diameter(K, sy.minimum), CLAIM, tol)
        report.equal(f"{name}: D(K,C) = D(K, ½(C-C))", diameter(K, C), diameter(K, sy.arithmetic), CLAIM, tol)
        report.equal(f"{name}: D_max(K,C) = D(K,C) for symmetric C", dmax(K, sy.arithmetic), diameter(K, sy.arithmetic), TRIVIAL, tol)


def _random_matrix(rng, n, B):
    """Integer matrix with nonzero determinant, converted to ``B``."""
    while True:
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        if rank(A, EXACT) == n:
            return [[B.convert(x) for x in row] for row in A]


@_scenario(
    "random-suite",
    "invariants",
    "structural invariants over a seeded corpus",
    count=(_int, "20"),
)
def _random_suite(report, ctx, count):
    B = ctx.corpus_backend()
    tol = _tol(B)
    rng = random.Random(ctx.seed)
    log_ok = [0, 0]
    with record_solutions() as log:
        for name, C in _centered_corpus(count, ctx.seed, B):
            n = C.dim
            again = Polytope.from_halfspaces(list(C.halfspaces), B)
            back = Polytope.from_vertices(list(again.vertices), B)
            same = back == C if B.exact else back.isclose(C, REPORT_TOL)
            report.holds(f"{name}: V -> H -> V round trip", same, True, TRIVIAL)
            bip = polar(polar(C))
            report.holds(f"{name}: bipolar", bip == C if B.exact else bip.isclose(C, REPORT_TOL), True, CLAIM)
            Cp = polar(C)
            worst = max(abs(C.gauge(x) - Cp.support(x)) for x in _directions(rng, n, B, 10))
            report.at_most(f"{name}: gauge = support of polar", worst, 0, CLAIM, tol)
            asym = minkowski_asymmetry(C)
            s = asym.s
            report.within(f"{name}: 1 <= s <= n", s, 1, n, CLAIM, tol)
            sym = is_symmetric(C)
            report.holds(f"{name}: s = 1 iff symmetric", (s == 1) if B.exact else abs(s - 1) <= REPORT_TOL, sym, CLAIM)
            report.holds(f"{name}: asymmetry certificate", validate_certificate(asym.certificate, negate(C), scale(C, s)), True, DERIVED)
            fa, fb, fw = measure_alpha(C), measure_beta(C), measure_omega(C)
            sy = four_symmetrizations(C)
            report.within(f"{name}: alpha in (0, 1]", fa.value, 0, 1, CLAIM, tol)
            report.within(f"{name}: beta in (0, 1]", fb.value, 0, 1, CLAIM, tol)
            report.within(f"{name}: omega in [1, (s+1)/2]", fw.value, 1, (s + 1) / 2, CLAIM, tol)
            report.at_least(f"{name}: alpha >= 2/(s+1)", fa.value, 2 / (s + 1), CLAIM, tol)
            for label, f, inner, outer in (
                ("alpha", fa, sy.minimum, sy.maximum),
                ("beta", fb, sy.harmonic, sy.arithmetic),
                ("omega", fw, sy.arithmetic, sy.harmonic),
            ):
                ok = validate_certificate(f.certificate, inner, scale(outer, f.value))
                report.holds(f"{name}: {label} certificate", ok, True, DERIVED)
            A = _random_matrix(rng, n, B)
            D = linear_image(C, A)
            s2 = minkowski_asymmetry(D).s
            report.equal(f"{name}: s affine invariant", s2, s, CLAIM, tol)
            report.equal(f"{name}: alpha affine invariant", measure_alpha(D).value, fa.value, CLAIM, tol)
            report.equal(f"{name}: beta affine invariant", measure_beta(D).value, fb.value, CLAIM, tol)
            report.equal(f"{name}: omega affine invariant", measure_omega(D).value, fw.value, CLAIM, tol)
            e = check_equivalence(C, negate(C))
            report.holds(f"{name}: equivalence booleans agree", e.minmax_opt == e.harm_arith_opt, True, CLAIM)
        for lp, sol in log:
            if sol.status != "optimal":
                continue
            log_ok[1] += 1
            log_ok[0] += check_certificate(lp, sol)
    report.equal("LP solutions with a valid duality certificate", log_ok[0], log_ok[1], DERIVED)
    report.notes.append(f"{log_ok[1]} optimal LP solutions checked")


def list_scenarios() -> list:
    """``(name, claim label, summary)`` for every scenario, sorted by name."""
    return [(n, CLAIMS[s.claim].label, s.summary) for n, s in sorted(SCENARIOS.items())]


__all__ = [
    "CLAIMS",
    "Check",
    "Claim",
    "PLOT_COLUMNS",
    "SCENARIOS",
    "ScenarioReport",
    "list_scenarios",
    "plot_rows",
    "run_scenario",
]
