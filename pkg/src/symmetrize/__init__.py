"""Exact and floating-point polytope computations for the four symmetrizations
of a convex body and the containment factors between them."""

__version__ = "1.0.0"

from .constructions import (
    CONSTRUCTIONS,
    alpha_pentagon,
    asymmetry_descent,
    beta_hexagon,
    beta_pentagon,
    embed,
    golden_house,
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
    circumradius,
    diameter,
    dmax,
    is_minkowski_centered,
    is_optimally_contained,
    measure_alpha,
    measure_beta,
    measure_omega,
    minkowski_asymmetry,
    parallel_support_witness,
    validate_certificate,
    verify_reverse_factors,
)
from .lp import LinearProgram, solve_lp
from .means import (
    arithmetic_mean,
    four_symmetrizations,
    harmonic_mean,
    hull_union,
    intersect,
    minkowski_sum,
    polar,
)
from .polytope import Polytope, linear_image, negate, scale, translate
from .scalar import APPROX, EXACT, Approx
from .scenarios import run_scenario

__all__ = [
    "APPROX",
    "Approx",
    "CONSTRUCTIONS",
    "EXACT",
    "LinearProgram",
    "Polytope",
    "alpha_pentagon",
    "arithmetic_mean",
    "asymmetry_descent",
    "beta_hexagon",
    "beta_pentagon",
    "check_equivalence",
    "circumradius",
    "diameter",
    "dmax",
    "embed",
    "four_symmetrizations",
    "golden_house",
    "harmonic_mean",
    "hull_union",
    "intersect",
    "is_minkowski_centered",
    "is_optimally_contained",
    "linear_image",
    "measure_alpha",
    "measure_beta",
    "measure_omega",
    "minkowski_asymmetry",
    "minkowski_sum",
    "negate",
    "parallel_support_witness",
    "polar",
    "random_body",
    "random_centered_polytope",
    "rational_simplex",
    "regular_kgon",
    "regular_simplex",
    "run_scenario",
    "scale",
    "simplex_cap",
    "solve_lp",
    "translate",
    "truncated_hexagon",
    "validate_certificate",
    "verify_reverse_factors",
]
