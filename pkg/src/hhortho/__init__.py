"""Integral orthogonality on finite-dimensional real normed spaces.

The package computes the two integrals

    I+(x, y) = integral_0^1 ||(1-t) x + t y||^2 dt
    I-(x, y) = integral_0^1 ||(1-t) x - t y||^2 dt

decides the exact relation I+ = I- and its two approximate variants
(|I+ - I-| <= eps (I+ + I-) and |I+ - I-| <= (2/3) eps ||x|| ||y||) next to
the classical Birkhoff / isosceles / inner-product relations, analyzes
linear maps that approximately preserve the relation, and ships a claim
registry that audits the surrounding theory numerically.
"""

__version__ = "0.1.0"

from .core import (DEFAULT_TOL, InnerProduct, InvalidSpecError,
                   DimensionMismatchError, Lp, Tolerance, WeightedLp, inner,
                   norm, spec_from_json, spec_to_json, validate_spec)
from .integrals import (HHValues, QuadratureError, hh_closed_form_ip,
                        hh_minus, hh_plus, hh_values)
from .relations import RELATION_IDS, OrthoVerdict, evaluate
from .solvers import (BetaMin, RootResult, beta_functional_min, golden_min,
                      hh_orthogonal_in_pencil, minimize_norm_on_line)
from .mappings import (ConditionReport, EpsSearchResult, LinearMap,
                       MapProfile, check_bounds_12, check_condition_17,
                       jacobi_eigh, min_eps_condition_11,
                       min_eps_condition_14, profile, two_norm_embedding)
from .claims import (ClaimReport, ClaimSpec, Universe, build_spec, claim_ids,
                     reverify_witness, run_claim, run_claims,
                     search_counterexample, summary_markdown,
                     witness_violates)

__all__ = [
    "DEFAULT_TOL", "InnerProduct", "InvalidSpecError",
    "DimensionMismatchError", "Lp", "Tolerance", "WeightedLp", "inner",
    "norm", "spec_from_json", "spec_to_json", "validate_spec",
    "HHValues", "QuadratureError", "hh_closed_form_ip", "hh_minus",
    "hh_plus", "hh_values",
    "RELATION_IDS", "OrthoVerdict", "evaluate",
    "BetaMin", "RootResult", "beta_functional_min", "golden_min",
    "hh_orthogonal_in_pencil", "minimize_norm_on_line",
    "ConditionReport", "EpsSearchResult", "LinearMap", "MapProfile",
    "check_bounds_12", "check_condition_17", "jacobi_eigh",
    "min_eps_condition_11", "min_eps_condition_14", "profile",
    "two_norm_embedding",
    "ClaimReport", "ClaimSpec", "Universe", "build_spec", "claim_ids",
    "reverify_witness", "run_claim", "run_claims", "search_counterexample",
    "summary_markdown", "witness_violates",
]
