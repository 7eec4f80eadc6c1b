"""Orthogonality predicates with signed margins.

Every predicate returns an :class:`OrthoVerdict` whose ``margin`` is the raw
``RHS - LHS`` of the defining inequality (for exact equalities, minus the
absolute residual), so ``margin >= 0`` means the relation holds and the
magnitude says by how much.  ``holds`` allows the configured tolerance of
slack below zero; counterexample search ranks candidates by these margins.

Degenerate inputs (x = 0 or y = 0) satisfy every relation by convention and
are flagged in ``details``.

Relation identifiers (stable strings, shared with the CLI and the claim
harness):

    classic                |<x, y>| = 0                      (inner product)
    birkhoff               min_t ||x + t y|| >= ||x||
    isosceles              ||x + y|| = ||x - y||
    eps_inner              |<x, y>| <= eps ||x|| ||y||       (inner product)
    dragomir_birkhoff      min_t ||x + t y|| >= (1 - eps) ||x||
    chmielinski_birkhoff   ||x + t y||^2 >= ||x||^2 - 2 eps ||x|| ||t y||
    iso_additive           | ||x+y||^2 - ||x-y||^2 | <= 4 eps ||x|| ||y||
    iso_multiplicative     | ||x+y|| - ||x-y|| | < eps ||x+y|| ||x-y||
    hh_exact               I+ = I-
    hh_relative            |I+ - I-| <= eps (I+ + I-)
    hh_absolute            |I+ - I-| <= (2/3) eps ||x|| ||y||
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import (DEFAULT_TOL, InvalidSpecError, NormSpec, Tolerance,
                   as_matrix, as_vector, inner, ip_like_gram, norm,
                   require_spec)
from .integrals import hh_values
from .solvers import golden_min, minimize_norm_on_line

RELATION_IDS = ("classic", "birkhoff", "isosceles", "eps_inner",
                "dragomir_birkhoff", "chmielinski_birkhoff", "iso_additive",
                "iso_multiplicative", "hh_exact", "hh_relative", "hh_absolute")

#: relations that take an epsilon parameter
EPS_RELATIONS = frozenset(("eps_inner", "dragomir_birkhoff",
                           "chmielinski_birkhoff", "iso_additive",
                           "iso_multiplicative", "hh_relative", "hh_absolute"))

#: relations defined only for inner-product-induced norms
IP_RELATIONS = frozenset(("classic", "eps_inner"))


@dataclass
class OrthoVerdict:
    holds: bool
    margin: float
    relation: str
    epsilon: float | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"relation": self.relation, "holds": self.holds,
                "margin": self.margin, "epsilon": self.epsilon,
                "details": self.details}

    @classmethod
    def from_dict(cls, d: dict) -> "OrthoVerdict":
        return cls(holds=d["holds"], margin=d["margin"], relation=d["relation"],
                   epsilon=d.get("epsilon"), details=d.get("details", {}))


def _check_eps(eps: float, upper_open: bool = True) -> float:
    eps = float(eps)
    if math.isnan(eps) or eps < 0.0 or (upper_open and eps >= 1.0):
        rng = "[0, 1)" if upper_open else "[0, inf)"
        raise InvalidSpecError(f"epsilon must lie in {rng}, got {eps}")
    return eps


def _degenerate(relation, eps=None) -> OrthoVerdict:
    return OrthoVerdict(True, 0.0, relation, eps, {"degenerate": True})


def _verdict(relation, margin, thr, eps=None, details=None) -> OrthoVerdict:
    return OrthoVerdict(bool(margin >= -thr), float(margin), relation, eps,
                        details or {})


# --------------------------------------------------------------------------
# Inner-product relations
# --------------------------------------------------------------------------

def classic(gram, x, y, tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """<x, y> = 0."""
    g = as_matrix(gram)
    x, y = as_vector(x), as_vector(y)
    ip = inner(g, x, y)
    nx = math.sqrt(max(inner(g, x, x), 0.0))
    ny = math.sqrt(max(inner(g, y, y), 0.0))
    if nx == 0.0 or ny == 0.0:
        return _degenerate("classic")
    return _verdict("classic", -abs(ip), tol.threshold(nx * ny),
                    details={"inner": ip})


def eps_inner(gram, x, y, eps, tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """|<x, y>| <= eps ||x|| ||y||."""
    eps = _check_eps(eps)
    g = as_matrix(gram)
    x, y = as_vector(x), as_vector(y)
    ip = inner(g, x, y)
    nx = math.sqrt(max(inner(g, x, x), 0.0))
    ny = math.sqrt(max(inner(g, y, y), 0.0))
    if nx == 0.0 or ny == 0.0:
        return _degenerate("eps_inner", eps)
    margin = eps * nx * ny - abs(ip)
    return _verdict("eps_inner", margin, tol.threshold(nx * ny), eps,
                    {"inner": ip})


# --------------------------------------------------------------------------
# Birkhoff-type relations
# --------------------------------------------------------------------------

def birkhoff(spec: NormSpec, x, y, tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """||x + a y|| >= ||x|| for all real a."""
    x, y = as_vector(x), as_vector(y, None)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 or ny == 0.0:
        return _degenerate("birkhoff")
    t_star, val = minimize_norm_on_line(spec, x, y)
    return _verdict("birkhoff", val - nx, tol.threshold(nx),
                    details={"t_star": t_star, "min_value": val})


def dragomir_birkhoff(spec: NormSpec, x, y, eps,
                      tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """||x + t y|| >= (1 - eps) ||x|| for all real t."""
    eps = _check_eps(eps)
    x, y = as_vector(x), as_vector(y)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 or ny == 0.0:
        return _degenerate("dragomir_birkhoff", eps)
    t_star, val = minimize_norm_on_line(spec, x, y)
    return _verdict("dragomir_birkhoff", val - (1.0 - eps) * nx,
                    tol.threshold(nx), eps,
                    {"t_star": t_star, "min_value": val})


def chmielinski_birkhoff(spec: NormSpec, x, y, eps,
                         tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """||x + t y||^2 >= ||x||^2 - 2 eps ||x|| ||t y|| for all real t.

    Equivalently inf_t [ ||x + t y||^2 + 2 eps ||x|| ||y|| |t| ] >= ||x||^2;
    the bracketed function is convex on each half-line, so each side is
    minimized by golden section and the lesser minimum decides.
    """
    eps = _check_eps(eps, upper_open=False)
    x, y = as_vector(x), as_vector(y, x.size)
    require_spec(spec, x.size)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 or ny == 0.0:
        return _degenerate("chmielinski_birkhoff", eps)

    pen = 2.0 * eps * nx * ny

    def q(t):
        return norm(spec, x + t * y) ** 2 + pen * abs(t)

    reach = 2.0 * nx / ny
    t_pos, v_pos = golden_min(q, 0.0, reach)
    t_neg, v_neg = golden_min(q, -reach, 0.0)
    t_star, val = min(((0.0, nx * nx), (t_pos, v_pos), (t_neg, v_neg)),
                      key=lambda tv: tv[1])
    return _verdict("chmielinski_birkhoff", val - nx * nx,
                    tol.threshold(nx * nx), eps,
                    {"t_star": t_star, "inf_value": val})


# --------------------------------------------------------------------------
# Isosceles-type relations
# --------------------------------------------------------------------------

def isosceles(spec: NormSpec, x, y, tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """||x + y|| = ||x - y||."""
    x, y = as_vector(x), as_vector(y, x.size)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 or ny == 0.0:
        return _degenerate("isosceles")
    np_, nm = norm(spec, x + y), norm(spec, x - y)
    return _verdict("isosceles", -abs(np_ - nm), tol.threshold(np_, nm),
                    details={"norm_sum": np_, "norm_diff": nm})


def iso_additive(spec: NormSpec, x, y, eps,
                 tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """| ||x+y||^2 - ||x-y||^2 | <= 4 eps ||x|| ||y||."""
    eps = _check_eps(eps, upper_open=False)
    x, y = as_vector(x), as_vector(y, x.size)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 or ny == 0.0:
        return _degenerate("iso_additive", eps)
    np_, nm = norm(spec, x + y), norm(spec, x - y)
    margin = 4.0 * eps * nx * ny - abs(np_ * np_ - nm * nm)
    return _verdict("iso_additive", margin, tol.threshold((nx + ny) ** 2), eps)


def iso_multiplicative(spec: NormSpec, x, y, eps,
                       tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """| ||x+y|| - ||x-y|| | < eps ||x+y|| ||x-y||.

    With ||x+y|| = 0 or ||x-y|| = 0 (and x, y nonzero) the right side
    vanishes while the left cannot, so the verdict fails and the zero right
    side is flagged.
    """
    eps = _check_eps(eps, upper_open=False)
    x, y = as_vector(x), as_vector(y, x.size)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 or ny == 0.0:
        return _degenerate("iso_multiplicative", eps)
    np_, nm = norm(spec, x + y), norm(spec, x - y)
    margin = eps * np_ * nm - abs(np_ - nm)
    details = {}
    if np_ == 0.0 or nm == 0.0:
        details["degenerate_rhs"] = True
    return _verdict("iso_multiplicative", margin, tol.threshold(np_, nm), eps,
                    details)


# --------------------------------------------------------------------------
# Integral relations
# --------------------------------------------------------------------------

def hh_exact(spec: NormSpec, x, y, tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """I+(x, y) = I-(x, y)."""
    x, y = as_vector(x), as_vector(y, x.size)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 or ny == 0.0:
        return _degenerate("hh_exact")
    v = hh_values(spec, x, y, tol)
    thr = tol.threshold(v.total, nx * nx + ny * ny)
    return _verdict("hh_exact", -abs(v.gap), thr, details=v.to_dict())


def hh_relative(spec: NormSpec, x, y, eps,
                tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """|I+ - I-| <= eps (I+ + I-)  (the relative approximate relation)."""
    eps = _check_eps(eps)
    x, y = as_vector(x), as_vector(y, x.size)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 or ny == 0.0:
        return _degenerate("hh_relative", eps)
    v = hh_values(spec, x, y, tol)
    details = v.to_dict()
    details["ratio"] = v.i_plus / v.i_minus if v.i_minus > 0.0 else math.inf
    details["ratio_lo"] = (1.0 - eps) / (1.0 + eps)
    details["ratio_hi"] = (1.0 + eps) / (1.0 - eps)
    margin = eps * v.total - abs(v.gap)
    return _verdict("hh_relative", margin, tol.threshold(v.total), eps, details)


def hh_absolute(spec: NormSpec, x, y, eps,
                tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """|I+ - I-| <= (2/3) eps ||x|| ||y||  (the absolute approximate relation)."""
    eps = _check_eps(eps)
    x, y = as_vector(x), as_vector(y, x.size)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 or ny == 0.0:
        return _degenerate("hh_absolute", eps)
    v = hh_values(spec, x, y, tol)
    margin = (2.0 / 3.0) * eps * nx * ny - abs(v.gap)
    return _verdict("hh_absolute", margin, tol.threshold(nx * ny), eps,
                    v.to_dict())


# --------------------------------------------------------------------------
# Dispatch
# --------------------------------------------------------------------------

def evaluate(relation: str, spec: NormSpec, x, y, eps: float | None = None,
             tol: Tolerance = DEFAULT_TOL) -> OrthoVerdict:
    """Evaluate any relation by identifier against a norm spec.

    The inner-product relations require a norm induced by an inner product
    (``ip``, or ``lp``/``wlp`` with p = 2, whose Gram matrices are implied).
    """
    if relation not in RELATION_IDS:
        raise InvalidSpecError(f"unknown relation {relation!r}")
    needs_eps = relation in EPS_RELATIONS
    if needs_eps and eps is None:
        raise InvalidSpecError(f"relation {relation!r} requires epsilon")
    if not needs_eps and eps is not None:
        raise InvalidSpecError(f"relation {relation!r} takes no epsilon")
    x = as_vector(x)
    y = as_vector(y, x.size)
    require_spec(spec, x.size)
    if relation in IP_RELATIONS:
        g = ip_like_gram(spec, x.size)
        if g is None:
            raise InvalidSpecError(
                f"relation {relation!r} requires an inner-product norm")
        if relation == "classic":
            return classic(g, x, y, tol)
        return eps_inner(g, x, y, eps, tol)
    fn = {"birkhoff": birkhoff, "isosceles": isosceles, "hh_exact": hh_exact}
    if relation in fn:
        return fn[relation](spec, x, y, tol)
    fn = {"dragomir_birkhoff": dragomir_birkhoff,
          "chmielinski_birkhoff": chmielinski_birkhoff,
          "iso_additive": iso_additive,
          "iso_multiplicative": iso_multiplicative,
          "hh_relative": hh_relative, "hh_absolute": hh_absolute}
    return fn[relation](spec, x, y, eps, tol)
