"""The two integral functionals behind integral orthogonality.

    I+(x, y) = integral_0^1 ||(1-t) x + t y||^2 dt
    I-(x, y) = integral_0^1 ||(1-t) x - t y||^2 dt

Under an inner-product norm the integrand is a quadratic polynomial in t and
both integrals have closed forms:

    I+ = (||x||^2 + ||y||^2 + <x, y>) / 3
    I- = (||x||^2 + ||y||^2 - <x, y>) / 3

so the gap I+ - I- equals (2/3) <x, y> and the total I+ + I- equals
(2/3) (||x||^2 + ||y||^2).  For every other norm the integrals are computed
by kink-split adaptive Gauss-Legendre quadrature (see hhortho.kernels).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import (DEFAULT_TOL, INF, DimensionMismatchError, InnerProduct,
                   InvalidSpecError, Lp, NormSpec, Tolerance, WeightedLp,
                   as_matrix, as_vector, require_spec)

_METHODS = ("auto", "closed", "quadrature")


class QuadratureError(RuntimeError):
    """Adaptive bisection hit the depth limit (pathological integrand)."""


@dataclass(frozen=True)
class HHValues:
    """Both integrals plus derived gap/total.

    ``gap`` and ``total`` are always the exact float difference and sum of
    the stored ``i_plus`` and ``i_minus``.
    """

    i_plus: float
    i_minus: float
    gap: float
    total: float
    method: str
    est_abs_error: float

    @classmethod
    def make(cls, i_plus: float, i_minus: float, method: str,
             est_abs_error: float) -> "HHValues":
        i_plus = float(i_plus)
        i_minus = float(i_minus)
        return cls(i_plus, i_minus, i_plus - i_minus, i_plus + i_minus,
                   method, float(est_abs_error))

    def to_dict(self) -> dict:
        return {"i_plus": self.i_plus, "i_minus": self.i_minus,
                "gap": self.gap, "total": self.total,
                "method": self.method, "est_abs_error": self.est_abs_error}

    @classmethod
    def from_dict(cls, d: dict) -> "HHValues":
        return cls(d["i_plus"], d["i_minus"], d["gap"], d["total"],
                   d["method"], d["est_abs_error"])


def lower_spec(spec: NormSpec, dim: int):
    """Lower a norm spec to kernel arguments (kind, p, weights, gram)."""
    require_spec(spec, dim)
    dummy_g = np.zeros((1, 1))
    if isinstance(spec, Lp):
        w = np.ones(dim)
        if spec.p == INF:
            return kernels.KIND_SUP, 0.0, w, dummy_g
        return kernels.KIND_PSUM, spec.p, w, dummy_g
    if isinstance(spec, WeightedLp):
        if spec.p == INF:
            return kernels.KIND_SUP, 0.0, spec.weights, dummy_g
        return kernels.KIND_PSUM, spec.p, spec.weights, dummy_g
    if isinstance(spec, InnerProduct):
        return kernels.KIND_QUAD, 0.0, np.ones(1), spec.gram
    raise InvalidSpecError(f"unknown spec type {type(spec).__name__}")


def hh_closed_form_ip(gram, x, y) -> HHValues:
    """Closed-form I+/I- under the inner product <u, v> = u^T G v."""
    g = as_matrix(gram)
    x = as_vector(x)
    y = as_vector(y, x.size)
    if g.shape != (x.size, x.size):
        raise DimensionMismatchError(
            f"gram shape {g.shape} does not match vectors of dimension {x.size}")
    nx2 = float(x @ g @ x)
    ny2 = float(y @ g @ y)
    ip = float(x @ g @ y)
    return HHValues.make((nx2 + ny2 + ip) / 3.0, (nx2 + ny2 - ip) / 3.0,
                         "closed-form", 0.0)


def hh_batch(spec: NormSpec, X, Y, tol: Tolerance = DEFAULT_TOL,
             method: str = "auto"):
    """Row-wise (i_plus, i_minus, est_abs_error) for pair arrays (n, d).

    ``method="closed"`` requires an inner-product-induced norm (this covers
    the plain and weighted p = 2 cases via their Gram matrices);
    ``method="quadrature"`` forces the numerical path for any spec.
    """
    if method not in _METHODS:
        raise ValueError(f"method must be one of {_METHODS}")
    X = np.atleast_2d(np.asarray(X, dtype=float))
    Y = np.atleast_2d(np.asarray(Y, dtype=float))
    if X.shape != Y.shape:
        raise DimensionMismatchError(f"pair shapes differ: {X.shape} vs {Y.shape}")
    n, d = X.shape
    require_spec(spec, d)

    if method == "closed" or (method == "auto" and isinstance(spec, InnerProduct)):
        from .core import ip_like_gram
        g = ip_like_gram(spec, d)
        if g is None:
            raise InvalidSpecError(
                "closed form requires an inner-product-induced norm")
        nx2 = np.einsum("ni,ij,nj->n", X, g, X)
        ny2 = np.einsum("ni,ij,nj->n", Y, g, Y)
        ip = np.einsum("ni,ij,nj->n", X, g, Y)
        i_plus = (nx2 + ny2 + ip) / 3.0
        i_minus = (nx2 + ny2 - ip) / 3.0
        return i_plus, i_minus, np.zeros(n)

    kind, p, w, g = lower_spec(spec, d)
    i_plus, err_p, ok_p = kernels.hh_integral_batch(
        kind, p, w, g, X, Y, tol.abs_tol, tol.rel_tol)
    i_minus, err_m, ok_m = kernels.hh_integral_batch(
        kind, p, w, g, X, -Y, tol.abs_tol, tol.rel_tol)
    if not (ok_p.all() and ok_m.all()):
        raise QuadratureError(
            "adaptive quadrature failed to converge within the depth limit")
    return i_plus, i_minus, err_p + err_m


def hh_values(spec: NormSpec, x, y, tol: Tolerance = DEFAULT_TOL,
              method: str = "auto") -> HHValues:
    """I+/I- bundle for a single pair; closed form for inner-product specs,
    adaptive quadrature otherwise."""
    x = as_vector(x)
    y = as_vector(y, x.size)
    if method == "auto" and isinstance(spec, InnerProduct):
        require_spec(spec, x.size)
        return hh_closed_form_ip(spec.gram, x, y)
    i_plus, i_minus, err = hh_batch(spec, x[None, :], y[None, :], tol, method)
    name = "closed-form" if method == "closed" else "quadrature"
    return HHValues.make(i_plus[0], i_minus[0], name, err[0])


def hh_plus(spec: NormSpec, x, y, tol: Tolerance = DEFAULT_TOL) -> float:
    """integral_0^1 ||(1-t)x + ty||^2 dt."""
    return hh_values(spec, x, y, tol).i_plus


def hh_minus(spec: NormSpec, x, y, tol: Tolerance = DEFAULT_TOL) -> float:
    """integral_0^1 ||(1-t)x - ty||^2 dt."""
    return hh_values(spec, x, y, tol).i_minus
