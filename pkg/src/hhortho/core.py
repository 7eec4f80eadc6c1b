"""Vectors, norms, and inner products on finite-dimensional real spaces.

Three norm families are supported:

* ``Lp(p)``            -- the l_p norm, ``1 <= p <= inf`` (``p = inf`` is the
  sup norm, a distinguished value, not a large float);
* ``WeightedLp(p, w)`` -- ``(sum_i w_i |v_i|^p)^(1/p)`` for finite p and
  ``max_i w_i |v_i|`` at ``p = inf`` (weights applied linearly in the sup
  case; the ``w_i^(1/p)`` scaling degenerates as p grows);
* ``InnerProduct(G)``  -- the norm induced by an SPD Gram matrix,
  ``sqrt(v^T G v)``.

Vectors are plain 1-D float64 numpy arrays with finite entries.  Everything
here is a pure function of its inputs; specs and tolerances are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

INF = math.inf


class InvalidSpecError(ValueError):
    """A norm specification violates one of its invariants."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions."""


# --------------------------------------------------------------------------
# Norm specifications
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Lp:
    p: float

    def __post_init__(self):
        object.__setattr__(self, "p", float(self.p))


@dataclass(frozen=True)
class WeightedLp:
    p: float
    weights: np.ndarray = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "p", float(self.p))
        w = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "weights", w)


@dataclass(frozen=True)
class InnerProduct:
    gram: np.ndarray = field(compare=False)

    def __post_init__(self):
        g = np.asarray(self.gram, dtype=float)
        object.__setattr__(self, "gram", g)


NormSpec = Union[Lp, WeightedLp, InnerProduct]


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative tolerance pair; at least one must be positive.

    ``threshold(*scales)`` gives the comparison slack at the scale of the
    quantities involved: ``max(abs_tol, rel_tol * max|scale|)``.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise InvalidSpecError("tolerances must be nonnegative")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise InvalidSpecError("at least one of abs_tol, rel_tol must be positive")

    def threshold(self, *scales: float) -> float:
        s = max((abs(float(v)) for v in scales), default=0.0)
        return max(self.abs_tol, self.rel_tol * s)


DEFAULT_TOL = Tolerance()

# Relative symmetry slack accepted when checking Gram matrices.
_SYM_RTOL = 1e-12


# --------------------------------------------------------------------------
# Vectors
# --------------------------------------------------------------------------

def as_vector(v, dim: int | None = None) -> np.ndarray:
    """Validate and convert to a finite 1-D float64 array of length >= 1."""
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1 or arr.size < 1:
        raise DimensionMismatchError(f"expected a 1-D vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidSpecError("vector components must be finite")
    if dim is not None and arr.size != dim:
        raise DimensionMismatchError(f"expected dimension {dim}, got {arr.size}")
    return arr


def as_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=float)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"expected a matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidSpecError("matrix entries must be finite")
    return arr


# --------------------------------------------------------------------------
# Spec validation
# --------------------------------------------------------------------------

def _is_spd(gram: np.ndarray) -> bool:
    """Cheap decisive SPD check: symmetry then a Cholesky attempt."""
    scale = np.abs(gram).max(initial=0.0)
    if np.abs(gram - gram.T).max(initial=0.0) > _SYM_RTOL * max(scale, 1.0):
        return False
    try:
        np.linalg.cholesky(0.5 * (gram + gram.T))
    except np.linalg.LinAlgError:
        return False
    return True


def validate_spec(spec: NormSpec, dim: int) -> str | None:
    """Return None if `spec` is valid at dimension `dim`, else the first
    violated invariant as a description."""
    if dim < 1:
        return "dimension must be >= 1"
    if isinstance(spec, Lp):
        if math.isnan(spec.p) or spec.p < 1:
            return "p < 1"
        return None
    if isinstance(spec, WeightedLp):
        if math.isnan(spec.p) or spec.p < 1:
            return "p < 1"
        w = spec.weights
        if w.ndim != 1 or w.size != dim:
            return f"weights length {w.size} does not match dimension {dim}"
        if not np.all(np.isfinite(w)) or not np.all(w > 0):
            return "weights must be strictly positive"
        return None
    if isinstance(spec, InnerProduct):
        g = spec.gram
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            return "gram matrix must be square"
        if g.shape[0] != dim:
            return f"gram dimension {g.shape[0]} does not match dimension {dim}"
        if not np.all(np.isfinite(g)):
            return "gram entries must be finite"
        if not _is_spd(g):
            return "not positive definite"
        return None
    return f"unknown spec type {type(spec).__name__}"


def require_spec(spec: NormSpec, dim: int) -> None:
    err = validate_spec(spec, dim)
    if err is not None:
        raise InvalidSpecError(err)


def spec_dim(spec: NormSpec) -> int | None:
    """Dimension pinned by the spec itself, or None for plain Lp."""
    if isinstance(spec, WeightedLp):
        return int(spec.weights.size)
    if isinstance(spec, InnerProduct):
        return int(spec.gram.shape[0])
    return None


def ip_like_gram(spec: NormSpec, dim: int) -> np.ndarray | None:
    """Gram matrix when the spec's norm is induced by an inner product.

    ``Lp(2)`` is the identity Gram, ``WeightedLp(2, w)`` is ``diag(w)``,
    ``InnerProduct`` is its own Gram.  Everything else returns None.
    """
    if isinstance(spec, InnerProduct):
        return spec.gram
    if isinstance(spec, Lp) and spec.p == 2.0:
        return np.eye(dim)
    if isinstance(spec, WeightedLp) and spec.p == 2.0:
        return np.diag(spec.weights)
    return None


# --------------------------------------------------------------------------
# Norm and inner product evaluation
# --------------------------------------------------------------------------

def norm(spec: NormSpec, v) -> float:
    """Evaluate ||v|| under `spec`; zero iff v is the zero vector."""
    v = as_vector(v)
    pinned = spec_dim(spec)
    if pinned is not None and pinned != v.size:
        raise DimensionMismatchError(
            f"spec is for dimension {pinned}, vector has dimension {v.size}")
    require_spec(spec, v.size)
    return float(norm_batch(spec, v[None, :])[0])


def norm_batch(spec: NormSpec, V: np.ndarray) -> np.ndarray:
    """Row-wise norms of an (n, d) array.  No validation beyond dimensions."""
    V = np.asarray(V, dtype=float)
    if isinstance(spec, Lp):
        if spec.p == INF:
            return np.abs(V).max(axis=-1)
        if spec.p == 1.0:
            return np.abs(V).sum(axis=-1)
        if spec.p == 2.0:
            return np.sqrt(np.einsum("...i,...i->...", V, V))
        return (np.abs(V) ** spec.p).sum(axis=-1) ** (1.0 / spec.p)
    if isinstance(spec, WeightedLp):
        w = spec.weights
        if w.size != V.shape[-1]:
            raise DimensionMismatchError(
                f"weights length {w.size} does not match dimension {V.shape[-1]}")
        if spec.p == INF:
            return (np.abs(V) * w).max(axis=-1)
        return ((np.abs(V) ** spec.p) @ w) ** (1.0 / spec.p)
    if isinstance(spec, InnerProduct):
        g = spec.gram
        if g.shape[0] != V.shape[-1]:
            raise DimensionMismatchError(
                f"gram dimension {g.shape[0]} does not match dimension {V.shape[-1]}")
        q = np.einsum("...i,ij,...j->...", V, g, V)
        return np.sqrt(np.maximum(q, 0.0))
    raise InvalidSpecError(f"unknown spec type {type(spec).__name__}")


def inner(gram, x, y) -> float:
    """x^T G y for an SPD Gram matrix G."""
    g = as_matrix(gram)
    x = as_vector(x)
    y = as_vector(y, x.size)
    if g.shape != (x.size, x.size):
        raise DimensionMismatchError(
            f"gram shape {g.shape} does not match vectors of dimension {x.size}")
    return float(x @ g @ y)


# --------------------------------------------------------------------------
# JSON serialization (tagged objects; vectors and matrices are plain arrays)
# --------------------------------------------------------------------------

def _p_to_json(p: float):
    if p == INF:
        return "inf"
    return int(p) if float(p).is_integer() else p


def _p_from_json(p) -> float:
    if isinstance(p, str):
        if p.lower() in ("inf", "infinity"):
            return INF
        return float(p)
    return float(p)


def spec_to_json(spec: NormSpec) -> dict:
    if isinstance(spec, Lp):
        return {"kind": "lp", "p": _p_to_json(spec.p)}
    if isinstance(spec, WeightedLp):
        return {"kind": "wlp", "p": _p_to_json(spec.p), "weights": spec.weights.tolist()}
    if isinstance(spec, InnerProduct):
        return {"kind": "ip", "gram": spec.gram.tolist()}
    raise InvalidSpecError(f"unknown spec type {type(spec).__name__}")


def spec_from_json(obj: dict) -> NormSpec:
    try:
        kind = obj["kind"]
    except (TypeError, KeyError):
        raise InvalidSpecError("norm spec JSON must be an object with a 'kind' tag")
    if kind == "lp":
        return Lp(_p_from_json(obj["p"]))
    if kind == "wlp":
        return WeightedLp(_p_from_json(obj["p"]), np.asarray(obj["weights"], dtype=float))
    if kind == "ip":
        return InnerProduct(np.asarray(obj["gram"], dtype=float))
    raise InvalidSpecError(f"unknown norm spec kind {kind!r}")
