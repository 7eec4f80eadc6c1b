"""Shared fixtures and independent oracles.

``simpson_hh`` is the reference integrator used to confirm derived values:
it evaluates the raw integrand on a fine grid and applies composite Simpson,
touching none of the package's quadrature machinery.
"""

import math

import numpy as np
import pytest
from hypothesis import settings

from hhortho.core import INF, InnerProduct, Lp, WeightedLp

settings.register_profile("ci", deadline=None, derandomize=True,
                          max_examples=150)
settings.load_profile("ci")


def raw_norm(spec, v):
    """Independent norm evaluation (no package calls)."""
    v = np.asarray(v, dtype=float)
    if isinstance(spec, Lp):
        if spec.p == INF:
            return float(np.max(np.abs(v)))
        return float(np.sum(np.abs(v) ** spec.p) ** (1.0 / spec.p))
    if isinstance(spec, WeightedLp):
        if spec.p == INF:
            return float(np.max(spec.weights * np.abs(v)))
        return float((spec.weights @ np.abs(v) ** spec.p) ** (1.0 / spec.p))
    if isinstance(spec, InnerProduct):
        return float(math.sqrt(max(v @ spec.gram @ v, 0.0)))
    raise TypeError(spec)


def simpson_hh(spec, x, y, sign=1.0, n=200_000):
    """Composite-Simpson reference for integral_0^1 ||(1-t)x + sign*t*y||^2 dt."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    t = np.linspace(0.0, 1.0, n + 1)
    v = np.outer(1.0 - t, x) + np.outer(t, sign * y)
    if isinstance(spec, Lp):
        if spec.p == INF:
            f = np.max(np.abs(v), axis=1) ** 2
        else:
            f = np.sum(np.abs(v) ** spec.p, axis=1) ** (2.0 / spec.p)
    elif isinstance(spec, WeightedLp):
        if spec.p == INF:
            f = np.max(spec.weights * np.abs(v), axis=1) ** 2
        else:
            f = (np.abs(v) ** spec.p @ spec.weights) ** (2.0 / spec.p)
    elif isinstance(spec, InnerProduct):
        f = np.einsum("ti,ij,tj->t", v, spec.gram, v)
    else:
        raise TypeError(spec)
    h = 1.0 / n
    return float(h / 3.0 * (f[0] + f[-1] + 4.0 * f[1:-1:2].sum()
                            + 2.0 * f[2:-1:2].sum()))


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def spec_zoo(dim, rng):
    """One spec of every supported flavor at the given dimension."""
    a = rng.normal(size=(dim, dim))
    return [
        Lp(1.0), Lp(1.5), Lp(2.0), Lp(3.0), Lp(INF),
        WeightedLp(2.0, rng.uniform(0.5, 2.0, dim)),
        WeightedLp(1.5, rng.uniform(0.5, 2.0, dim)),
        WeightedLp(INF, rng.uniform(0.5, 2.0, dim)),
        InnerProduct(a.T @ a + dim * np.eye(dim)),
    ]
