"""Pure-numpy implementations of the hot numerical kernels.

This is the fallback backend (``ORTHO_BACKEND=numpy``) and the semantic
reference for :mod:`hhortho.kernels.numba_backend`.  Batches are processed
as flat panel worklists so the adaptive quadrature stays data-parallel.

Norm kinds are lowered to integer codes before reaching a kernel:

* ``KIND_PSUM`` -- ``f(v) = (sum_i w_i |v_i|^p)^(2/p)``, finite p
* ``KIND_SUP``  -- ``f(v) = (max_i w_i |v_i|)^2``
* ``KIND_QUAD`` -- ``f(v) = v^T G v``

``hh_integral_batch`` integrates ``f((1-t)x + t y)`` over ``t in [0, 1]``
row by row: Gauss-Legendre order 16 per panel, panels pre-split at the
kinks of the integrand (coordinate zero crossings, and for the sup norm
also the crossings where the maximizing coordinate changes), then bisected
adaptively until the two-half versus one-panel difference meets tolerance.
"""

from __future__ import annotations

import numpy as np

GL_NODES, GL_WEIGHTS = np.polynomial.legendre.leggauss(16)

KIND_PSUM = 0
KIND_SUP = 1
KIND_QUAD = 2

MAX_DEPTH = 30

# soft cap on the number of doubles a single panel evaluation materializes
_CHUNK_BUDGET = 6_000_000


def _pow_sum_sq(absV: np.ndarray, p: float, w: np.ndarray) -> np.ndarray:
    """(sum_i w_i a_i^p)^(2/p) along the last axis, with cheap special cases."""
    if p == 1.0:
        s = absV @ w
        return s * s
    if p == 2.0:
        return (absV * absV) @ w
    if p == 3.0:
        return ((absV * absV * absV) @ w) ** (2.0 / 3.0)
    return ((absV**p) @ w) ** (2.0 / p)


def _panel_integrals(kind, p, w, gram, X, Y, tidx, a, b):
    """GL16 of f((1-t)x + t y) over each panel [a_k, b_k] of trial tidx[k]."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    t = mid[:, None] + half[:, None] * GL_NODES  # (P, 16)
    V = (X[tidx][:, None, :] * (1.0 - t)[:, :, None]
         + Y[tidx][:, None, :] * t[:, :, None])  # (P, 16, d)
    if kind == KIND_PSUM:
        f = _pow_sum_sq(np.abs(V), p, w)
    elif kind == KIND_SUP:
        m = (np.abs(V) * w).max(axis=2)
        f = m * m
    else:
        f = np.einsum("pni,ij,pnj->pn", V, gram, V)
    return (f @ GL_WEIGHTS) * half


def _interior_or_one(t: np.ndarray) -> np.ndarray:
    good = np.isfinite(t) & (t > 0.0) & (t < 1.0)
    return np.where(good, t, 1.0)


def _breakpoints(kind, w, X, Y) -> np.ndarray:
    """Sorted per-trial panel boundaries in [0, 1]; unused slots collapse to 1."""
    n, d = X.shape
    cols = [np.zeros((n, 1)), np.ones((n, 1))]
    if kind != KIND_QUAD:
        den = X - Y
        with np.errstate(divide="ignore", invalid="ignore"):
            cols.append(_interior_or_one(X / den))
    if kind == KIND_SUP and d > 1:
        A = X * w
        B = (Y - X) * w
        iu, ju = np.triu_indices(d, 1)
        for sgn in (1.0, -1.0):
            num = A[:, iu] - sgn * A[:, ju]
            den = B[:, iu] - sgn * B[:, ju]
            with np.errstate(divide="ignore", invalid="ignore"):
                cols.append(_interior_or_one(-num / den))
    bp = np.concatenate(cols, axis=1)
    bp.sort(axis=1)
    return bp


def _hh_chunk(kind, p, w, gram, X, Y, abs_tol, rel_tol):
    n = X.shape[0]
    bp = _breakpoints(kind, w, X, Y)
    k = bp.shape[1]
    a = bp[:, :-1].ravel()
    b = bp[:, 1:].ravel()
    tid = np.repeat(np.arange(n), k - 1)
    keep = b > a
    a, b, tid = a[keep], b[keep], tid[keep]

    rough = np.bincount(tid, _panel_integrals(kind, p, w, gram, X, Y, tid, a, b),
                        minlength=n)
    target = np.maximum(abs_tol, rel_tol * np.abs(rough))

    vals = np.zeros(n)
    errs = np.zeros(n)
    ok = np.ones(n, dtype=bool)
    depth = np.zeros(a.size, dtype=np.int64)
    while tid.size:
        i1 = _panel_integrals(kind, p, w, gram, X, Y, tid, a, b)
        m = 0.5 * (a + b)
        il = _panel_integrals(kind, p, w, gram, X, Y, tid, a, m)
        ir = _panel_integrals(kind, p, w, gram, X, Y, tid, m, b)
        i2 = il + ir
        err = np.abs(i2 - i1)
        accept = err <= target[tid] * (b - a)
        exhausted = ~accept & (depth >= MAX_DEPTH)
        if exhausted.any():
            ok[tid[exhausted]] = False
        done = accept | exhausted
        vals += np.bincount(tid[done], i2[done], minlength=n)
        errs += np.bincount(tid[done], err[done], minlength=n)
        split = ~done
        tid = np.tile(tid[split], 2)
        a = np.concatenate([a[split], m[split]])
        b = np.concatenate([m[split], b[split]])
        depth = np.tile(depth[split] + 1, 2)
    return vals, errs, ok


def hh_integral_batch(kind, p, w, gram, X, Y, abs_tol=1e-12, rel_tol=1e-10):
    """Row-wise integral of ||(1-t)x + t y||^2 over [0, 1].

    Returns (values, estimated absolute errors, convergence flags).
    """
    X = np.ascontiguousarray(X, dtype=float)
    Y = np.ascontiguousarray(Y, dtype=float)
    n, d = X.shape
    k = 2 + (d if kind != KIND_QUAD else 0) + (d * (d - 1) if kind == KIND_SUP else 0)
    chunk = max(1, int(_CHUNK_BUDGET // (k * 16 * d)))
    if n <= chunk:
        return _hh_chunk(kind, p, w, gram, X, Y, abs_tol, rel_tol)
    vals = np.empty(n)
    errs = np.empty(n)
    ok = np.empty(n, dtype=bool)
    for s in range(0, n, chunk):
        e = min(n, s + chunk)
        vals[s:e], errs[s:e], ok[s:e] = _hh_chunk(
            kind, p, w, gram, X[s:e], Y[s:e], abs_tol, rel_tol)
    return vals, errs, ok


def beta_min_batch(nx, ny, expand_cap=200, iters=90):
    """Golden-section minimum of h(b) = (nx/b)^2 + (b*ny)^2 over b > 0.

    Purely numeric on purpose (the analytic value 2*nx*ny is what callers
    cross-check against).  Caller guarantees nx > 0 and ny > 0 row-wise.
    Returns (minimizer, minimum value).
    """
    nx = np.asarray(nx, dtype=float)
    ny = np.asarray(ny, dtype=float)

    def h(b):
        return (nx / b) ** 2 + (b * ny) ** 2

    lo = np.ones_like(nx)
    hi = np.ones_like(nx)
    for _ in range(expand_cap):
        grow = h(2.0 * hi) < h(hi)
        if not grow.any():
            break
        hi = np.where(grow, 2.0 * hi, hi)
    for _ in range(expand_cap):
        shrink = h(0.5 * lo) < h(lo)
        if not shrink.any():
            break
        lo = np.where(shrink, 0.5 * lo, lo)
    # one extra widening so the minimizer is strictly bracketed
    lo = 0.5 * lo
    hi = 2.0 * hi

    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    for _ in range(iters):
        c = hi - invphi * (hi - lo)
        d = lo + invphi * (hi - lo)
        left = h(c) < h(d)
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
    bm = 0.5 * (lo + hi)
    return bm, h(bm)
