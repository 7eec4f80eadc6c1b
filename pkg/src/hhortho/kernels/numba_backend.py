"""Numba-compiled implementations of the hot numerical kernels.

Same contracts as :mod:`hhortho.kernels.numpy_backend`; per-trial scalar
recursion replaces the flat worklists.  Compiled lazily on first call and
cached on disk.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .numpy_backend import (GL_NODES, GL_WEIGHTS, KIND_PSUM, KIND_SUP,
                            KIND_QUAD, MAX_DEPTH)

_STACK_CAP = 4096


@njit(cache=True)
def _panel_gl(kind, p, w, gram, x, y, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    d = x.shape[0]
    acc = 0.0
    for q in range(16):
        t = mid + half * GL_NODES[q]
        u = 1.0 - t
        if kind == KIND_PSUM:
            s = 0.0
            if p == 1.0:
                for i in range(d):
                    s += w[i] * abs(u * x[i] + t * y[i])
                f = s * s
            elif p == 2.0:
                for i in range(d):
                    v = u * x[i] + t * y[i]
                    s += w[i] * v * v
                f = s
            elif p == 3.0:
                for i in range(d):
                    v = abs(u * x[i] + t * y[i])
                    s += w[i] * v * v * v
                f = s ** (2.0 / 3.0)
            else:
                for i in range(d):
                    s += w[i] * abs(u * x[i] + t * y[i]) ** p
                f = s ** (2.0 / p)
        elif kind == KIND_SUP:
            m = 0.0
            for i in range(d):
                c = w[i] * abs(u * x[i] + t * y[i])
                if c > m:
                    m = c
            f = m * m
        else:
            s = 0.0
            for i in range(d):
                vi = u * x[i] + t * y[i]
                row = 0.0
                for j in range(d):
                    row += gram[i, j] * (u * x[j] + t * y[j])
                s += vi * row
            f = s
        acc += GL_WEIGHTS[q] * f
    return acc * half


@njit(cache=True)
def _hh_one(kind, p, w, gram, x, y, abs_tol, rel_tol, bp, sa, sb, sd):
    d = x.shape[0]
    nb = 0
    bp[nb] = 0.0
    nb += 1
    bp[nb] = 1.0
    nb += 1
    if kind != KIND_QUAD:
        for i in range(d):
            den = x[i] - y[i]
            if den != 0.0:
                t = x[i] / den
                if 0.0 < t < 1.0:
                    bp[nb] = t
                    nb += 1
    if kind == KIND_SUP:
        for i in range(d):
            for j in range(i + 1, d):
                for si in range(2):
                    sgn = 1.0 if si == 0 else -1.0
                    num = w[i] * x[i] - sgn * w[j] * x[j]
                    den = w[i] * (y[i] - x[i]) - sgn * w[j] * (y[j] - x[j])
                    if den != 0.0:
                        t = -num / den
                        if 0.0 < t < 1.0:
                            bp[nb] = t
                            nb += 1
    # insertion sort (nb stays tiny)
    for i in range(1, nb):
        key = bp[i]
        j = i - 1
        while j >= 0 and bp[j] > key:
            bp[j + 1] = bp[j]
            j -= 1
        bp[j + 1] = key

    rough = 0.0
    for k in range(nb - 1):
        if bp[k + 1] > bp[k]:
            rough += _panel_gl(kind, p, w, gram, x, y, bp[k], bp[k + 1])
    target = abs_tol
    if rel_tol * abs(rough) > target:
        target = rel_tol * abs(rough)

    top = 0
    for k in range(nb - 1):
        if bp[k + 1] > bp[k]:
            sa[top] = bp[k]
            sb[top] = bp[k + 1]
            sd[top] = 0
            top += 1
    total = 0.0
    errtot = 0.0
    ok = True
    while top > 0:
        top -= 1
        a = sa[top]
        b = sb[top]
        dep = sd[top]
        i1 = _panel_gl(kind, p, w, gram, x, y, a, b)
        m = 0.5 * (a + b)
        i2 = (_panel_gl(kind, p, w, gram, x, y, a, m)
              + _panel_gl(kind, p, w, gram, x, y, m, b))
        e = abs(i2 - i1)
        if e <= target * (b - a) or dep >= MAX_DEPTH or top + 2 > sa.shape[0]:
            if e > target * (b - a):
                ok = False
            total += i2
            errtot += e
        else:
            sa[top] = a
            sb[top] = m
            sd[top] = dep + 1
            top += 1
            sa[top] = m
            sb[top] = b
            sd[top] = dep + 1
            top += 1
    return total, errtot, ok


@njit(cache=True)
def _hh_batch(kind, p, w, gram, X, Y, abs_tol, rel_tol):
    n = X.shape[0]
    d = X.shape[1]
    vals = np.empty(n)
    errs = np.empty(n)
    ok = np.empty(n, dtype=np.bool_)
    nbp = 2 + d + (d * (d - 1) if kind == KIND_SUP else 0)
    bp = np.empty(nbp)
    sa = np.empty(_STACK_CAP)
    sb = np.empty(_STACK_CAP)
    sd = np.empty(_STACK_CAP, dtype=np.int64)
    for r in range(n):
        v, e, okr = _hh_one(kind, p, w, gram, X[r], Y[r], abs_tol, rel_tol,
                            bp, sa, sb, sd)
        vals[r] = v
        errs[r] = e
        ok[r] = okr
    return vals, errs, ok


def hh_integral_batch(kind, p, w, gram, X, Y, abs_tol=1e-12, rel_tol=1e-10):
    """Row-wise integral of ||(1-t)x + t y||^2 over [0, 1]; see numpy_backend."""
    X = np.ascontiguousarray(X, dtype=float)
    Y = np.ascontiguousarray(Y, dtype=float)
    w = np.ascontiguousarray(w, dtype=float)
    gram = np.ascontiguousarray(gram, dtype=float)
    return _hh_batch(int(kind), float(p), w, gram, X, Y,
                     float(abs_tol), float(rel_tol))


@njit(cache=True)
def _beta_h(nx, ny, b):
    r = nx / b
    s = b * ny
    return r * r + s * s


@njit(cache=True)
def _beta_min_impl(nx, ny, expand_cap, iters):
    n = nx.shape[0]
    beta = np.empty(n)
    val = np.empty(n)
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    for r in range(n):
        a = nx[r]
        c = ny[r]
        hi = 1.0
        for _ in range(expand_cap):
            if _beta_h(a, c, 2.0 * hi) < _beta_h(a, c, hi):
                hi = 2.0 * hi
            else:
                break
        lo = 1.0
        for _ in range(expand_cap):
            if _beta_h(a, c, 0.5 * lo) < _beta_h(a, c, lo):
                lo = 0.5 * lo
            else:
                break
        lo = 0.5 * lo
        hi = 2.0 * hi
        x1 = hi - invphi * (hi - lo)
        x2 = lo + invphi * (hi - lo)
        f1 = _beta_h(a, c, x1)
        f2 = _beta_h(a, c, x2)
        for _ in range(iters):
            if f1 < f2:
                hi = x2
                x2 = x1
                f2 = f1
                x1 = hi - invphi * (hi - lo)
                f1 = _beta_h(a, c, x1)
            else:
                lo = x1
                x1 = x2
                f1 = f2
                x2 = lo + invphi * (hi - lo)
                f2 = _beta_h(a, c, x2)
        bm = 0.5 * (lo + hi)
        beta[r] = bm
        val[r] = _beta_h(a, c, bm)
    return beta, val


def beta_min_batch(nx, ny, expand_cap=200, iters=90):
    """Golden-section minimum of h(b) = (nx/b)^2 + (b*ny)^2; see numpy_backend."""
    nx = np.ascontiguousarray(nx, dtype=float)
    ny = np.ascontiguousarray(ny, dtype=float)
    return _beta_min_impl(nx, ny, int(expand_cap), int(iters))
