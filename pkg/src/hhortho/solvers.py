"""One-dimensional minimization and root finding over norm pencils.

* ``golden_min``               -- golden-section search on a unimodal function
* ``minimize_norm_on_line``    -- min_t ||x + t y|| (the Birkhoff infimum)
* ``hh_orthogonal_in_pencil``  -- the shift s making y + s x integral-orthogonal to x
* ``beta_functional_min``      -- min over beta != 0 of ||x/beta||^2 + ||beta y||^2
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DEFAULT_TOL, NormSpec, Tolerance, as_vector, norm, require_spec
from .integrals import hh_values

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_min(f, a: float, b: float, iters: int = 200,
               width_frac: float = 1e-14):
    """Golden-section minimum of a unimodal f on [a, b].

    Runs a fixed budget: `iters` shrink steps or until the interval is
    narrower than ``width_frac`` times the initial bracket, whichever comes
    first.  Returns the best evaluated point (endpoints included), so flat
    regions still yield a valid minimizer.
    """
    width0 = b - a
    if width0 <= 0.0:
        return a, f(a)
    best_t, best_f = a, f(a)
    fb = f(b)
    if fb < best_f:
        best_t, best_f = b, fb
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if b - a < width_frac * width0:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    for t, ft in ((c, fc), (d, fd)):
        if ft < best_f:
            best_t, best_f = t, ft
    mid = 0.5 * (a + b)
    fm = f(mid)
    if fm < best_f:
        best_t, best_f = mid, fm
    return best_t, best_f


def minimize_norm_on_line(spec: NormSpec, x, y, tol: Tolerance = DEFAULT_TOL):
    """(t*, min_t ||x + t y||) for nonzero y.

    ||x + t y|| is convex in t and exceeds ||x|| outside
    |t| <= 2 ||x|| / ||y||, so the golden search is bracketed there.  The
    reported value never exceeds ||x|| (t = 0 is always feasible); in flat
    regions any minimizer may be returned.
    """
    x = as_vector(x)
    y = as_vector(y, x.size)
    require_spec(spec, x.size)
    ny = norm(spec, y)
    if ny == 0.0:
        raise ValueError("y must be nonzero")
    nx = norm(spec, x)
    if nx == 0.0:
        return 0.0, 0.0
    reach = 2.0 * nx / ny
    t_star, val = golden_min(lambda t: norm(spec, x + t * y), -reach, reach)
    if nx < val:
        t_star, val = 0.0, nx
    return t_star, val


@dataclass(frozen=True)
class RootResult:
    location: float
    residual: float
    iterations: int
    bracket: tuple[float, float]


def hh_orthogonal_in_pencil(spec: NormSpec, x, y,
                            tol: Tolerance = DEFAULT_TOL) -> RootResult:
    """Find s with I+(x, y + s x) = I-(x, y + s x) for nonzero x.

    F(s) = I+ - I- grows like (2/3) s ||x||^2 for large |s| (the s x term
    dominates both integrands), so a sign change always appears under
    geometric bracket expansion; bisection then refines until
    |F(s)| <= max(abs_tol, rel_tol * (I+ + I-)).  F may have several roots
    in exotic norms; the first bracketed one is returned.
    """
    x = as_vector(x)
    y = as_vector(y, x.size)
    require_spec(spec, x.size)
    nx = norm(spec, x)
    if nx == 0.0:
        raise ValueError("x must be nonzero")
    ny = norm(spec, y)
    inner_tol = Tolerance(tol.abs_tol * 1e-2, tol.rel_tol * 1e-2)

    def f(s):
        v = hh_values(spec, x, y + s * x, inner_tol)
        return v.gap, v.total

    def gate(total):
        return max(tol.abs_tol, tol.rel_tol * total)

    g0, tot0 = f(0.0)
    if abs(g0) <= gate(tot0):
        return RootResult(0.0, g0, 0, (0.0, 0.0))

    reach = 1.0 + 2.0 * ny / nx
    lo, hi = -reach, reach
    flo, _ = f(lo)
    fhi, _ = f(hi)
    iterations = 2
    for _ in range(60):
        if flo < 0.0 < fhi or flo > 0.0 > fhi or flo == 0.0 or fhi == 0.0:
            break
        lo *= 2.0
        hi *= 2.0
        flo, _ = f(lo)
        fhi, _ = f(hi)
        iterations += 2
    else:
        raise RuntimeError("bracket expansion exhausted without a sign change")
    if flo == 0.0:
        return RootResult(lo, 0.0, iterations, (lo, lo))
    if fhi == 0.0:
        return RootResult(hi, 0.0, iterations, (hi, hi))
    if flo > 0.0:  # orient so F(lo) < 0 < F(hi)
        lo, hi = hi, lo

    mid, fmid = lo, flo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fmid, tot = f(mid)
        iterations += 1
        if abs(fmid) <= gate(tot) or abs(hi - lo) <= 1e-15 * max(1.0, abs(mid)):
            break
        if fmid < 0.0:
            lo = mid
        else:
            hi = mid
    return RootResult(mid, fmid, iterations, (min(lo, hi), max(lo, hi)))


@dataclass(frozen=True)
class BetaMin:
    beta_star: float
    value: float
    attained: bool


def beta_functional_min(spec: NormSpec, x, y) -> BetaMin:
    """min over beta != 0 of ||x/beta||^2 + ||beta y||^2 = 2 ||x|| ||y||.

    Scalars factor out of every norm, so h(beta) = ||x||^2/beta^2 +
    beta^2 ||y||^2 and the minimum is analytic.  When exactly one of the
    norms vanishes the infimum 0 is only approached (beta to infinity or 0),
    reported with ``attained=False``.
    """
    x = as_vector(x)
    y = as_vector(y, x.size)
    require_spec(spec, x.size)
    nx, ny = norm(spec, x), norm(spec, y)
    if nx == 0.0 and ny == 0.0:
        return BetaMin(1.0, 0.0, True)
    if nx == 0.0 or ny == 0.0:
        return BetaMin(1.0, 0.0, False)
    return BetaMin(math.sqrt(nx / ny), 2.0 * nx * ny, True)
