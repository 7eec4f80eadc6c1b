"""Linear maps between normed spaces: operator norm, co-norm, and the
quantitative conditions tying them to approximate integral orthogonality.

For inner-product-induced norms on both sides the extremal stretches are
eigenvalues: with domain Gram G1 = L L^T and codomain Gram G2,

    ||g x||^2 / ||x||^2  =  u^T S u / u^T u,   u = L^T x,
    S = L^{-1} (g^T G2 g) L^{-T},

so ||g|| = sqrt(lambda_max(S)) and [g] = sqrt(lambda_min(S)), computed here
by cyclic Jacobi rotations (dimensions stay small).  For other norms the
extremes are estimated by deterministic multi-start pattern search on the
unit sphere; the reported op_norm is then a certified lower bound and the
co_norm a certified upper bound.

``eps_star`` is the least eps with ||g||^2 <= (1+eps)/(1-eps) [g]^2, i.e.
(kappa^2 - 1)/(kappa^2 + 1) for kappa = ||g|| / [g], clamped to [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import (DEFAULT_TOL, DimensionMismatchError, InvalidSpecError,
                   Lp, NormSpec, Tolerance, as_matrix, ip_like_gram,
                   norm_batch, require_spec, spec_to_json, INF)
from .integrals import hh_values
from .solvers import golden_min, hh_orthogonal_in_pencil


@dataclass(frozen=True)
class LinearMap:
    matrix: np.ndarray = field(compare=False)
    domain_spec: NormSpec = None
    codomain_spec: NormSpec = None

    def __post_init__(self):
        g = as_matrix(self.matrix)
        object.__setattr__(self, "matrix", g)
        m, n = g.shape
        require_spec(self.domain_spec, n)
        require_spec(self.codomain_spec, m)

    @property
    def shape(self):
        return self.matrix.shape

    def to_dict(self) -> dict:
        return {"matrix": self.matrix.tolist(),
                "domain": spec_to_json(self.domain_spec),
                "codomain": spec_to_json(self.codomain_spec)}


@dataclass
class MapProfile:
    op_norm: float
    co_norm: float
    kappa: float
    eps_star: float
    cert_max: np.ndarray
    cert_min: np.ndarray
    method: str
    unbounded: bool

    @classmethod
    def make(cls, op_norm, co_norm, cert_max, cert_min, method) -> "MapProfile":
        op_norm, co_norm = float(op_norm), float(co_norm)
        if co_norm <= 0.0:
            kappa, eps_star, unbounded = math.inf, 1.0, True
        else:
            kappa = op_norm / co_norm
            eps_star = (op_norm**2 - co_norm**2) / (op_norm**2 + co_norm**2)
            eps_star = min(max(eps_star, 0.0), 1.0)
            unbounded = False
        return cls(op_norm, co_norm, kappa, eps_star, cert_max, cert_min,
                   method, unbounded)

    def to_dict(self) -> dict:
        return {"op_norm": self.op_norm, "co_norm": self.co_norm,
                "kappa": self.kappa, "eps_star": self.eps_star,
                "cert_max": np.asarray(self.cert_max).tolist(),
                "cert_min": np.asarray(self.cert_min).tolist(),
                "method": self.method, "unbounded": self.unbounded}


# --------------------------------------------------------------------------
# Cyclic Jacobi eigensolver (symmetric, small dimensions)
# --------------------------------------------------------------------------

def jacobi_eigh(S, tol: float = 1e-14, max_sweeps: int = 50):
    """Eigenvalues (ascending) and orthonormal eigenvector columns of a
    symmetric matrix via cyclic Jacobi rotations."""
    a = np.array(S, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatchError("jacobi_eigh needs a square matrix")
    v = np.eye(n)
    if n == 1:
        return a[0, :1].copy(), v
    scale = max(float(np.linalg.norm(a)), 1e-300)
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, float((a * a).sum() - (np.diag(a) ** 2).sum())))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300 * scale:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    evals = np.diag(a).copy()
    order = np.argsort(evals, kind="stable")
    return evals[order], v[:, order]


# --------------------------------------------------------------------------
# Profiles
# --------------------------------------------------------------------------

def _unit_rows(spec, V):
    n = norm_batch(spec, V)
    good = n > 0.0
    return V[good] / n[good][:, None]


def _pattern_search_extreme(m: LinearMap, maximize: bool, n_starts: int,
                            seed: int):
    """Deterministic multi-start pattern search of ||g z|| over the domain
    unit sphere.  Starts are merged by (value, start index)."""
    g = m.matrix
    dom, cod = m.domain_spec, m.codomain_spec
    n = g.shape[1]
    rng = np.random.default_rng(seed)
    starts = [v for v in np.eye(n)] + [v for v in -np.eye(n)]
    starts += list(rng.normal(size=(max(0, n_starts - len(starts)), n)))
    sign = 1.0 if maximize else -1.0

    def ratio(z):
        nz = norm_batch(dom, z[None, :])[0]
        if nz == 0.0:
            return -math.inf
        return sign * norm_batch(cod, (g @ z)[None, :])[0] / nz

    best_val, best_idx, best_z = -math.inf, -1, None
    for idx, z0 in enumerate(starts[:max(n_starts, 2 * n)]):
        z = np.asarray(z0, dtype=float)
        nz = norm_batch(dom, z[None, :])[0]
        if nz == 0.0:
            continue
        z = z / nz
        val = ratio(z)
        step = 0.5
        while step > 1e-8:
            improved = False
            for i in range(n):
                for s in (step, -step):
                    z2 = z.copy()
                    z2[i] += s
                    v2 = ratio(z2)
                    if v2 > val:
                        z, val = z2 / norm_batch(dom, z2[None, :])[0], v2
                        improved = True
            if not improved:
                step *= 0.5
        if (val, -idx) > (best_val, -best_idx):
            best_val, best_idx, best_z = val, idx, z
    return sign * best_val, best_z


def profile(m: LinearMap, n_starts: int = 64, seed: int = 0) -> MapProfile:
    """Operator norm, co-norm, condition number, eps_star, and certificates.

    Exact (Jacobi spectrum) when both norms are inner-product induced;
    otherwise a multi-start estimate whose op_norm is a lower bound and
    co_norm an upper bound.
    """
    g = m.matrix
    mdim, ndim = g.shape
    gd = ip_like_gram(m.domain_spec, ndim)
    gc = ip_like_gram(m.codomain_spec, mdim)
    if gd is not None and gc is not None:
        chol = np.linalg.cholesky(gd)
        b = g.T @ gc @ g
        s = np.linalg.solve(chol, np.linalg.solve(chol, b.T).T)
        evals, evecs = jacobi_eigh(s)
        evals = np.maximum(evals, 0.0)
        x_min = np.linalg.solve(chol.T, evecs[:, 0])
        x_max = np.linalg.solve(chol.T, evecs[:, -1])
        for x in (x_min, x_max):
            x /= norm_batch(m.domain_spec, x[None, :])[0]
        return MapProfile.make(math.sqrt(evals[-1]), math.sqrt(evals[0]),
                               x_max, x_min, "exact-ip")
    hi, z_hi = _pattern_search_extreme(m, True, n_starts, seed)
    lo, z_lo = _pattern_search_extreme(m, False, n_starts, seed + 1)
    return MapProfile.make(hi, lo, z_hi, z_lo, "estimated")


# --------------------------------------------------------------------------
# Conditions
# --------------------------------------------------------------------------

@dataclass
class ConditionReport:
    condition: str
    eps: float
    passes: bool
    n_samples: int
    worst_margin: float
    witness: list
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"condition": self.condition, "eps": self.eps,
                "passes": self.passes, "n_samples": self.n_samples,
                "worst_margin": self.worst_margin, "witness": self.witness,
                "details": self.details}


def _unit_samples(m: LinearMap, prof: MapProfile, n_samples: int, seed):
    """Domain-unit sample block: certificates, axes, then random rows."""
    n = m.shape[1]
    rng = np.random.default_rng(seed)
    V = np.vstack([prof.cert_max[None, :], prof.cert_min[None, :], np.eye(n),
                   rng.normal(size=(max(0, n_samples - n - 2), n))])
    return _unit_rows(m.domain_spec, V)


def check_bounds_12(m: LinearMap, eps: float, n_samples: int = 512,
                    seed: int = 0, tol: Tolerance = DEFAULT_TOL) -> ConditionReport:
    """Sample the two-sided bound
    (1-eps)/(1+eps) ||g||^2 ||x||^2 <= ||g x||^2 <= (1+eps)/(1-eps) [g]^2 ||x||^2."""
    if not 0.0 <= eps < 1.0:
        raise InvalidSpecError(f"epsilon must lie in [0, 1), got {eps}")
    prof = profile(m)
    U = _unit_samples(m, prof, n_samples, seed)
    r = norm_batch(m.codomain_spec, U @ m.matrix.T) ** 2
    lo = (1.0 - eps) / (1.0 + eps) * prof.op_norm**2
    hi = (1.0 + eps) / (1.0 - eps) * prof.co_norm**2
    margins = np.minimum(r - lo, hi - r)
    worst = int(np.argmin(margins))
    slack = tol.threshold(prof.op_norm**2)
    return ConditionReport(
        "bounds_12", eps, bool(margins[worst] >= -slack), U.shape[0],
        float(margins[worst]), U[worst].tolist(),
        {"lower_bound": lo, "upper_bound": hi, "op_norm": prof.op_norm,
         "co_norm": prof.co_norm, "eps_star": prof.eps_star})


def check_condition_17(m: LinearMap, eps: float, n_samples: int = 512,
                       seed: int = 0, tol: Tolerance = DEFAULT_TOL) -> ConditionReport:
    """Sample ||g x||^2 ||y||^2 <= (1+eps)/(1-eps) ||g y||^2 ||x||^2 over pairs.

    On unit vectors the worst pair is (argmax ||g x||, argmin ||g y||), so the
    sampled worst ratio doubles as an estimate of kappa^2."""
    if not 0.0 <= eps < 1.0:
        raise InvalidSpecError(f"epsilon must lie in [0, 1), got {eps}")
    prof = profile(m)
    U = _unit_samples(m, prof, n_samples, seed)
    r = norm_batch(m.codomain_spec, U @ m.matrix.T) ** 2
    i_max, i_min = int(np.argmax(r)), int(np.argmin(r))
    coef = (1.0 + eps) / (1.0 - eps)
    worst_margin = coef * r[i_min] - r[i_max]
    ratio = r[i_max] / r[i_min] if r[i_min] > 0.0 else math.inf
    slack = tol.threshold(prof.op_norm**2)
    return ConditionReport(
        "ratio_17", eps, bool(worst_margin >= -slack), U.shape[0],
        float(worst_margin), [U[i_max].tolist(), U[i_min].tolist()],
        {"worst_pair_ratio": ratio, "kappa_sq": prof.kappa**2,
         "eps_star": prof.eps_star})


def min_eps_condition_14(m: LinearMap, n_samples: int = 2048,
                         seed: int = 0) -> float:
    """sup over equal-norm pairs of |‖gx‖^2 - ‖gy‖^2| / (‖gx‖^2 + ‖gy‖^2).

    The ratio is invariant under joint scaling, so unit pairs suffice and the
    supremum is attained at the extreme stretches: exactly
    (||g||^2 - [g]^2) / (||g||^2 + [g]^2) for exact-ip maps, the sampled
    analogue otherwise."""
    prof = profile(m)
    if prof.method == "exact-ip":
        num = prof.op_norm**2 - prof.co_norm**2
        den = prof.op_norm**2 + prof.co_norm**2
        return num / den if den > 0.0 else 0.0
    U = _unit_samples(m, prof, n_samples, seed)
    r = norm_batch(m.codomain_spec, U @ m.matrix.T) ** 2
    rmax, rmin = float(r.max()), float(r.min())
    return (rmax - rmin) / (rmax + rmin) if rmax + rmin > 0.0 else 0.0


@dataclass
class EpsSearchResult:
    eps_min: float
    witness_u: np.ndarray
    witness_w: np.ndarray
    exact: bool

    def to_dict(self) -> dict:
        return {"eps_min": self.eps_min,
                "witness_u": np.asarray(self.witness_u).tolist(),
                "witness_w": np.asarray(self.witness_w).tolist(),
                "exact": self.exact}


def min_eps_condition_11(m: LinearMap, theta_grid: int = 4096,
                         search_budget: int = 2000,
                         seed: int = 0) -> EpsSearchResult:
    """Least eps such that every integral-orthogonal pair (u, w) in the
    domain maps to a pair satisfying the relative relation at eps, i.e.
    sup over such pairs of |gap(gu, gw)| / total(gu, gw).

    2-D inner-product domains (with inner-product codomains) are solved
    exactly: orthogonal pairs are a rotating frame e1(theta), e2(theta)
    scaled by (a, b), the ratio reduces to
    a b |C| / (a^2 A + b^2 B) with A = ||g e1||^2, B = ||g e2||^2,
    C = <g e1, g e2>, and optimizing the scales gives |C| / (2 sqrt(A B));
    a theta grid plus golden refinement finds the maximum.  Other cases are
    sampled via pencil roots and flagged as not exact.
    """
    g = m.matrix
    mdim, ndim = g.shape
    gd = ip_like_gram(m.domain_spec, ndim)
    gc = ip_like_gram(m.codomain_spec, mdim)
    if gd is not None and gc is not None and ndim == 2:
        chol = np.linalg.cholesky(gd)

        def frame(theta):
            c, s = np.cos(theta), np.sin(theta)
            e1 = np.linalg.solve(chol.T, np.stack([c, s]))
            e2 = np.linalg.solve(chol.T, np.stack([-s, c]))
            return e1, e2

        def ratio_of(theta):
            e1, e2 = frame(np.atleast_1d(theta))
            g1, g2 = (g @ e1).T, (g @ e2).T
            a = np.einsum("ki,ij,kj->k", g1, gc, g1)
            b = np.einsum("ki,ij,kj->k", g2, gc, g2)
            c = np.einsum("ki,ij,kj->k", g1, gc, g2)
            ab = a * b
            out = np.zeros_like(ab)
            pos = ab > 0.0
            out[pos] = np.abs(c[pos]) / (2.0 * np.sqrt(ab[pos]))
            return out

        thetas = np.linspace(0.0, math.pi, theta_grid, endpoint=False)
        vals = ratio_of(thetas)
        k = int(np.argmax(vals))
        h = math.pi / theta_grid
        t_best, neg = golden_min(lambda t: -float(ratio_of(t)[0]),
                                 thetas[k] - h, thetas[k] + h)
        eps_min = max(float(vals[k]), -neg)
        e1, e2 = frame(np.atleast_1d(t_best))
        u, w = e1[:, 0], e2[:, 0]
        g1, g2 = g @ u, g @ w
        a = float(g1 @ gc @ g1)
        b = float(g2 @ gc @ g2)
        if a > 0.0 and b > 0.0:
            w = w * math.sqrt(math.sqrt(a / b))
        return EpsSearchResult(eps_min, u, w, True)

    rng = np.random.default_rng(seed)
    best, bu, bw = 0.0, None, None
    for _ in range(search_budget):
        x = rng.normal(size=ndim)
        y = rng.normal(size=ndim) * 10.0 ** rng.uniform(-1.5, 1.5)
        if norm_batch(m.domain_spec, x[None, :])[0] == 0.0:
            continue
        try:
            root = hh_orthogonal_in_pencil(m.domain_spec, x, y)
        except RuntimeError:
            continue
        u, w = x, y + root.location * x
        v = hh_values(m.codomain_spec, g @ u, g @ w)
        if v.total <= 0.0:
            continue
        r = abs(v.gap) / v.total
        if r > best:
            best, bu, bw = r, u, w
    if bu is None:
        bu = np.zeros(ndim)
        bw = np.zeros(ndim)
    return EpsSearchResult(best, bu, bw, False)


# --------------------------------------------------------------------------
# Embedding constants between two norms
# --------------------------------------------------------------------------

def two_norm_embedding(norm1: NormSpec, norm2: NormSpec, dim: int,
                       n_starts: int = 64, seed: int = 0):
    """Tightest (m, M) with m ||x||_1 <= ||x||_2 <= M ||x||_1.

    Analytic for plain Lp/Lq pairs, exact (Jacobi) for inner-product pairs,
    multi-start estimates otherwise.
    """
    require_spec(norm1, dim)
    require_spec(norm2, dim)
    if isinstance(norm1, Lp) and isinstance(norm2, Lp):
        inv1 = 0.0 if norm1.p == INF else 1.0 / norm1.p
        inv2 = 0.0 if norm2.p == INF else 1.0 / norm2.p
        if inv2 <= inv1:  # p2 >= p1: ||x||_p2 <= ||x||_p1
            return float(dim ** (inv2 - inv1)), 1.0
        return 1.0, float(dim ** (inv2 - inv1))
    g1 = ip_like_gram(norm1, dim)
    g2 = ip_like_gram(norm2, dim)
    if g1 is not None and g2 is not None:
        chol = np.linalg.cholesky(g1)
        s = np.linalg.solve(chol, np.linalg.solve(chol, g2.T).T)
        evals, _ = jacobi_eigh(s)
        evals = np.maximum(evals, 0.0)
        return float(math.sqrt(evals[0])), float(math.sqrt(evals[-1]))
    lo_map = LinearMap(np.eye(dim), norm1, norm2)
    hi, _ = _pattern_search_extreme(lo_map, True, n_starts, seed)
    lo, _ = _pattern_search_extreme(lo_map, False, n_starts, seed + 1)
    return float(lo), float(hi)
