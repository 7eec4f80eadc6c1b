"""Registry of audited statements about the integral orthogonality relations.

Each claim in the registry compiles into a deterministic sampling or search
audit.  A run reports ``confirmed`` (no violation found at the given budget),
``counterexample`` (with a self-contained witness that re-verifies from its
serialized form), or ``inconclusive``.  The harness is neutral: expected
outcomes live in the acceptance tests, not here.

Determinism: every trial's randomness derives from (seed, claim id, stream
index, block index) through SHA-256 into a PCG64 stream, in fixed-size
blocks.  Results are therefore reproducible, order-independent across
blocks, and prefix-stable when the trial budget grows.
"""

from __future__ import annotations

import hashlib
import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .core import (DEFAULT_TOL, INF, InnerProduct, InvalidSpecError, Lp,
                   NormSpec, WeightedLp, ip_like_gram, norm_batch,
                   spec_from_json, spec_to_json)
from .integrals import hh_batch
from .kernels import beta_min_batch
from .mappings import (LinearMap, check_bounds_12, min_eps_condition_11,
                       profile, two_norm_embedding)
from .relations import evaluate

_BAND = 1e-9          # relative width of the numeric neutral zone
_BLOCK = 4096         # trials per deterministic sampling block
_EPS_GRID = (0.01, 0.05, 0.1, 0.2, 0.3, 0.5, 0.8)

ALL_SPECS = ("lp:1", "lp:1.5", "lp:2", "lp:3", "lp:inf", "wlp:2", "ip")
IP_SPECS = ("lp:2", "wlp:2", "ip")


# --------------------------------------------------------------------------
# Deterministic sampling
# --------------------------------------------------------------------------

def _rng(seed: int, claim_id: str, *extra: int) -> np.random.Generator:
    digest = hashlib.sha256(claim_id.encode()).digest()
    entropy = [int(seed) & (2**63 - 1), int.from_bytes(digest[:8], "big")]
    entropy += [int(e) & (2**63 - 1) for e in extra]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def _blocks(total: int):
    index = 0
    done = 0
    while done < total:
        count = min(_BLOCK, total - done)
        yield index, count
        index += 1
        done += count


def _materialize(desc: str, dim: int, rng: np.random.Generator) -> NormSpec:
    if desc.startswith("lp:"):
        tail = desc[3:]
        return Lp(INF if tail == "inf" else float(tail))
    if desc == "wlp:2":
        return WeightedLp(2.0, np.linspace(0.5, 2.0, dim))
    if desc == "ip":
        a = rng.standard_normal((dim, dim))
        return InnerProduct(a.T @ a + 0.5 * dim * np.eye(dim))
    raise ValueError(f"unknown norm descriptor {desc!r}")


def _spec_label(spec: NormSpec) -> str:
    d = spec_to_json(spec)
    if d["kind"] == "lp":
        return f"lp:{d['p']}"
    if d["kind"] == "wlp":
        return f"wlp:{d['p']}"
    return "ip"


def sample_pairs(rng: np.random.Generator, count: int, dim: int,
                 ratio_decades: float = 2.0, joint_decades: float = 1.0):
    """Standard-normal pairs rescaled to log-uniform norm ratios (and a
    log-uniform joint scale), the regime that exposes homogeneity failures."""
    x = rng.standard_normal((count, dim))
    y = rng.standard_normal((count, dim))
    u = rng.uniform(-ratio_decades, ratio_decades, count)
    v = rng.uniform(-joint_decades, joint_decades, count)
    x *= (10.0 ** (v + 0.5 * u))[:, None]
    y *= (10.0 ** (v - 0.5 * u))[:, None]
    return x, y


def sample_eps(rng: np.random.Generator, count: int):
    """Half from the fixed grid, half uniform fill."""
    k = count // 2
    grid = np.asarray(_EPS_GRID)[rng.integers(0, len(_EPS_GRID), k)]
    fill = rng.uniform(0.001, 0.95, count - k)
    return np.concatenate([grid, fill])


def _hh_pair_arrays(spec: NormSpec, X, Y):
    """(i_plus, i_minus) rows, closed form when the norm admits one."""
    method = "closed" if ip_like_gram(spec, X.shape[1]) is not None else "quadrature"
    i_plus, i_minus, _ = hh_batch(spec, X, Y, method=method)
    return i_plus, i_minus


# --------------------------------------------------------------------------
# Claim specs and reports
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Universe:
    dims: tuple = (2, 3, 4)
    norm_specs: tuple = ALL_SPECS
    eps_grid: tuple = _EPS_GRID

    def to_dict(self) -> dict:
        return {"dims": list(self.dims), "norm_specs": list(self.norm_specs),
                "eps_grid": list(self.eps_grid)}


@dataclass(frozen=True)
class ClaimSpec:
    id: str
    statement: str
    universe: Universe
    trials: int
    seed: int
    mode: str  # sample | optimize | both

    def to_dict(self) -> dict:
        return {"id": self.id, "statement": self.statement,
                "universe": self.universe.to_dict(), "trials": self.trials,
                "seed": self.seed, "mode": self.mode}


@dataclass
class ClaimReport:
    id: str
    status: str  # confirmed | counterexample | inconclusive
    trials_run: int
    violations: int
    worst_witness: dict | None
    elapsed: float
    seed: int
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"id": self.id, "status": self.status,
                "trials_run": self.trials_run, "violations": self.violations,
                "worst_witness": self.worst_witness, "elapsed": self.elapsed,
                "seed": self.seed, "details": self.details}

    @classmethod
    def from_dict(cls, d: dict) -> "ClaimReport":
        return cls(d["id"], d["status"], d["trials_run"], d["violations"],
                   d["worst_witness"], d["elapsed"], d["seed"],
                   d.get("details", {}))


# --------------------------------------------------------------------------
# Witness re-verification (fresh scalar evaluation from serialized form)
# --------------------------------------------------------------------------

def reverify_witness(witness: dict) -> dict:
    """Recompute the witness margins from scratch; interpret the result with
    :func:`witness_violates`."""
    kind = witness["kind"]
    if kind in ("implication", "homogeneity", "symmetry", "norm_transfer"):
        pv, cv = _witness_verdicts(witness)
        return {"premise_margin": pv.margin, "premise_holds": pv.holds,
                "conclusion_margin": cv.margin, "conclusion_holds": cv.holds}
    if kind == "map_eps_gap":
        m = _witness_map(witness)
        e11 = min_eps_condition_11(m).eps_min
        prof = profile(m)
        rep = check_bounds_12(m, witness["eps"])
        return {"eps11": e11, "eps_star": prof.eps_star,
                "bound12_worst_margin": rep.worst_margin,
                "bound12_passes": rep.passes}
    if kind == "map_transfer":
        m = _witness_map(witness)
        prof = profile(m)
        u, w = witness["u"], witness["w"]
        pv = evaluate("hh_exact", m.domain_spec, u, w)
        gu = m.matrix @ np.asarray(u, dtype=float)
        gw = m.matrix @ np.asarray(w, dtype=float)
        cv = evaluate("hh_relative", m.codomain_spec, gu, gw, witness["eps"])
        return {"eps_star": prof.eps_star,
                "premise_margin": pv.margin, "premise_holds": pv.holds,
                "conclusion_margin": cv.margin, "conclusion_holds": cv.holds}
    if kind == "beta_min":
        spec = spec_from_json(witness["spec"])
        x = np.asarray(witness["x"], dtype=float)
        y = np.asarray(witness["y"], dtype=float)
        nx = norm_batch(spec, x[None, :])
        ny = norm_batch(spec, y[None, :])
        _, val = beta_min_batch(nx, ny)
        return {"numeric": float(val[0]), "analytic": float(2.0 * nx[0] * ny[0])}
    raise ValueError(f"unknown witness kind {kind!r}")


def _witness_verdicts(witness: dict):
    kind = witness["kind"]
    if kind == "implication":
        spec = spec_from_json(witness["spec"])
        x, y = witness["x"], witness["y"]
        pv = evaluate(witness["premise"]["relation"], spec, x, y,
                      witness["premise"].get("eps"))
        cv = evaluate(witness["conclusion"]["relation"], spec, x, y,
                      witness["conclusion"].get("eps"))
        return pv, cv
    if kind == "homogeneity":
        spec = spec_from_json(witness["spec"])
        x = np.asarray(witness["x"], dtype=float)
        y = np.asarray(witness["y"], dtype=float)
        pv = evaluate(witness["relation"], spec, x, y, witness["eps"])
        cv = evaluate(witness["relation"], spec, witness["alpha"] * x,
                      witness["beta"] * y, witness["eps"])
        return pv, cv
    if kind == "symmetry":
        spec = spec_from_json(witness["spec"])
        x, y = witness["x"], witness["y"]
        pv = evaluate(witness["relation"], spec, x, y, witness.get("eps"))
        cv = evaluate(witness["relation"], spec, y, x, witness.get("eps"))
        return pv, cv
    if kind == "norm_transfer":
        spec1 = spec_from_json(witness["spec1"])
        spec2 = spec_from_json(witness["spec2"])
        x, y = witness["x"], witness["y"]
        pv = evaluate("hh_exact", spec1, x, y)
        if witness["eta"] == 0.0:
            cv = evaluate("hh_exact", spec2, x, y)
        else:
            cv = evaluate("hh_relative", spec2, x, y, witness["eta"])
        return pv, cv
    raise ValueError(kind)


def _witness_map(witness: dict) -> LinearMap:
    return LinearMap(np.asarray(witness["map"]["matrix"], dtype=float),
                     spec_from_json(witness["map"]["domain"]),
                     spec_from_json(witness["map"]["codomain"]))


def witness_violates(witness: dict, margins: dict) -> bool:
    kind = witness["kind"]
    if kind in ("implication", "homogeneity", "norm_transfer", "map_transfer"):
        return margins["premise_holds"] and not margins["conclusion_holds"]
    if kind == "symmetry":
        return margins["premise_holds"] != margins["conclusion_holds"]
    if kind == "map_eps_gap":
        return (margins["eps11"] <= witness["eps"]
                and witness["eps"] < margins["eps_star"]
                and not margins["bound12_passes"])
    if kind == "beta_min":
        denom = max(abs(margins["analytic"]), 1e-300)
        return abs(margins["numeric"] - margins["analytic"]) / denom > 1e-8
    raise ValueError(f"unknown witness kind {kind!r}")


# --------------------------------------------------------------------------
# Shared audit pieces
# --------------------------------------------------------------------------

def _spec_cycle(cs: ClaimSpec, descriptors):
    """Even split of the trial budget across norm descriptors."""
    per = -(-cs.trials // len(descriptors))
    for si, desc in enumerate(descriptors):
        yield si, desc, per


def _closed_margin(relation: str, eps, nx2, ny2, ip):
    """Vectorized margin of an inner-product-space relation, mirroring the
    scalar predicates; returns (margin, comparison scale)."""
    i_plus = (nx2 + ny2 + ip) / 3.0
    i_minus = (nx2 + ny2 - ip) / 3.0
    gap = i_plus - i_minus
    total = i_plus + i_minus
    if relation == "hh_relative":
        return eps * total - np.abs(gap), total
    nx = np.sqrt(np.maximum(nx2, 0.0))
    ny = np.sqrt(np.maximum(ny2, 0.0))
    if relation == "hh_absolute":
        return (2.0 / 3.0) * eps * nx * ny - np.abs(gap), total
    if relation == "eps_inner":
        return eps * nx * ny - np.abs(ip), nx2 + ny2
    raise ValueError(relation)


def _pair_margin_arrays(relation: str, spec, X, Y, eps):
    """Vectorized margins mirroring the scalar predicates (closed form when
    available, quadrature otherwise); returns (margin, comparison scale)."""
    i_plus, i_minus = _hh_pair_arrays(spec, X, Y)
    gap = i_plus - i_minus
    total = i_plus + i_minus
    if relation == "hh_relative":
        return eps * total - np.abs(gap), total
    if relation == "hh_absolute":
        nx = norm_batch(spec, X)
        ny = norm_batch(spec, Y)
        return (2.0 / 3.0) * eps * nx * ny - np.abs(gap), total
    raise ValueError(relation)


def _gram_quads(g, X, Y):
    nx2 = np.einsum("ni,ij,nj->n", X, g, X)
    ny2 = np.einsum("ni,ij,nj->n", Y, g, Y)
    ip = np.einsum("ni,ij,nj->n", X, g, Y)
    return nx2, ny2, ip


def _constructed_pairs(rng, gram, count, dim, cos_limit):
    """Pairs whose Gram-angle cosine is bounded by cos_limit row-wise, with
    log-uniform scales (premise-true construction)."""
    chol = np.linalg.cholesky(gram)
    u = rng.standard_normal((count, dim))
    v = rng.standard_normal((count, dim))
    u /= np.linalg.norm(u, axis=1)[:, None]
    v -= (v * u).sum(1)[:, None] * u
    v /= np.linalg.norm(v, axis=1)[:, None]
    c = cos_limit * rng.uniform(0.0, 1.0, count) * rng.choice([-1.0, 1.0], count)
    s = np.sqrt(np.maximum(0.0, 1.0 - c * c))
    w = c[:, None] * u + s[:, None] * v
    sx = 10.0 ** rng.uniform(-1.5, 1.5, count)
    sy = 10.0 ** rng.uniform(-1.5, 1.5, count)
    x = np.linalg.solve(chol.T, (sx[:, None] * u).T).T
    y = np.linalg.solve(chol.T, (sy[:, None] * w).T).T
    return x, y


def _orthogonal_pairs(rng, gram, count, dim):
    """Gram-orthogonal pairs with log-uniform scales."""
    return _constructed_pairs(rng, gram, count, dim, np.zeros(count))


def _best_index(score: np.ndarray, mask: np.ndarray):
    if not mask.any():
        return None
    return int(np.argmax(np.where(mask, score, -np.inf)))


class _Tracker:
    """Accumulates violations and the strongest witness across blocks."""

    def __init__(self):
        self.violations = 0
        self.trials = 0
        self.best_score = -math.inf
        self.witness = None

    def update(self, n_trials, viol_mask, score, witness_factory):
        self.trials += int(n_trials)
        self.violations += int(viol_mask.sum())
        idx = _best_index(score, viol_mask)
        if idx is not None and score[idx] > self.best_score:
            self.best_score = float(score[idx])
            self.witness = witness_factory(idx)


def _implication_witness(spec, x, y, premise, conclusion):
    return {"kind": "implication", "spec": spec_to_json(spec),
            "x": np.asarray(x).tolist(), "y": np.asarray(y).tolist(),
            "premise": premise, "conclusion": conclusion}


# --------------------------------------------------------------------------
# Claim runners
# --------------------------------------------------------------------------

def _run_symmetry(cs: ClaimSpec) -> dict:
    tr = _Tracker()
    worst_discrepancy = 0.0
    for si, desc, per in _spec_cycle(cs, cs.universe.norm_specs):
        for bi, cnt in _blocks(per):
            rng = _rng(cs.seed, cs.id, si, bi)
            dim = cs.universe.dims[(si + bi) % len(cs.universe.dims)]
            spec = _materialize(desc, dim, rng)
            X, Y = sample_pairs(rng, cnt, dim)
            eps = sample_eps(rng, cnt)
            ip_xy, im_xy = _hh_pair_arrays(spec, X, Y)
            ip_yx, im_yx = _hh_pair_arrays(spec, Y, X)
            nxny = norm_batch(spec, X) * norm_batch(spec, Y)
            for relation in ("hh_relative", "hh_absolute"):
                if relation == "hh_relative":
                    m_xy = eps * (ip_xy + im_xy) - np.abs(ip_xy - im_xy)
                    m_yx = eps * (ip_yx + im_yx) - np.abs(ip_yx - im_yx)
                else:
                    m_xy = (2.0 / 3.0) * eps * nxny - np.abs(ip_xy - im_xy)
                    m_yx = (2.0 / 3.0) * eps * nxny - np.abs(ip_yx - im_yx)
                tot = ip_xy + im_xy
                band = _BAND * np.maximum(tot, 1e-300)
                flip = (m_xy >= 0.0) != (m_yx >= 0.0)
                viol = flip & (np.abs(m_xy) > band) & (np.abs(m_yx) > band)
                rel_disc = np.abs(m_xy - m_yx) / np.maximum(tot, 1e-300)
                worst_discrepancy = max(worst_discrepancy,
                                        float(rel_disc.max()))

                def mk(i, relation=relation, spec=spec, X=X, Y=Y, eps=eps):
                    return {"kind": "symmetry", "spec": spec_to_json(spec),
                            "relation": relation, "eps": float(eps[i]),
                            "x": X[i].tolist(), "y": Y[i].tolist()}

                tr.update(0, viol, np.abs(m_xy - m_yx), mk)
            tr.trials += cnt
    status = "confirmed" if tr.violations == 0 else "counterexample"
    return {"status": status, "violations": tr.violations,
            "trials_run": tr.trials, "worst_witness": tr.witness,
            "details": {"max_rel_margin_discrepancy": worst_discrepancy}}


def _run_homogeneity(cs: ClaimSpec, relation: str,
                     explore_specs: tuple = ()) -> dict:
    """Homogeneity audit over the claim universe; ``explore_specs`` adds an
    out-of-scope scan whose findings go to the details only (the registered
    claim lives in inner-product spaces)."""
    tr = _Tracker()
    by_spec = {}
    for si, desc, per in _spec_cycle(cs, cs.universe.norm_specs):
        found = 0
        for bi, cnt in _blocks(per):
            rng = _rng(cs.seed, cs.id, si, bi)
            dim = cs.universe.dims[(si + bi) % len(cs.universe.dims)]
            spec = _materialize(desc, dim, rng)
            X, Y = sample_pairs(rng, cnt, dim)
            eps = sample_eps(rng, cnt)
            alpha = (10.0 ** rng.uniform(-2.0, 2.0, cnt)
                     * rng.choice([-1.0, 1.0], cnt))
            beta = (10.0 ** rng.uniform(-2.0, 2.0, cnt)
                    * rng.choice([-1.0, 1.0], cnt))
            m0, tot0 = _pair_margin_arrays(relation, spec, X, Y, eps)
            m1, tot1 = _pair_margin_arrays(relation, spec,
                                           X * alpha[:, None],
                                           Y * beta[:, None], eps)
            band0 = _BAND * np.maximum(tot0, 1e-300)
            band1 = _BAND * np.maximum(tot1, 1e-300)
            viol = (m0 >= band0) & (m1 < -band1)
            found += int(viol.sum())
            score = np.minimum(m0 / np.maximum(tot0, 1e-300),
                               -m1 / np.maximum(tot1, 1e-300))

            def mk(i, spec=spec, X=X, Y=Y, eps=eps, alpha=alpha, beta=beta):
                return {"kind": "homogeneity", "spec": spec_to_json(spec),
                        "relation": relation, "eps": float(eps[i]),
                        "x": X[i].tolist(), "y": Y[i].tolist(),
                        "alpha": float(alpha[i]), "beta": float(beta[i])}

            tr.update(cnt, viol, score, mk)
        by_spec[desc] = found
    details = {"violations_by_spec": by_spec}
    if explore_specs:
        details["outside_scope_scan"] = _scan_homogeneity_outside(
            cs, relation, explore_specs)
    status = "confirmed" if tr.violations == 0 else "counterexample"
    return {"status": status, "violations": tr.violations,
            "trials_run": tr.trials, "worst_witness": tr.witness,
            "details": details}


def _scan_homogeneity_outside(cs: ClaimSpec, relation: str, descs) -> dict:
    """Report-only homogeneity scan over norms outside the claim's
    inner-product scope; any example found is re-verified before reporting."""
    per = min(8192, max(1024, cs.trials // 10))
    out = {}
    for si, desc in enumerate(descs):
        rng = _rng(cs.seed, cs.id, 1000 + si)
        dim = cs.universe.dims[si % len(cs.universe.dims)]
        spec = _materialize(desc, dim, rng)
        X, Y = sample_pairs(rng, per, dim)
        eps = sample_eps(rng, per)
        alpha = (10.0 ** rng.uniform(-2.0, 2.0, per)
                 * rng.choice([-1.0, 1.0], per))
        beta = (10.0 ** rng.uniform(-2.0, 2.0, per)
                * rng.choice([-1.0, 1.0], per))
        m0, tot0 = _pair_margin_arrays(relation, spec, X, Y, eps)
        m1, tot1 = _pair_margin_arrays(relation, spec, X * alpha[:, None],
                                       Y * beta[:, None], eps)
        viol = ((m0 >= _BAND * np.maximum(tot0, 1e-300))
                & (m1 < -_BAND * np.maximum(tot1, 1e-300)))
        entry = {"trials": per, "violations": int(viol.sum())}
        idx = _best_index(np.minimum(m0 / np.maximum(tot0, 1e-300),
                                     -m1 / np.maximum(tot1, 1e-300)), viol)
        if idx is not None:
            example = {"kind": "homogeneity", "spec": spec_to_json(spec),
                       "relation": relation, "eps": float(eps[idx]),
                       "x": X[idx].tolist(), "y": Y[idx].tolist(),
                       "alpha": float(alpha[idx]), "beta": float(beta[idx])}
            margins = reverify_witness(example)
            if witness_violates(example, margins):
                example["margins"] = margins
                entry["example"] = example
        out[desc] = entry
    return out


def _run_ip_equivalence(cs: ClaimSpec, damped: bool) -> dict:
    """C4: absolute relation vs eps-inner at the same eps.
    C5 (damped=True): relative relation at eps vs the energy threshold
    eps/(1+eps^2), which is exactly the relative relation's own threshold
    taken at the damped epsilon; the undamped threshold is scored too."""
    tr = _Tracker()
    fwd = back = undamped_disagreements = 0
    for si, desc, per in _spec_cycle(cs, cs.universe.norm_specs):
        for bi, cnt in _blocks(per):
            rng = _rng(cs.seed, cs.id, si, bi)
            dim = cs.universe.dims[(si + bi) % len(cs.universe.dims)]
            spec = _materialize(desc, dim, rng)
            g = ip_like_gram(spec, dim)
            X, Y = sample_pairs(rng, cnt, dim)
            eps = sample_eps(rng, cnt)
            nx2, ny2, ip = _gram_quads(g, X, Y)
            if damped:
                m_a, sc_a = _closed_margin("hh_relative", eps, nx2, ny2, ip)
                e_damped = eps / (1.0 + eps * eps)
                m_b = e_damped * (nx2 + ny2) - np.abs(ip)
                sc_b = nx2 + ny2
                m_un = eps * (nx2 + ny2) - np.abs(ip)
                undamped_disagreements += int(
                    (((m_a >= 0.0) != (m_un >= 0.0))
                     & (np.abs(m_a) > _BAND * np.maximum(sc_a, 1e-300))
                     & (np.abs(m_un) > _BAND * np.maximum(sc_b, 1e-300))).sum())
                rel_a = lambda e: {"relation": "hh_relative", "eps": e}
                rel_b = lambda e: {"relation": "hh_relative",
                                   "eps": e / (1.0 + e * e)}
            else:
                m_a, sc_a = _closed_margin("hh_absolute", eps, nx2, ny2, ip)
                m_b, sc_b = _closed_margin("eps_inner", eps, nx2, ny2, ip)
                rel_a = lambda e: {"relation": "hh_absolute", "eps": e}
                rel_b = lambda e: {"relation": "eps_inner", "eps": e}
            band_a = _BAND * np.maximum(sc_a, 1e-300)
            band_b = _BAND * np.maximum(sc_b, 1e-300)
            viol_fwd = (m_a >= band_a) & (m_b < -band_b)
            viol_back = (m_b >= band_b) & (m_a < -band_a)
            fwd += int(viol_fwd.sum())
            back += int(viol_back.sum())
            viol = viol_fwd | viol_back
            score = np.where(viol_fwd,
                             np.minimum(m_a / np.maximum(sc_a, 1e-300),
                                        -m_b / np.maximum(sc_b, 1e-300)),
                             np.minimum(m_b / np.maximum(sc_b, 1e-300),
                                        -m_a / np.maximum(sc_a, 1e-300)))

            def mk(i, spec=spec, X=X, Y=Y, eps=eps, viol_fwd=viol_fwd,
                   rel_a=rel_a, rel_b=rel_b):
                e = float(eps[i])
                first, second = ((rel_a(e), rel_b(e)) if viol_fwd[i]
                                 else (rel_b(e), rel_a(e)))
                return _implication_witness(spec, X[i], Y[i], first, second)

            tr.update(cnt, viol, score, mk)
    status = "confirmed" if tr.violations == 0 else "counterexample"
    details = {"forward_violations": fwd, "backward_violations": back}
    if damped:
        details["undamped_threshold_disagreements"] = undamped_disagreements
    return {"status": status, "violations": tr.violations,
            "trials_run": tr.trials, "worst_witness": tr.witness,
            "details": details}


def _run_implication_ip(cs: ClaimSpec, premise_of, conclusion_of,
                        eps_map=None, construct_limit_of=None,
                        raw_score: bool = True) -> dict:
    """One-directional implication audit over inner-product specs.

    ``premise_of(e)`` / ``conclusion_of(e)`` return (relation, eps-array)
    pairs drawn from hh_relative / hh_absolute / eps_inner, evaluated through
    the vectorized closed forms.  ``eps_map`` reshapes the sampled epsilon
    into the claim's admissible range.  When ``construct_limit_of`` gives a
    |cos| ceiling, half of each block is constructed premise-true.
    """
    tr = _Tracker()
    premise_hits = 0
    for si, desc, per in _spec_cycle(cs, cs.universe.norm_specs):
        for bi, cnt in _blocks(per):
            rng = _rng(cs.seed, cs.id, si, bi)
            dim = cs.universe.dims[(si + bi) % len(cs.universe.dims)]
            spec = _materialize(desc, dim, rng)
            g = ip_like_gram(spec, dim)
            X, Y = sample_pairs(rng, cnt, dim)
            eps = sample_eps(rng, cnt)
            if eps_map is not None:
                eps = eps_map(eps)
            if construct_limit_of is not None:
                k = cnt // 2
                limit = np.minimum(construct_limit_of(eps[:k]), 1.0)
                X[:k], Y[:k] = _constructed_pairs(rng, g, k, dim, limit)
            nx2, ny2, ip = _gram_quads(g, X, Y)
            p_rel, p_eps = premise_of(eps)
            c_rel, c_eps = conclusion_of(eps)
            m_p, sc_p = _closed_margin(p_rel, p_eps, nx2, ny2, ip)
            m_c, sc_c = _closed_margin(c_rel, c_eps, nx2, ny2, ip)
            band_c = _BAND * np.maximum(sc_c, 1e-300)
            hold_p = m_p >= 0.0
            premise_hits += int(hold_p.sum())
            viol = hold_p & (m_c < -band_c)
            if raw_score:
                score = np.minimum(m_p, -m_c)
            else:
                score = np.minimum(m_p / np.maximum(sc_p, 1e-300),
                                   -m_c / np.maximum(sc_c, 1e-300))

            def mk(i, spec=spec, X=X, Y=Y, eps=eps):
                e = np.asarray([eps[i]])
                pr, pe = premise_of(e)
                cr, ce = conclusion_of(e)
                return _implication_witness(
                    spec, X[i], Y[i],
                    {"relation": pr, "eps": float(pe[0])},
                    {"relation": cr, "eps": float(ce[0])})

            tr.update(cnt, viol, score, mk)
    status = "confirmed" if tr.violations == 0 else "counterexample"
    return {"status": status, "violations": tr.violations,
            "trials_run": tr.trials, "worst_witness": tr.witness,
            "details": {"premise_hits": premise_hits}}


def _run_map_forward(cs: ClaimSpec) -> dict:
    """Search for a map whose orthogonality-transfer threshold sits strictly
    below its two-sided-bound threshold, refuting 'transfer at eps implies
    the bounds at eps'."""
    rng = _rng(cs.seed, cs.id, 0)
    l2 = Lp(2.0)
    maps = [LinearMap(np.diag([2.0, 1.0]), l2, l2),
            LinearMap(np.diag([1.5, 1.0]), l2, l2),
            LinearMap(np.diag([3.0, 0.5]), l2, l2),
            LinearMap(np.eye(2), l2, l2)]
    for _ in range(4):
        a = rng.standard_normal((2, 2))
        if abs(np.linalg.det(a)) > 0.1:
            maps.append(LinearMap(a, l2, l2))
    a = rng.standard_normal((2, 2))
    b = rng.standard_normal((2, 2))
    c = rng.standard_normal((2, 2))
    maps.append(LinearMap(c + 2.0 * np.eye(2),
                          InnerProduct(a.T @ a + np.eye(2)),
                          InnerProduct(b.T @ b + np.eye(2))))

    theta_grid = 4096
    verify_n = 1000
    trials = 0
    thresholds = {}
    best_gap, best = 0.0, None
    for k, m in enumerate(maps):
        e11 = min_eps_condition_11(m, theta_grid=theta_grid).eps_min
        es = profile(m).eps_star
        trials += theta_grid
        thresholds[f"map_{k}"] = {"eps11": e11, "eps_star": es}
        if es - e11 > 1e-6 and es - e11 > best_gap:
            best_gap, best = es - e11, (m, e11, es)
    witness = None
    violations = 0
    if best is not None:
        m, e11, es = best
        eps_mid = 0.5 * (e11 + es)
        # premise spot check: sampled orthogonal pairs all transfer at eps_mid
        gd = ip_like_gram(m.domain_spec, m.shape[1])
        gc = ip_like_gram(m.codomain_spec, m.shape[0])
        u, w = _orthogonal_pairs(_rng(cs.seed, cs.id, 1), gd, verify_n,
                                 m.shape[1])
        gu, gw = u @ m.matrix.T, w @ m.matrix.T
        a2, b2, cc = _gram_quads(gc, gu, gw)
        ratios = np.abs(cc) / np.maximum(a2 + b2, 1e-300)
        premise_ok = bool((ratios <= eps_mid + _BAND).all())
        trials += verify_n
        rep = check_bounds_12(m, eps_mid)
        if premise_ok and not rep.passes:
            violations = 1
            witness = {"kind": "map_eps_gap", "map": m.to_dict(), "eps": eps_mid}
    status = "counterexample" if violations else "confirmed"
    return {"status": status, "violations": violations, "trials_run": trials,
            "worst_witness": witness, "details": {"thresholds": thresholds}}


def _sample_ip_map(rng, dim):
    """Random exact-profile map with moderate conditioning."""
    a = rng.standard_normal((dim, dim))
    gd = a.T @ a + 0.5 * dim * np.eye(dim)
    b = rng.standard_normal((dim, dim))
    gc = b.T @ b + 0.5 * dim * np.eye(dim)
    g = rng.standard_normal((dim, dim)) + np.eye(dim) * rng.uniform(0.5, 2.0)
    return LinearMap(g, InnerProduct(gd), InnerProduct(gc))


def _run_map_converse(cs: ClaimSpec) -> dict:
    """Two-sided bound at eps >= eps_star implies integral-orthogonal pairs
    transfer at eps; plus the eta-interpolated bound sandwich."""
    pairs_per_map = 500
    tr = _Tracker()
    eta_checks = eta_violations = skipped = 0
    k = 0
    cap = 8 * (cs.trials // pairs_per_map + 1)
    while tr.trials < cs.trials and k < cap:
        rng = _rng(cs.seed, cs.id, k)
        dim = cs.universe.dims[k % len(cs.universe.dims)]
        k += 1
        m = _sample_ip_map(rng, dim)
        prof = profile(m)
        if prof.unbounded or prof.eps_star > 0.97:
            skipped += 1
            continue
        eps = prof.eps_star + rng.uniform(0.0, 1.0) * (0.97 - prof.eps_star)
        gd = ip_like_gram(m.domain_spec, dim)
        gc = ip_like_gram(m.codomain_spec, dim)
        u, w = _orthogonal_pairs(rng, gd, pairs_per_map, dim)
        gu, gw = u @ m.matrix.T, w @ m.matrix.T
        nx2, ny2, ip = _gram_quads(gc, gu, gw)
        m_c, total = _closed_margin("hh_relative", eps, nx2, ny2, ip)
        band = _BAND * np.maximum(total, 1e-300)
        viol = m_c < -band

        def mk(i, m=m, u=u, w=w, eps=eps):
            return {"kind": "map_transfer", "map": m.to_dict(),
                    "eps": float(eps), "u": u[i].tolist(), "w": w[i].tolist()}

        tr.update(pairs_per_map, viol, -m_c, mk)
        # eta-interpolated sandwich on domain-unit rows
        un = u / norm_batch(m.domain_spec, u)[:, None]
        r = norm_batch(m.codomain_spec, un @ m.matrix.T) ** 2
        slack = _BAND * max(prof.op_norm**2, 1e-300)
        for eta in np.linspace(prof.co_norm, prof.op_norm, 5):
            lo = (1.0 - eps) / (1.0 + eps) * eta * eta
            hi = (1.0 + eps) / (1.0 - eps) * eta * eta
            eta_checks += r.size
            eta_violations += int(((r < lo - slack) | (r > hi + slack)).sum())
    violations = tr.violations + eta_violations
    status = "confirmed" if violations == 0 else "counterexample"
    return {"status": status, "violations": violations,
            "trials_run": tr.trials, "worst_witness": tr.witness,
            "details": {"eta_sandwich_checks": eta_checks,
                        "eta_sandwich_violations": eta_violations,
                        "skipped_maps": skipped}}


def _run_eps_chain(cs: ClaimSpec) -> dict:
    """eps_star consistency: the minimal eps of the two-sided bound, of the
    equal-norm comparison, and of the pairwise ratio bound coincide."""
    samples_per_map = 500
    l2 = Lp(2.0)
    fixed = [LinearMap(np.diag([2.0, 1.0]), l2, l2),
             LinearMap(np.diag([3.0, 1.0]), l2, l2),
             LinearMap(np.eye(3), l2, l2)]
    trials = violations = skipped = 0
    worst_dev = 0.0
    k = 0
    cap = 8 * (cs.trials // samples_per_map + 1)
    while trials < cs.trials and k < cap:
        rng = _rng(cs.seed, cs.id, k)
        dim = cs.universe.dims[k % len(cs.universe.dims)]
        m = fixed[k] if k < len(fixed) else _sample_ip_map(rng, dim)
        k += 1
        prof = profile(m)
        if prof.unbounded:
            skipped += 1
            continue
        n = m.shape[1]
        v = np.vstack([prof.cert_max[None, :], prof.cert_min[None, :],
                       rng.standard_normal((samples_per_map - 2, n))])
        v = v / norm_batch(m.domain_spec, v)[:, None]
        r = norm_batch(m.codomain_spec, v @ m.matrix.T) ** 2
        rmax, rmin = float(r.max()), float(r.min())
        d2, c2 = prof.op_norm**2, prof.co_norm**2
        e14 = (rmax - rmin) / (rmax + rmin)
        e12 = max((d2 - rmin) / (d2 + rmin), (rmax - c2) / (rmax + c2))
        e17 = (rmax - rmin) / (rmax + rmin)
        dev = max(abs(e14 - prof.eps_star), abs(e12 - prof.eps_star),
                  abs(e17 - prof.eps_star))
        worst_dev = max(worst_dev, dev)
        if dev > 1e-8:
            violations += 1
        trials += samples_per_map
    status = "confirmed" if violations == 0 else "counterexample"
    return {"status": status, "violations": violations, "trials_run": trials,
            "worst_witness": None,
            "details": {"max_deviation": worst_dev, "skipped_maps": skipped}}


def _run_norm_transfer(cs: ClaimSpec) -> dict:
    """Orthogonal pairs under norm 1 against the relative relation under
    norm 2 at eta = (M-m)/(M+m), and at the squared variant
    (M^2-m^2)/(M^2+m^2)."""
    combos = [(Lp(2.0), Lp(INF), 2), (Lp(2.0), Lp(1.0), 2),
              (Lp(2.0), Lp(1.0), 3),
              (Lp(2.0), WeightedLp(2.0, np.array([0.5, 2.0])), 2)]
    per = -(-cs.trials // len(combos))
    tr = _Tracker()
    by_combo = {}
    eta_sq_violations = 0
    for ci, (n1, n2, dim) in enumerate(combos):
        m_lo, m_hi = two_norm_embedding(n1, n2, dim)
        eta = (m_hi - m_lo) / (m_hi + m_lo)
        eta_sq = (m_hi**2 - m_lo**2) / (m_hi**2 + m_lo**2)
        found = 0
        max_ratio = 0.0
        for bi, cnt in _blocks(per):
            rng = _rng(cs.seed, cs.id, ci, bi)
            g1 = ip_like_gram(n1, dim)
            X, Y = _orthogonal_pairs(rng, g1, cnt, dim)
            i_plus, i_minus = _hh_pair_arrays(n2, X, Y)
            gap = i_plus - i_minus
            total = i_plus + i_minus
            band = _BAND * np.maximum(total, 1e-300)
            m_eta = eta * total - np.abs(gap)
            viol = m_eta < -band
            found += int(viol.sum())
            max_ratio = max(max_ratio, float(
                (np.abs(gap) / np.maximum(total, 1e-300)).max()))
            eta_sq_violations += int(
                (eta_sq * total - np.abs(gap) < -band).sum())

            def mk(i, n1=n1, n2=n2, X=X, Y=Y, eta=eta):
                return {"kind": "norm_transfer", "spec1": spec_to_json(n1),
                        "spec2": spec_to_json(n2), "eta": float(eta),
                        "x": X[i].tolist(), "y": Y[i].tolist()}

            tr.update(cnt, viol, -m_eta, mk)
        by_combo[f"{_spec_label(n1)}->{_spec_label(n2)}:d{dim}"] = {
            "m": m_lo, "M": m_hi, "eta": eta, "eta_squared": eta_sq,
            "eta_violations": found, "max_gap_ratio": max_ratio}
    status = "confirmed" if tr.violations == 0 else "counterexample"
    return {"status": status, "violations": tr.violations,
            "trials_run": tr.trials, "worst_witness": tr.witness,
            "details": {"combos": by_combo,
                        "eta_squared_violations": eta_sq_violations}}


def _run_beta_min(cs: ClaimSpec) -> dict:
    tr = _Tracker()
    worst_rel = 0.0
    for si, desc, per in _spec_cycle(cs, cs.universe.norm_specs):
        for bi, cnt in _blocks(per):
            rng = _rng(cs.seed, cs.id, si, bi)
            dim = cs.universe.dims[(si + bi) % len(cs.universe.dims)]
            spec = _materialize(desc, dim, rng)
            X, Y = sample_pairs(rng, cnt, dim)
            nx = norm_batch(spec, X)
            ny = norm_batch(spec, Y)
            good = (nx > 1e-12) & (ny > 1e-12)
            idx_map = np.flatnonzero(good)
            _, val = beta_min_batch(nx[good], ny[good])
            analytic = 2.0 * nx[good] * ny[good]
            rel = np.abs(val - analytic) / analytic
            if rel.size:
                worst_rel = max(worst_rel, float(rel.max()))
            viol = rel > 1e-8

            def mk(i, spec=spec, X=X, Y=Y, idx_map=idx_map):
                j = int(idx_map[i])
                return {"kind": "beta_min", "spec": spec_to_json(spec),
                        "x": X[j].tolist(), "y": Y[j].tolist()}

            tr.update(cnt, viol, rel, mk)
    status = "confirmed" if tr.violations == 0 else "counterexample"
    return {"status": status, "violations": tr.violations,
            "trials_run": tr.trials, "worst_witness": tr.witness,
            "details": {"max_rel_deviation": worst_rel}}


def _run_proportional_transfer(cs: ClaimSpec) -> dict:
    """Exact transfer to a scaled copy of the same norm, and failure of
    transfer to a non-proportional norm (both predictions audited)."""
    half = cs.trials // 2
    eta0 = 0.7
    spec1 = Lp(2.0)
    spec2 = WeightedLp(2.0, np.array([eta0**2, eta0**2]))
    spec2b = Lp(INF)
    tr = _Tracker()
    proportional_viol = 0
    for bi, cnt in _blocks(half):
        rng = _rng(cs.seed, cs.id, 0, bi)
        X, Y = _orthogonal_pairs(rng, np.eye(2), cnt, 2)
        i_plus, i_minus = _hh_pair_arrays(spec2, X, Y)
        gap = np.abs(i_plus - i_minus)
        total = i_plus + i_minus
        nx2 = norm_batch(spec2, X) ** 2
        ny2 = norm_batch(spec2, Y) ** 2
        thr = np.maximum(DEFAULT_TOL.abs_tol,
                         DEFAULT_TOL.rel_tol * np.maximum(total, nx2 + ny2))
        viol = gap > thr
        proportional_viol += int(viol.sum())

        def mk(i, X=X, Y=Y):
            return {"kind": "norm_transfer", "spec1": spec_to_json(spec1),
                    "spec2": spec_to_json(spec2), "eta": 0.0,
                    "x": X[i].tolist(), "y": Y[i].tolist()}

        tr.update(cnt, viol, gap, mk)
    max_ratio, example = 0.0, None
    for bi, cnt in _blocks(cs.trials - half):
        rng = _rng(cs.seed, cs.id, 1, bi)
        X, Y = _orthogonal_pairs(rng, np.eye(2), cnt, 2)
        i_plus, i_minus = _hh_pair_arrays(spec2b, X, Y)
        ratios = (np.abs(i_plus - i_minus)
                  / np.maximum(i_plus + i_minus, 1e-300))
        i = int(np.argmax(ratios))
        if ratios[i] > max_ratio:
            max_ratio = float(ratios[i])
            example = {"x": X[i].tolist(), "y": Y[i].tolist(),
                       "gap_ratio": max_ratio}
        tr.trials += cnt
    transfer_fails = max_ratio > 1e-3
    status = ("confirmed" if proportional_viol == 0 and transfer_fails
              else "counterexample")
    return {"status": status, "violations": tr.violations,
            "trials_run": tr.trials, "worst_witness": tr.witness,
            "details": {"proportional_violations": proportional_viol,
                        "nonproportional_failure_found": bool(transfer_fails),
                        "nonproportional_example": example}}


# --------------------------------------------------------------------------
# Registry
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class _ClaimDef:
    statement: str
    universe: Universe
    trials: int
    mode: str
    runner: object


def _eta_of(eps):
    """Numerically stable (1 - sqrt(1 - eps^2)) / eps."""
    return eps / (1.0 + np.sqrt(1.0 - eps * eps))


def _half(eps):
    return 0.5 * eps


_REGISTRY: dict[str, _ClaimDef] = {
    "C1": _ClaimDef(
        "Both approximate integral-orthogonality relations are symmetric in "
        "(x, y), in every supported norm.",
        Universe(), 100_000, "sample", _run_symmetry),
    "C2": _ClaimDef(
        "Under an inner-product norm, the absolute relation is homogeneous: "
        "if it holds for (x, y) at eps, it holds for (a x, b y) at eps for "
        "all real a, b.  (General-norm behavior is scanned report-only.)",
        Universe(norm_specs=IP_SPECS), 100_000, "sample",
        lambda cs: _run_homogeneity(cs, "hh_absolute",
                                    explore_specs=("lp:1", "lp:3", "lp:inf"))),
    "C3": _ClaimDef(
        "Under an inner-product norm, the relative relation is homogeneous: "
        "if it holds for (x, y) at eps, it holds for (a x, b y) at eps for "
        "all real a, b.",
        Universe(norm_specs=IP_SPECS), 100_000, "both",
        lambda cs: _run_homogeneity(cs, "hh_relative")),
    "C4": _ClaimDef(
        "Under an inner-product norm, the absolute relation at eps holds "
        "iff |<x,y>| <= eps ||x|| ||y||.",
        Universe(norm_specs=IP_SPECS), 100_000, "sample",
        lambda cs: _run_ip_equivalence(cs, damped=False)),
    "C5": _ClaimDef(
        "Under an inner-product norm, the relative relation at eps holds "
        "iff |<x,y>| <= eps/(1+eps^2) (||x||^2 + ||y||^2).",
        Universe(norm_specs=IP_SPECS), 100_000, "both",
        lambda cs: _run_ip_equivalence(cs, damped=True)),
    "C6": _ClaimDef(
        "If a linear map sends every integral-orthogonal pair to a pair "
        "satisfying the relative relation at eps, it satisfies the "
        "two-sided bound (1-eps)/(1+eps) ||g||^2 ||x||^2 <= ||gx||^2 <= "
        "(1+eps)/(1-eps) [g]^2 ||x||^2.",
        Universe(dims=(2,)), 60_000, "both", _run_map_forward),
    "C7": _ClaimDef(
        "Conversely, the two-sided bound at eps makes a map send "
        "integral-orthogonal pairs to relative-eps pairs, and the bound "
        "interpolates over eta in [[g], ||g||].",
        Universe(dims=(2, 3, 4, 5), norm_specs=("ip",)), 100_000, "sample",
        _run_map_converse),
    "C8": _ClaimDef(
        "The minimal eps in the two-sided bound, in the equal-norm "
        "comparison |<gx> vs <gy>| energies, and in the pairwise ratio "
        "bound all equal (kappa^2 - 1) / (kappa^2 + 1).",
        Universe(dims=(2, 3, 4, 5), norm_specs=("ip",)), 100_000, "sample",
        _run_eps_chain),
    "C9": _ClaimDef(
        "If m ||x||_1 <= ||x||_2 <= M ||x||_1, integral-orthogonal pairs "
        "under norm 1 satisfy the relative relation under norm 2 at "
        "eta = (M - m) / (M + m).",
        Universe(dims=(2, 3)), 24_000, "sample", _run_norm_transfer),
    "C10": _ClaimDef(
        "In every norm, min over beta != 0 of ||x/beta||^2 + ||beta y||^2 "
        "equals 2 ||x|| ||y||.",
        Universe(), 100_000, "sample", _run_beta_min),
    "C11-forward": _ClaimDef(
        "Under an inner-product norm, the relative relation at eps implies "
        "|<x,y>| <= 2 eps ||x|| ||y||.",
        Universe(norm_specs=IP_SPECS), 100_000, "both",
        lambda cs: _run_implication_ip(
            cs,
            premise_of=lambda e: ("hh_relative", e),
            conclusion_of=lambda e: ("eps_inner", 2.0 * e),
            eps_map=_half)),
    "C11-converse": _ClaimDef(
        "Under an inner-product norm, |<x,y>| <= 2 eps ||x|| ||y|| implies "
        "the relative relation at eps.",
        Universe(norm_specs=IP_SPECS), 100_000, "sample",
        lambda cs: _run_implication_ip(
            cs,
            premise_of=lambda e: ("eps_inner", 2.0 * e),
            conclusion_of=lambda e: ("hh_relative", e),
            eps_map=_half,
            construct_limit_of=lambda e: 2.0 * e)),
    "C12-forward": _ClaimDef(
        "Under an inner-product norm, the absolute relation at eps implies "
        "the relative relation at eta = (1 - sqrt(1 - eps^2)) / eps.",
        Universe(norm_specs=IP_SPECS), 100_000, "sample",
        lambda cs: _run_implication_ip(
            cs,
            premise_of=lambda e: ("hh_absolute", e),
            conclusion_of=lambda e: ("hh_relative", _eta_of(e)),
            construct_limit_of=lambda e: e)),
    "C12-reverse": _ClaimDef(
        "Under an inner-product norm, the relative relation at "
        "eta = (1 - sqrt(1 - eps^2)) / eps implies the absolute relation "
        "at eps.",
        Universe(norm_specs=IP_SPECS), 100_000, "both",
        lambda cs: _run_implication_ip(
            cs,
            premise_of=lambda e: ("hh_relative", _eta_of(e)),
            conclusion_of=lambda e: ("hh_absolute", e))),
    "C13": _ClaimDef(
        "Integral orthogonality transfers exactly to a scaled copy of the "
        "same norm, and fails to transfer to a non-proportional norm.",
        Universe(dims=(2,)), 20_000, "both", _run_proportional_transfer),
}


def claim_ids() -> list[str]:
    return list(_REGISTRY)


def build_spec(claim_id: str, seed: int = 0,
               trials: int | None = None) -> ClaimSpec:
    if claim_id not in _REGISTRY:
        raise KeyError(f"unknown claim id {claim_id!r}")
    d = _REGISTRY[claim_id]
    return ClaimSpec(claim_id, d.statement, d.universe,
                     trials if trials is not None else d.trials,
                     seed, d.mode)


def run_claim(spec: ClaimSpec | str, seed: int = 0,
              trials: int | None = None) -> ClaimReport:
    """Run one registered claim audit.  Deterministic given the ClaimSpec;
    counterexample witnesses are re-verified from their serialized form
    before being reported."""
    cs = spec if isinstance(spec, ClaimSpec) else build_spec(spec, seed, trials)
    t0 = time.perf_counter()
    out = _REGISTRY[cs.id].runner(cs)
    status = out["status"]
    witness = out["worst_witness"]
    details = out["details"]
    if status == "counterexample":
        if witness is None:
            status = "inconclusive"
        else:
            payload = json.loads(json.dumps(witness))  # force serialized form
            margins = reverify_witness(payload)
            if witness_violates(payload, margins):
                witness["margins"] = margins
            else:
                status = "inconclusive"
                details["reverify_failed"] = margins
    return ClaimReport(cs.id, status, out["trials_run"], out["violations"],
                       witness, time.perf_counter() - t0, cs.seed, details)


def run_claims(ids=None, seed: int = 0, trials: int | None = None):
    return [run_claim(cid, seed=seed, trials=trials)
            for cid in (ids or claim_ids())]


# --------------------------------------------------------------------------
# Generic implication falsifier
# --------------------------------------------------------------------------

def search_counterexample(premise, conclusion, universe: Universe | None = None,
                          budget: int = 2000, seed: int = 0,
                          mode: str = "both"):
    """Look for (spec, x, y) where `premise` holds and `conclusion` fails.

    ``premise`` and ``conclusion`` are (relation_id, eps-or-None) pairs.
    Returns a self-contained witness dict, or None when the budget is
    exhausted.  Sampling is sequential, so growing the budget only extends
    the search.
    """
    uni = universe or Universe(dims=(2, 3), norm_specs=IP_SPECS)
    rng = _rng(seed, f"search:{premise}->{conclusion}")
    p_rel, p_eps = premise
    c_rel, c_eps = conclusion
    best_score, best = -math.inf, None
    for i in range(budget):
        dim = uni.dims[i % len(uni.dims)]
        spec = _materialize(uni.norm_specs[i % len(uni.norm_specs)], dim, rng)
        x, y = sample_pairs(rng, 1, dim)
        x, y = x[0], y[0]
        try:
            pv = evaluate(p_rel, spec, x, y, p_eps)
            cv = evaluate(c_rel, spec, x, y, c_eps)
        except (InvalidSpecError, ValueError):
            continue
        if pv.details.get("degenerate") or cv.details.get("degenerate"):
            continue
        if pv.margin >= 0.0 and cv.margin < 0.0:
            score = min(pv.margin, -cv.margin)
            if score > best_score:
                best_score, best = score, (spec, x, y)
    if best is None:
        return None
    spec, x, y = best
    if mode in ("optimize", "both"):
        x, y = _refine_witness(p_rel, p_eps, c_rel, c_eps, spec, x, y, rng)
    w = _implication_witness(spec, x, y,
                             {"relation": p_rel, "eps": p_eps},
                             {"relation": c_rel, "eps": c_eps})
    margins = reverify_witness(w)
    if not witness_violates(w, margins):
        return None
    w["margins"] = margins
    return w


def _refine_witness(p_rel, p_eps, c_rel, c_eps, spec, x, y, rng, rounds=64):
    def score_of(xx, yy):
        try:
            pv = evaluate(p_rel, spec, xx, yy, p_eps)
            cv = evaluate(c_rel, spec, xx, yy, c_eps)
        except (InvalidSpecError, ValueError):
            return -math.inf
        if pv.margin < 0.0 or cv.margin >= 0.0:
            return -math.inf
        return min(pv.margin, -cv.margin)

    best = score_of(x, y)
    step = 0.2
    for _ in range(rounds):
        x2 = x * (1.0 + step * rng.standard_normal(x.size))
        y2 = y * (1.0 + step * rng.standard_normal(y.size))
        s2 = score_of(x2, y2)
        if s2 > best:
            x, y, best = x2, y2, s2
        else:
            step *= 0.95
    return x, y


# --------------------------------------------------------------------------
# Reporting
# --------------------------------------------------------------------------

def summary_markdown(reports) -> str:
    lines = ["| claim | status | trials | violations |",
             "|-------|--------|--------|------------|"]
    for r in reports:
        lines.append(f"| {r.id} | {r.status} | {r.trials_run} | "
                     f"{r.violations} |")
    return "\n".join(lines)
