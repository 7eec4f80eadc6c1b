"""Command-line front end.

Subcommands: ``eval`` (orthogonality verdicts), ``hh`` (the two integrals),
``solve`` (line minimum / pencil root / beta functional), ``map`` (operator
profile and condition reports), ``claims`` (the audit registry).

Exit codes: 0 success (and relation holds for ``eval``), 3 relation fails
(``eval`` only), 2 invalid input, 1 internal error.  ``ORTHO_SEED`` supplies
the default seed; ``ORTHO_BACKEND`` selects the kernel backend
(auto | numba | numpy).

Norm mini-syntax: ``lp:<p|inf>``, ``wlp:<p>:<w1,w2,...>``,
``ip:<path-to-gram-json>``.  For weighted norms, finite p weights the power
sum (sum_i w_i |v_i|^p)^(1/p); at p = inf the norm is max_i w_i |v_i| with
the weights applied linearly.  Vectors are inline JSON arrays or ``@file``
references; epsilon must lie in [0, 1).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .core import (DimensionMismatchError, InnerProduct, InvalidSpecError, Lp,
                   WeightedLp, norm, spec_from_json, spec_to_json)
from .integrals import hh_values
from .kernels import backend_name
from .mappings import (LinearMap, check_bounds_12, check_condition_17,
                       min_eps_condition_11, min_eps_condition_14, profile)
from .relations import EPS_RELATIONS, RELATION_IDS, evaluate
from .solvers import beta_functional_min, hh_orthogonal_in_pencil, \
    minimize_norm_on_line
from . import claims as claims_mod

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_FAILS = 3


class InputError(ValueError):
    """Invalid command-line input (maps to exit code 2)."""


def _parse_norm(text: str):
    parts = text.split(":")
    try:
        if parts[0] == "lp" and len(parts) == 2:
            return Lp(math.inf if parts[1] == "inf" else float(parts[1]))
        if parts[0] == "wlp" and len(parts) == 3:
            p = math.inf if parts[1] == "inf" else float(parts[1])
            weights = np.array([float(w) for w in parts[2].split(",")])
            return WeightedLp(p, weights)
        if parts[0] == "ip" and len(parts) >= 2:
            path = text.split(":", 1)[1]
            with open(path) as fh:
                return InnerProduct(np.asarray(json.load(fh), dtype=float))
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        raise InputError(f"bad norm spec {text!r}: {exc}") from exc
    raise InputError(f"bad norm spec {text!r}; use lp:<p|inf>, "
                     "wlp:<p>:<w1,...>, or ip:<gram.json>")


def _parse_vector(text: str) -> np.ndarray:
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read vector file: {exc}") from exc
    try:
        arr = np.asarray(json.loads(text), dtype=float)
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"bad vector {text!r}: expected a JSON array") from exc
    if arr.ndim != 1:
        raise InputError(f"bad vector {text!r}: expected a flat JSON array")
    return arr


def _parse_eps(text: str) -> float:
    try:
        eps = float(text)
    except ValueError as exc:
        raise InputError(f"bad epsilon {text!r}") from exc
    if not 0.0 <= eps < 1.0:
        raise InputError(f"epsilon must lie in [0, 1), got {eps}")
    return eps


def _load_matrix(path: str) -> np.ndarray:
    try:
        if path.endswith(".csv"):
            with open(path, newline="") as fh:
                rows = [[float(c) for c in row] for row in csv.reader(fh) if row]
            return np.asarray(rows, dtype=float)
        with open(path) as fh:
            return np.asarray(json.load(fh), dtype=float)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot load matrix from {path!r}: {exc}") from exc


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _default_seed() -> int:
    env = os.environ.get("ORTHO_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise InputError(f"ORTHO_SEED must be an integer, got {env!r}") from exc


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------

def _cmd_eval(args) -> int:
    spec = _parse_norm(args.norm)
    x = _parse_vector(args.x)
    y = _parse_vector(args.y)
    eps = _parse_eps(args.eps) if args.eps is not None else None
    if args.relation in EPS_RELATIONS and eps is None:
        raise InputError(f"relation {args.relation!r} requires --eps")
    try:
        verdict = evaluate(args.relation, spec, x, y, eps)
    except (InvalidSpecError, DimensionMismatchError) as exc:
        raise InputError(str(exc)) from exc
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.holds else EXIT_FAILS


def _cmd_hh(args) -> int:
    spec = _parse_norm(args.norm)
    x = _parse_vector(args.x)
    y = _parse_vector(args.y)
    try:
        values = hh_values(spec, x, y, method=args.method)
    except (InvalidSpecError, DimensionMismatchError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    _emit(values.to_dict())
    return EXIT_OK


def _cmd_solve(args) -> int:
    spec = _parse_norm(args.norm)
    x = _parse_vector(args.x)
    y = _parse_vector(args.y)
    try:
        if args.kind == "line-min":
            t_star, value = minimize_norm_on_line(spec, x, y)
            _emit({"kind": "line-min", "t_star": t_star, "value": value})
        elif args.kind == "pencil":
            r = hh_orthogonal_in_pencil(spec, x, y)
            _emit({"kind": "pencil", "location": r.location,
                   "residual": r.residual, "iterations": r.iterations,
                   "bracket": list(r.bracket)})
        else:
            b = beta_functional_min(spec, x, y)
            _emit({"kind": "beta", "beta_star": b.beta_star,
                   "value": b.value, "attained": b.attained})
    except (InvalidSpecError, DimensionMismatchError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    return EXIT_OK


def _cmd_map(args) -> int:
    matrix = _load_matrix(args.matrix)
    domain = _parse_norm(args.domain)
    codomain = _parse_norm(args.codomain)
    try:
        lm = LinearMap(matrix, domain, codomain)
    except (InvalidSpecError, DimensionMismatchError) as exc:
        raise InputError(str(exc)) from exc
    prof = profile(lm)
    out = {"profile": prof.to_dict(),
           "min_eps_condition_14": min_eps_condition_14(lm)}
    if prof.method == "exact-ip" and lm.shape[1] == 2:
        out["min_eps_condition_11"] = min_eps_condition_11(lm).to_dict()
    elif args.eps11_budget:
        out["min_eps_condition_11"] = min_eps_condition_11(
            lm, search_budget=args.eps11_budget, seed=args.seed).to_dict()
    if args.eps is not None:
        eps = _parse_eps(args.eps)
        out["bounds_12"] = check_bounds_12(lm, eps, seed=args.seed).to_dict()
        out["ratio_17"] = check_condition_17(lm, eps, seed=args.seed).to_dict()
    _emit(out)
    return EXIT_OK


def _cmd_claims(args) -> int:
    if args.action == "list":
        for cid in claims_mod.claim_ids():
            spec = claims_mod.build_spec(cid)
            print(f"{cid}: {spec.statement}")
        return EXIT_OK
    ids = claims_mod.claim_ids() if args.all else args.ids
    if not ids:
        raise InputError("claims run needs --all or explicit claim ids")
    unknown = [cid for cid in ids if cid not in claims_mod.claim_ids()]
    if unknown:
        raise InputError(f"unknown claim ids: {', '.join(unknown)}")
    reports = claims_mod.run_claims(ids, seed=args.seed, trials=args.trials)
    if args.format == "json":
        for r in reports:
            _emit(r.to_dict())
        print()
        print(claims_mod.summary_markdown(reports))
    elif args.format == "markdown":
        print(claims_mod.summary_markdown(reports))
    else:  # csv
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["id", "status", "trials_run", "violations", "seed"])
        for r in reports:
            writer.writerow([r.id, r.status, r.trials_run, r.violations,
                             r.seed])
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhortho",
        description="Integral orthogonality relations, linear-map analysis, "
                    "and the claim-audit registry.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an orthogonality relation")
    p.add_argument("relation", choices=RELATION_IDS)
    p.add_argument("--norm", default="lp:2", help="norm spec (default lp:2)")
    p.add_argument("--x", required=True, help="vector as JSON array or @file")
    p.add_argument("--y", required=True, help="vector as JSON array or @file")
    p.add_argument("--eps", default=None, help="epsilon in [0, 1)")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("hh", help="compute both integrals I+ and I-")
    p.add_argument("--norm", default="lp:2")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--method", choices=("auto", "closed", "quadrature"),
                   default="auto")
    p.set_defaults(fn=_cmd_hh)

    p = sub.add_parser("solve", help="line minimum, pencil root, or beta "
                                     "functional")
    p.add_argument("kind", choices=("line-min", "pencil", "beta"))
    p.add_argument("--norm", default="lp:2")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("map", help="profile a linear map and its conditions")
    p.add_argument("--matrix", required=True,
                   help="JSON array-of-arrays or CSV file")
    p.add_argument("--domain", default="lp:2")
    p.add_argument("--codomain", default="lp:2")
    p.add_argument("--eps", default=None,
                   help="also check the two-sided bound and ratio condition")
    p.add_argument("--eps11-budget", type=int, default=0,
                   help="sampling budget for the transfer threshold when "
                        "the exact 2-D path does not apply")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=_cmd_map)

    p = sub.add_parser("claims", help="run or list the claim registry")
    p.add_argument("action", choices=("run", "list"))
    p.add_argument("ids", nargs="*", help="claim ids (with run)")
    p.add_argument("--all", action="store_true", help="run every claim")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None,
                   help="override each claim's trial budget")
    p.add_argument("--format", choices=("json", "markdown", "csv"),
                   default="json")
    p.set_defaults(fn=_cmd_claims)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "seed", None) is None and hasattr(args, "seed"):
            args.seed = _default_seed()
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
