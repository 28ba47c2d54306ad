"""Command-line front end.

Three subcommands:

* ``eval``   -- evaluate any exposed function at a point,
* ``verify`` -- run identities from the catalog and stream reports,
* ``table``  -- sweep a function over a start:stop:count grid.

Exit codes: 0 success / all verified, 1 verification failure,
2 usage or domain error.
"""

import argparse
import csv
import io
import json
import math
import sys

from .errors import ConvergenceError, DomainError, UnknownIdentityError
from .functions import (
    EvalPolicy,
    SeriesResult,
    anger,
    cyl_j,
    delta_fn,
    humbert2,
    humbert3,
    hyp1f2,
    mod_i0,
    rayleigh_jn,
    s1,
    s2,
    sph_j,
    sph_j_deriv,
    struve_h,
    weber,
)
from .identities import catalog_json, list_identities, verify_all, verify

_REPORT_FIELDS = (
    "id",
    "params",
    "lhs",
    "rhs",
    "abs_err",
    "rel_err",
    "tol_abs",
    "tol_rel",
    "status",
    "seconds",
)

# function name -> (callable, ordered argument names)
_FUNCTIONS = {
    "sph_j": (sph_j, ("n", "x")),
    "cyl_j": (cyl_j, ("nu", "x")),
    "mod_i0": (mod_i0, ("t",)),
    "struve_h": (struve_h, ("alpha", "x")),
    "humbert2": (humbert2, ("mu", "nu", "z")),
    "humbert3": (humbert3, ("mu", "nu", "rho", "z")),
    "hyp1f2": (hyp1f2, ("gamma", "a", "b", "z")),
    "delta_fn": (delta_fn, ("alpha", "beta", "gamma", "x")),
    "s1": (s1, ("nu", "x")),
    "s2": (s2, ("nu", "x")),
    "anger": (anger, ("nu", "x")),
    "weber": (weber, ("nu", "x")),
    "sph_j_deriv": (sph_j_deriv, ("n", "x")),
    "rayleigh_jn": (rayleigh_jn, ("n", "x")),
}

_POLICY_FREE = {"rayleigh_jn"}
_INT_ARGS = {"n"}


class _UsageError(Exception):
    pass


def _read_config_file(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise _UsageError(f"config line without '=': {line!r}")
            key, val = line.split("=", 1)
            out[key.strip().replace("-", "_")] = val.strip()
    return out


def _build_policy(args):
    return EvalPolicy(
        rel_tol=args.rel_tol,
        abs_tol=args.abs_tol,
        max_terms=args.max_terms,
    )


def _apply_config_defaults(args, cfg):
    casts = {
        "rel_tol": float,
        "abs_tol": float,
        "max_terms": int,
        "parallelism": int,
        "seed": int,
        "format": str,
        "out": str,
    }
    for key, raw in cfg.items():
        if key not in casts:
            raise _UsageError(f"unknown config key {key!r}")
        if getattr(args, "_explicit", None) and key in args._explicit:
            continue  # flags override the file
        setattr(args, key, casts[key](raw))


def _emit(args, text):
    if args.out:
        with open(args.out, "a") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_eval(args):
    if args.function not in _FUNCTIONS:
        raise _UsageError(f"unknown function {args.function!r}; choose from {sorted(_FUNCTIONS)}")
    fn, names = _FUNCTIONS[args.function]
    call = []
    for name in names:
        v = getattr(args, name if name != "gamma" else "gamma_p", None)
        if v is None:
            raise _UsageError(f"{args.function} requires --{name}")
        call.append(int(v) if name in _INT_ARGS else v)
    if args.function in _POLICY_FREE:
        res = fn(*call)
    else:
        res = fn(*call, _build_policy(args))
    if isinstance(res, SeriesResult):
        value, meta = res.value, res
    else:
        value, meta = res, None
    if args.format == "json":
        rec = {"function": args.function, "args": dict(zip(names, call)), "value": value}
        if args.verbose and meta is not None:
            rec.update(
                {"path": meta.path, "terms_used": meta.terms_used, "tail_estimate": meta.tail_estimate}
            )
        _emit(args, json.dumps(rec))
    else:
        _emit(args, repr(value))
        if args.verbose and meta is not None:
            _emit(args, f"# path={meta.path} terms={meta.terms_used} tail={meta.tail_estimate:.3e}")
    return 0


def _report_record(r, iden):
    return {
        "id": r.identity_id,
        "params": r.params,
        "lhs": r.lhs,
        "rhs": r.rhs,
        "abs_err": r.abs_err,
        "rel_err": r.rel_err,
        "tol_abs": iden.tol_abs,
        "tol_rel": iden.tol_rel,
        "status": r.status,
        "seconds": round(r.seconds, 6),
    }


def _finite_or_none(x):
    return x if isinstance(x, (int, str, dict)) or math.isfinite(x) else None


def _cmd_verify(args):
    known = {i.id: i for i in list_identities()}
    if args.ids == ["all"] or args.ids == []:
        ids = sorted(known)
    else:
        ids = args.ids
        for i in ids:
            if i not in known:
                raise _UsageError(f"unknown identity id {i!r}")
    if args.list_catalog:
        _emit(args, json.dumps(catalog_json(), indent=2))
        return 0
    reports = verify_all(
        policy=_build_policy(args),
        parallelism=args.parallelism,
        ids=ids,
        seed=args.seed,
    )
    records = [_report_record(r, known[r.identity_id]) for r in reports]
    if args.format == "json":
        for rec in records:
            rec = dict(rec)
            for k in ("lhs", "rhs", "abs_err", "rel_err"):
                rec[k] = _finite_or_none(rec[k])
            rec["params"] = rec["params"]
            _emit(args, json.dumps(rec))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=_REPORT_FIELDS, lineterminator="\n")
        w.writeheader()
        for rec in records:
            rec = dict(rec)
            rec["params"] = json.dumps(rec["params"], sort_keys=True)
            w.writerow(rec)
        _emit(args, buf.getvalue().rstrip("\n"))
    else:
        for rec in records:
            _emit(
                args,
                f"{rec['id']} {json.dumps(rec['params'], sort_keys=True)}: {rec['status']}"
                f" lhs={rec['lhs']!r} rhs={rec['rhs']!r} abs={rec['abs_err']:.3e} rel={rec['rel_err']:.3e}",
            )
    n_fail = sum(1 for r in reports if r.status == "fail")
    n_skip = sum(1 for r in reports if r.status == "skipped")
    if args.format == "text":
        _emit(args, f"# {len(reports)} checks, {n_fail} failed, {n_skip} skipped")
    return 1 if n_fail else 0


def _parse_sweep(spec):
    parts = spec.split(":")
    if len(parts) != 3:
        raise _UsageError("sweep must be start:stop:count")
    start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count <= 0:
        raise _UsageError("sweep count must be positive")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise _UsageError("sweep bounds must be finite")
    if count > 10**6:
        raise _UsageError("sweep count exceeds 1e6")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def _cmd_table(args):
    if args.function not in _FUNCTIONS:
        raise _UsageError(f"unknown function {args.function!r}")
    fn, names = _FUNCTIONS[args.function]
    xs = _parse_sweep(args.x)
    fixed = []
    for name in names[:-1]:
        v = getattr(args, name if name != "gamma" else "gamma_p", None)
        if v is None:
            raise _UsageError(f"{args.function} requires --{name}")
        fixed.append(int(v) if name in _INT_ARGS else v)
    policy = _build_policy(args)
    rows = []
    for x in xs:
        call = fixed + [x]
        res = fn(*call) if args.function in _POLICY_FREE else fn(*call, policy)
        if isinstance(res, SeriesResult):
            rows.append((x, res.value, res.path, res.terms_used))
        else:
            rows.append((x, res, "value", 0))
    if args.format == "json":
        for x, v, path, terms in rows:
            _emit(args, json.dumps({"x": x, "value": v, "path": path, "terms_used": terms}))
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("x", "value", "path", "terms_used"))
        for row in rows:
            w.writerow(row)
        _emit(args, buf.getvalue().rstrip("\n"))
    return 0


class _TrackingNamespace(argparse.Namespace):
    pass


def _make_parser():
    parser = argparse.ArgumentParser(
        prog="sphstruve",
        description="Spherical Bessel / Struve / hyper-Bessel evaluators and the identity verifier",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", default=None, help="append output to this file instead of stdout")
        p.add_argument("--rel-tol", dest="rel_tol", type=float, default=1e-12)
        p.add_argument("--abs-tol", dest="abs_tol", type=float, default=1e-300)
        p.add_argument("--max-terms", dest="max_terms", type=int, default=500)
        p.add_argument("--parallelism", type=int, default=1)
        p.add_argument("--seed", type=int, default=0, help="nonzero jitters verification grids")
        p.add_argument("--verbose", action="store_true")
        p.add_argument("--config", default=None, help="flat key=value file; flags override it")

    pe = sub.add_parser("eval", help="evaluate one function at a point")
    pe.add_argument("function")
    for name in ("x", "t", "z", "nu", "mu", "rho", "alpha", "beta", "a", "b"):
        pe.add_argument(f"--{name}", type=float, default=None)
    pe.add_argument("--n", type=float, default=None)
    pe.add_argument("--gamma", dest="gamma_p", type=float, default=None)
    add_common(pe)
    pe.set_defaults(func=_cmd_eval)

    pv = sub.add_parser("verify", help="verify identities from the catalog")
    pv.add_argument("ids", nargs="*", default=[], help="identity ids, or 'all'")
    pv.add_argument("--list-catalog", action="store_true", help="print the catalog as JSON and exit")
    add_common(pv)
    pv.set_defaults(func=_cmd_verify)

    pt = sub.add_parser("table", help="sweep a function over start:stop:count")
    pt.add_argument("function")
    pt.add_argument("--x", required=True, help="sweep spec start:stop:count (inclusive)")
    for name in ("t", "z", "nu", "mu", "rho", "alpha", "beta", "a", "b"):
        pt.add_argument(f"--{name}", type=float, default=None)
    pt.add_argument("--n", type=float, default=None)
    pt.add_argument("--gamma", dest="gamma_p", type=float, default=None)
    add_common(pt)
    pt.set_defaults(func=_cmd_table)

    return parser


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
        explicit = {a.lstrip("-").split("=")[0].replace("-", "_") for a in argv if a.startswith("--")}
        args._explicit = explicit
        if getattr(args, "config", None):
            _apply_config_defaults(args, _read_config_file(args.config))
        if args.parallelism < 1:
            raise _UsageError("parallelism must be >= 1")
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, UnknownIdentityError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return 2
    except OverflowError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
