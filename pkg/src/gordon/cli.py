"""Command-line front end.

Subcommands: eval, oracle, compare, sweep, verify. Records are emitted as
JSON lines (default), CSV with a header row, or an aligned human table.

Exit status: 0 on success, 1 when verification finds failures, 2 on
invalid flags, 3 on evaluation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import replace
from typing import Any, Iterable

from .deviations import DEVIATIONS, lookup
from .errors import GordonError
from .evaluate import all_strategies, eval_auto, eval_special, eval_f1_sum, eval_f2_series, eval_2f1_double_sum
from .identities import IDENTITY_IDS, orthogonality_suite, run_identity_suite
from .params import GordonParams
from .quadrature import integrate_gordon
from .relations import default_lattice, summarize, sweep_recurrences
from .reports import IdentityReport
from .sampling import random_points
from .special import DEFAULT_CONTROL, EvalResult, SeriesControl

SCHEMA_VERSION = 1
SCOPES = ("identities", "recurrences", "orthogonality", "all")
_GENERAL = {"F2-SERIES": eval_f2_series, "F1-SUM": eval_f1_sum,
            "2F1-DOUBLE-SUM": eval_2f1_double_sum}


class UsageError(Exception):
    pass


def _num(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None if math.isnan(x) else ("inf" if x > 0 else "-inf")
    return x


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return _num(obj)


def _base(kind, strategy, value, err_est, warnings=()):
    return {"schema_version": SCHEMA_VERSION, "kind": kind, "strategy": strategy,
            "value": value, "err_est": err_est, "warnings": list(warnings)}


def eval_record(P: GordonParams, r: EvalResult) -> dict:
    rec = _base("eval", r.strategy, r.value, r.err_est, r.warnings)
    rec.update(params=P.as_dict(), terms_used=r.terms_used, exact=r.exact,
               cancellation=r.cancellation)
    return rec


def oracle_record(P: GordonParams, q) -> dict:
    rec = _base("oracle", q.strategy, q.value, q.err_est, q.warnings)
    rec.update(params=P.as_dict(), upper_cutoff=q.upper_cutoff, subdivisions=q.subdivisions,
               integrand_evals=q.integrand_evals, converged=q.converged)
    return rec


def error_record(label: str, exc: Exception, params: dict | None = None) -> dict:
    rec = _base("error", label, None, None)
    rec.update(error=getattr(exc, "code", type(exc).__name__), message=str(exc))
    if params is not None:
        rec["params"] = params
    return rec


def report_record(rep: IdentityReport, suite: str) -> dict:
    rec = _base(suite, "VERIFY", rep.lhs, rep.abs_residual)
    dev = lookup(rep.identity)
    rec.update(identity=rep.identity, point=rep.point, lhs=rep.lhs, rhs=rep.rhs,
               rel_residual=rep.rel_residual, tol=rep.tol, status=rep.status,
               corrected=rep.corrected or (dev is not None and dev.status == "corrected"
                                           and "[printed]" not in rep.identity
                                           and rep.status == "pass"),
               deviation=dev.key if dev else None, notes=rep.notes)
    return rec


# ------------------------------------------------------------------ output

def _flatten(rec: dict, prefix="") -> dict:
    out = {}
    for k, v in rec.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = ";".join(str(x) for x in v)
        else:
            out[key] = v
    return out


def emit(records: list[dict], fmt: str, stream) -> None:
    records = [_clean(r) for r in records]
    if fmt == "json":
        for r in records:
            stream.write(json.dumps(r, sort_keys=True) + "\n")
    elif fmt == "csv":
        flat = [_flatten(r) for r in records]
        keys = sorted({k for r in flat for k in r})
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in flat:
            w.writerow({k: ("" if r.get(k) is None else repr(r[k]) if isinstance(r.get(k), float) else r[k])
                        for k in keys})
        stream.write(buf.getvalue())
    else:
        _human(records, stream)


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.15g}"
    if v is None:
        return "-"
    return str(v)


def _human(records, stream):
    cols = ["kind", "strategy", "identity", "status", "value", "err_est", "rel_residual",
            "rel_diff_vs_oracle", "warnings"]
    rows = []
    for r in records:
        if r.get("kind") == "summary":
            continue
        rows.append([_fmt(r.get(c)) if c != "warnings" else ",".join(r.get(c) or []) or "-"
                     for c in cols])
    used = [i for i, c in enumerate(cols) if any(row[i] != "-" for row in rows)]
    widths = {i: max([len(cols[i])] + [len(row[i]) for row in rows]) for i in used}
    stream.write("  ".join(cols[i].ljust(widths[i]) for i in used).rstrip() + "\n")
    for row in rows:
        stream.write("  ".join(row[i].ljust(widths[i]) for i in used).rstrip() + "\n")
    for r in records:
        if r.get("kind") == "summary":
            body = {k: v for k, v in r.items() if k not in ("schema_version", "kind", "warnings")}
            stream.write("summary: " + json.dumps(body, sort_keys=True) + "\n")


# -------------------------------------------------------------- subcommands

def _params(args) -> GordonParams:
    sign = {"+": 1, "-": -1, "+1": 1, "-1": -1}.get(args.sign)
    if sign is None:
        raise UsageError(f"--sign must be + or -, got {args.sign!r}")
    try:
        return GordonParams(args.b, args.bp, args.c, args.j, args.p, sign, args.lam, args.w, args.z)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(args, ctrl):
    P = _params(args)
    s = args.strategy
    if s in (None, "auto"):
        r = eval_auto(P, ctrl)
    elif s in _GENERAL:
        r = _GENERAL[s](P, ctrl)
    else:
        r = eval_special(P, ctrl, which=s.removeprefix("SPECIAL-"), n=args.n)
    return [eval_record(P, r)], 0


def cmd_oracle(args, ctrl):
    P = _params(args)
    return [oracle_record(P, integrate_gordon(P, args.tol, ctrl))], 0


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def cmd_compare(args, ctrl):
    P = _params(args)
    results = all_strategies(P, ctrl, n=args.n)
    q = integrate_gordon(P, args.tol, ctrl)
    records, ok = [], {}
    for label in sorted(results):
        r = results[label]
        if isinstance(r, Exception):
            records.append(error_record(label, r, P.as_dict()))
            continue
        rec = eval_record(P, r)
        rec["label"] = label
        rec["rel_diff_vs_oracle"] = _rel(r.value, q.value)
        records.append(rec)
        ok[label] = r
    records.append(oracle_record(P, q))
    labels = sorted(ok)
    pair = max((_rel(ok[a].value, ok[b].value) for i, a in enumerate(labels) for b in labels[i + 1:]),
               default=0.0)
    summary = _base("summary", "COMPARE", None, None)
    summary.update(strategies=len(labels), max_pairwise_rel_diff=pair,
                   max_rel_diff_vs_oracle=max((_rel(r.value, q.value) for r in ok.values()), default=None))
    records.append(summary)
    return records, 0


def cmd_sweep(args, ctrl):
    if args.random:
        points = random_points(args.seed, args.random)
    else:
        points = default_lattice()
    records = []
    failures = 0
    for i, P in enumerate(points):
        try:
            rec = eval_record(P, eval_auto(P, ctrl))
        except GordonError as exc:
            rec = error_record("eval_auto", exc, P.as_dict())
            failures += 1
        rec["index"] = i
        if args.with_oracle and rec["kind"] == "eval":
            q = integrate_gordon(P, args.tol, ctrl)
            rec["oracle_value"] = q.value
            rec["rel_diff_vs_oracle"] = _rel(rec["value"], q.value)
        records.append(rec)
    return records, 3 if failures else 0


def cmd_verify(args, ctrl):
    scopes = SCOPES[:-1] if args.scope == "all" else (args.scope,)
    reports: list[tuple[str, IdentityReport]] = []
    if "identities" in scopes:
        for rep in run_identity_suite(IDENTITY_IDS, seed=args.seed, count=args.count, ctrl=ctrl,
                                      include_printed=True):
            reports.append(("identity", rep))
    if "recurrences" in scopes:
        for rep in sweep_recurrences(default_lattice(), ctrl, tol=1e-9, all_readings=True):
            reports.append(("recurrence", rep))
    if "orthogonality" in scopes:
        for rep in orthogonality_suite(ctrl=ctrl):
            reports.append(("orthogonality", rep))
    records = [report_record(rep, suite) for suite, rep in reports]
    for d in DEVIATIONS:
        rec = _base("deviation", "LEDGER", None, None)
        rec.update(identity=d.key, status=d.status, summary=d.summary)
        records.append(rec)
    counts = summarize(rep for _, rep in reports)
    summary = _base("summary", "VERIFY", None, None)
    summary.update(scope=args.scope, seed=args.seed, **counts)
    records.append(summary)
    return records, 1 if counts["fail"] else 0


# ---------------------------------------------------------------- parsing

def _add_params(p):
    g = p.add_argument_group("integral parameters")
    g.add_argument("--b", type=float, default=0.0)
    g.add_argument("--bp", type=float, default=0.0, help="b'")
    g.add_argument("--c", type=float, default=1.0)
    g.add_argument("--j", type=int, default=0)
    g.add_argument("--p", type=int, default=0)
    g.add_argument("--sign", default="+", help="+ or -")
    g.add_argument("--lambda", dest="lam", type=float, default=1.0)
    g.add_argument("--w", type=float, default=0.0)
    g.add_argument("--z", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "human"), default="json")
    common.add_argument("--rel-tol", type=float, default=None, help="series truncation tolerance")
    common.add_argument("--max-terms", type=int, default=None,
                        help="series term cap (overrides GORDON_MAX_TERMS)")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="gordon", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one point")
    _add_params(p)
    p.add_argument("--strategy", default="auto",
                   help="auto, F2-SERIES, F1-SUM, 2F1-DOUBLE-SUM or a special id")
    p.add_argument("--n", type=int, default=1, help="shift for the explicit shift forms")

    p = sub.add_parser("oracle", parents=[common], help="quadrature value of one point")
    _add_params(p)
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("compare", parents=[common], help="all strategies against the oracle")
    _add_params(p)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--n", type=int, default=1)

    p = sub.add_parser("sweep", parents=[common], help="evaluate a parameter lattice")
    p.add_argument("--random", type=int, default=0, metavar="N",
                   help="N seeded random points instead of the default lattice")
    p.add_argument("--with-oracle", action="store_true")
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--count", type=int, default=25, help="random points per identity")
    return ap


def _control(args) -> SeriesControl:
    ctrl = DEFAULT_CONTROL
    env = os.environ.get("GORDON_MAX_TERMS")
    if env:
        try:
            ctrl = replace(ctrl, max_terms=int(env))
        except ValueError:
            raise UsageError(f"GORDON_MAX_TERMS must be an integer, got {env!r}") from None
    if args.max_terms is not None:
        ctrl = replace(ctrl, max_terms=args.max_terms)
    if args.rel_tol is not None:
        ctrl = replace(ctrl, rel_tol=args.rel_tol)
    return ctrl


_COMMANDS = {"eval": cmd_eval, "oracle": cmd_oracle, "compare": cmd_compare,
             "sweep": cmd_sweep, "verify": cmd_verify}


def run(argv: Iterable[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ctrl = _control(args)
        records, status = _COMMANDS[args.command](args, ctrl)
    except UsageError as exc:
        stderr.write(json.dumps(_clean(error_record(args.command, exc)) | {"error": "USAGE"},
                                sort_keys=True) + "\n")
        return 2
    except GordonError as exc:
        stderr.write(json.dumps(_clean(error_record(args.command, exc)), sort_keys=True) + "\n")
        return 3
    emit(records, args.format, stdout)
    return status


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
