"""Command-line front end: verify, cyclic, master, integrate, simulate, report.

Exit codes: 0 success, 1 numeric failure, 2 usage error.  Options resolve as
command-line flag, then the config file (command section, then top level),
then the built-in default; the effective values are embedded in every JSON
report.  JSON output is sorted and timestamp-free, so identical invocations
give byte-identical files.
"""

import argparse
import csv
import glob
import json
import math
import sys

import numpy as np

SCHEMA_VERSION = 1

DEFAULTS = {
    "verify": {"seed": 0, "tol": 1e-8, "samples": 200, "m_range": [0.05, 0.95],
               "parallelism": 1, "ids": None, "family_n": [1, 2, 3, 5, 8]},
    "cyclic": {"identity": None, "p": None, "r": None, "s": 1, "r2": None, "period": None,
               "ordering": "chain", "x": 0.3, "m": 0.5, "tol": 1e-9},
    "master": {"preset": None, "f": None, "a": 0.8, "b": None, "m": 0.5, "tol": 1e-7},
    "integrate": {"id": None, "m": 0.5, "a": 0.8, "a2": None, "a3": None, "n": None,
                  "x": 1.0, "tol": 1e-9},
    "simulate": {"scheme": "exact", "m": 0.8, "delta": 0.1, "steps": 10000, "z0": 0.0,
                 "csv": None},
    "report": {"inputs": None},
}

PRESETS = {
    "eq3.1": "dn^2 * dn(+a) + dn^2 * dn(-a)",
    "eq5.2": "dn^2 * dn(+a)^2",
    "dn2": "dn^2",
    "sn": "sn",
}


class UsageError(Exception):
    pass


def _dump(payload):
    return json.dumps(payload, indent=2, sort_keys=True, allow_nan=True) + "\n"


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _payload(command, config, records, passed):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": config,
        "summary": {"total": len(records), "passed": int(sum(passed)),
                    "failed": len(records) - int(sum(passed))},
        "records": records,
    }


def _resolve(args, command):
    """Merge flag > config-file section > config-file top level > default."""
    file_cfg = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                file_cfg = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
    section = file_cfg.get(command, {}) if isinstance(file_cfg.get(command), dict) else {}
    cfg = {}
    for key, default in DEFAULTS[command].items():
        flag = getattr(args, key, None)
        if flag is not None:
            cfg[key] = flag
        elif key in section:
            cfg[key] = section[key]
        elif key in file_cfg and not isinstance(file_cfg[key], dict):
            cfg[key] = file_cfg[key]
        else:
            cfg[key] = default
    return cfg


# ---------------------------------------------------------------------------
# commands


def cmd_verify(cfg, out):
    from .catalog import catalog_ids
    from .verifier import SampleDomain, verify_all, reports_payload

    ids = catalog_ids(cfg["ids"], family_n=tuple(cfg["family_n"]))
    if not ids:
        raise UsageError(f"no catalog identity matches {cfg['ids']!r}")
    try:
        domain = SampleDomain(m_range=tuple(cfg["m_range"]))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = verify_all(domain=domain, samples=int(cfg["samples"]), tol=float(cfg["tol"]),
                         seed=int(cfg["seed"]), parallelism=int(cfg["parallelism"]), ids=ids)
    payload = reports_payload(reports, **cfg)
    payload["command"] = "verify"
    for r in reports:
        if not r.passed:
            print(f"FAIL {r.id}: max residual {r.max_residual} tol {r.tol:g}"
                  + (f" ({r.error})" if r.error else ""))
    s = payload["summary"]
    print(f"verify: {s['total']} identities, {s['passed']} passed, {s['failed']} failed")
    return payload, s["failed"] == 0


def cmd_cyclic(cfg, out):
    from .catalog import UnknownIdentity, get_identity
    from .cyclic import (CyclicSpec, PeriodMismatch, appendixF_spec, chain_weighted,
                         verify_appendixF)

    iid = cfg["identity"]
    if not iid or cfg["p"] is None or cfg["r"] is None:
        raise UsageError("cyclic needs --identity, --p and --r")
    try:
        if iid.startswith("F."):
            spec = appendixF_spec(iid, int(cfg["p"]), int(cfg["r"]),
                                  None if cfg["r2"] is None else int(cfg["r2"]))
            res = verify_appendixF(iid, spec, float(cfg["x"]), float(cfg["m"]), float(cfg["tol"]))
        else:
            period = cfg["period"] or get_identity(iid).period
            spec = CyclicSpec(int(cfg["p"]), int(cfg["r"]), int(cfg["s"]), period,
                              None if cfg["r2"] is None else int(cfg["r2"]), cfg["ordering"])
            res = chain_weighted(iid, spec, float(cfg["x"]), float(cfg["m"]), float(cfg["tol"]))
    except (UnknownIdentity, KeyError, PeriodMismatch, ValueError) as exc:
        raise UsageError(str(exc)) from None
    rec = res.to_dict()
    print(f"{res.identity_id} p={spec.p} r={spec.r} s={spec.s}: "
          f"residual {res.residual:.3e} (tol {res.tol:g}) {'PASS' if res.passed else 'FAIL'}")
    for w in res.warnings:
        print(f"  note: {w}")
    return _payload("cyclic", cfg, [rec], [res.passed]), res.passed


def cmd_master(cfg, out):
    from .catalog import get_identity
    from .master import ProductSpec, reconstruct

    text = cfg["f"] or PRESETS.get(cfg["preset"] or "")
    if text is None:
        raise UsageError(f"need --f or --preset from {sorted(PRESETS)}")
    m = float(cfg["m"])
    shifts = {"a": float(cfg["a"])}
    if cfg["b"] is not None:
        shifts["b"] = float(cfg["b"])
    try:
        f = ProductSpec.parse(text, m, **shifts)
    except Exception as exc:  # malformed user expression
        raise UsageError(f"cannot parse {text!r}: {exc}") from None
    rec = reconstruct(f, m)
    grid = np.linspace(0.05, 4.0, 41)
    dev = rec.max_deviation(f, grid)
    data = rec.to_dict()
    data.update({"f": text, "shifts": shifts, "max_deviation": dev})
    print(f"f = {text}  (m={m:g}, " + ", ".join(f"{k}={v:g}" for k, v in shifts.items()) + ")")
    print(f"class {rec.kind} (P={rec.cls.P}, Q={rec.cls.Q})")
    print(f"{'anchor':>12} {'basis':>6} {'deriv':>5} {'coef.real':>16} {'coef.imag':>12}")
    for t in rec.terms:
        c = complex(t.coef)
        print(f"{t.anchor:12.6f} {t.basis:>6} {t.derivative:5d} {c.real:16.10f} {c.imag:12.3e}")
    if rec.kind == "II":
        print(f"C = {complex(rec.C).real:.12g}   C_zeta (mean of f) = {complex(rec.C_zeta).real:.12g}")
    if cfg["preset"] == "eq3.1":
        ident = get_identity("3.1")
        rhs = np.asarray(ident.eval_side("rhs", grid, [shifts["a"]], m))
        gap = float(np.max(np.abs(rhs - np.real(rec.evaluate(grid)))))
        data["identity_3.1_deviation"] = gap
        print(f"identity 3.1 right side vs reconstruction: max |diff| {gap:.3e}")
    ok = dev <= float(cfg["tol"])
    print(f"max |f - reconstruction| on grid: {dev:.3e} {'PASS' if ok else 'FAIL'}")
    return _payload("master", cfg, [data], [ok]), ok


def cmd_integrate(cfg, out):
    from . import integrals as itg

    fid = cfg["id"]
    if not fid:
        raise UsageError("integrate needs --id")
    m, tol = float(cfg["m"]), float(cfg["tol"])
    try:
        if fid in itg.DEFINITE_IDS:
            form = itg.definite_formula(fid)
            vals = [cfg["a"], cfg["a2"], cfg["a3"]][: form.arity]
            if any(v is None for v in vals):
                raise UsageError(f"{fid} needs {form.arity} shift value(s) (--a, --a2, --a3)")
            rec = itg.definite_check(fid, m, [float(v) for v in vals], tol)
        elif fid in itg.INDEFINITE_IDS:
            n = None if cfg["n"] is None else int(cfg["n"])
            a, x = float(cfg["a"]), float(cfg["x"])
            closed = itg.indefinite_eval(fid, n, m, a, x)
            quad = itg.indefinite_quadrature(fid, n, m, a, x)
            deriv = itg.derivative_check(fid, n, m, a, x)
            diff = abs(closed - quad.value)
            bound = max(tol, 10.0 * quad.error_estimate)
            rec = {"id": fid, "n": n, "m": m, "a": a, "x": x, "closed": closed,
                   "quadrature": quad.value, "error_estimate": quad.error_estimate,
                   "abs_diff": diff, "derivative_residual": deriv, "tol": bound,
                   "pass": bool(diff <= bound and deriv <= 1e-6)}
        else:
            raise UsageError(f"unknown integral id {fid!r}")
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps({k: rec[k] for k in ("closed", "quadrature", "abs_diff")}, sort_keys=True))
    return _payload("integrate", cfg, [rec], [rec["pass"]]), rec["pass"]


def cmd_simulate(cfg, out):
    from .discretizer import run

    try:
        rep = run(cfg["scheme"], float(cfg["m"]), float(cfg["delta"]), int(cfg["steps"]),
                  float(cfg["z0"]))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg["csv"]:
        with open(cfg["csv"], "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["n", "y", "reference", "abs_error"])
            for row in rep.rows():
                w.writerow([row[0]] + [repr(v) for v in row[1:]])
    ok = math.isfinite(rep.max_abs_error)
    print(f"{rep.scheme} scheme m={rep.m:g} delta={rep.delta:g} steps={rep.steps}: "
          f"max |y_n - dn(z0 + n delta)| = {rep.max_abs_error:.3e}")
    return _payload("simulate", cfg, [rep.to_dict()], [ok]), ok


def cmd_report(cfg, out):
    pats = cfg["inputs"] or []
    paths = sorted({p for pat in pats for p in (glob.glob(pat) or [pat])})
    if not paths:
        raise UsageError("report needs --in FILE [FILE ...]")
    rows, oks = [], []
    for path in paths:
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
            s = data["summary"]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"{path}: not a report ({exc})") from None
        row = {"file": path, "command": data.get("command"), "total": int(s["total"]),
               "passed": int(s["passed"]), "failed": int(s["failed"])}
        rows.append(row)
        oks.append(row["failed"] == 0)
    print(f"{'file':<40} {'command':<10} {'total':>6} {'passed':>6} {'failed':>6}")
    for r in rows:
        print(f"{r['file']:<40} {str(r['command']):<10} {r['total']:>6} {r['passed']:>6} "
              f"{r['failed']:>6}")
    tot = {k: sum(r[k] for r in rows) for k in ("total", "passed", "failed")}
    print(f"{'TOTAL':<40} {'':<10} {tot['total']:>6} {tot['passed']:>6} {tot['failed']:>6}")
    payload = _payload("report", cfg, rows, oks)
    payload["aggregate"] = tot
    return payload, all(oks)


COMMANDS = {"verify": cmd_verify, "cyclic": cmd_cyclic, "master": cmd_master,
            "integrate": cmd_integrate, "simulate": cmd_simulate, "report": cmd_report}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file (flags override it)")
    common.add_argument("--out", help="write the JSON report here")
    common.add_argument("--json", action="store_true", help="print the JSON report to stdout")

    p = argparse.ArgumentParser(prog="jacobi-local", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="randomized catalog verification")
    v.add_argument("--ids", help="ID prefix or glob, e.g. 'A.*'")
    v.add_argument("--seed", type=int)
    v.add_argument("--tol", type=float)
    v.add_argument("--samples", type=int)
    v.add_argument("--m-range", dest="m_range", type=float, nargs=2)
    v.add_argument("--parallelism", type=int)
    v.add_argument("--family-n", dest="family_n", type=int, nargs="+")

    c = sub.add_parser("cyclic", parents=[common], help="weighted cyclic sum of a local identity")
    c.add_argument("--identity")
    c.add_argument("--p", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--r2", type=int, help="second spacing for two-shift F.* entries")
    c.add_argument("--period", choices=["2K", "4K"])
    c.add_argument("--ordering", choices=["chain", "grid"])
    c.add_argument("--x", type=float)
    c.add_argument("--m", type=float)
    c.add_argument("--tol", type=float)

    ms = sub.add_parser("master", parents=[common], help="pole-based reconstruction")
    ms.add_argument("--preset", choices=sorted(PRESETS))
    ms.add_argument("--f", help="product text, e.g. 'dn^2 * dn(+a)'")
    ms.add_argument("--a", type=float)
    ms.add_argument("--b", type=float)
    ms.add_argument("--m", type=float)
    ms.add_argument("--tol", type=float)

    i = sub.add_parser("integrate", parents=[common], help="closed-form integral vs quadrature")
    i.add_argument("--id")
    i.add_argument("--m", type=float)
    i.add_argument("--a", type=float)
    i.add_argument("--a2", type=float)
    i.add_argument("--a3", type=float)
    i.add_argument("--n", type=int)
    i.add_argument("--x", type=float)
    i.add_argument("--tol", type=float)
    i.add_argument("--check", action="store_true",
                   help="compare with quadrature (always done; kept for scripts)")

    s = sub.add_parser("simulate", parents=[common], help="exact or naive difference scheme")
    s.add_argument("--scheme", choices=["exact", "naive"])
    s.add_argument("--m", type=float)
    s.add_argument("--delta", type=float)
    s.add_argument("--steps", type=int)
    s.add_argument("--z0", type=float)
    s.add_argument("--csv", help="write n, y, reference, abs_error here")

    r = sub.add_parser("report", parents=[common], help="aggregate JSON reports")
    r.add_argument("--in", dest="inputs", nargs="+")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        cfg = _resolve(args, args.command)
        payload, ok = COMMANDS[args.command](cfg, args.out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = _dump(payload)
    if args.out:
        _write(args.out, text)
    if args.json:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
