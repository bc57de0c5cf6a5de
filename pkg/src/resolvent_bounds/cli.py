"""Command-line interface.

Exit codes: 0 on success, 1 when a certification or audit check fails, 2 on
invalid input.  Single results are printed as JSON; sweeps and certification
grids as CSV with 17 significant digits.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import bounds, chareq
from .disk import Spectrum
from .errors import ResolventBoundsError
from .toeplitz import ExtremalParams, xnorm_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
GAP_TOL = 1e-8


class UsageError(Exception):
    pass


# -- parsing helpers ----------------------------------------------------------


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def parse_grid(text: str, cast=float) -> list:
    """``a,b,c`` lists or ``start:stop[:step]`` ranges (inclusive of ``stop``)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            bits = part.split(":")
            if len(bits) not in (2, 3):
                raise argparse.ArgumentTypeError(f"bad range {part!r}")
            start, stop = float(bits[0]), float(bits[1])
            step = float(bits[2]) if len(bits) == 3 else 1.0
            if step <= 0 or stop < start:
                raise argparse.ArgumentTypeError(f"bad range {part!r}")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            out.extend(cast(round(start + k * step, 12)) for k in range(count))
        else:
            out.append(cast(part))
    if not out:
        raise argparse.ArgumentTypeError("empty grid")
    return out


def int_grid(text: str) -> list[int]:
    return parse_grid(text, int)


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    return str(x)


def write_csv(rows: list[dict], out) -> None:
    if not rows:
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(rows[0].keys())
    for row in rows:
        w.writerow([fmt(v) for v in row.values()])


def emit_json(obj, out=None) -> None:
    json.dump(obj, out or sys.stdout, indent=2, allow_nan=False)
    (out or sys.stdout).write("\n")


def _open_out(path: str | None):
    return open(path, "w", newline="") if path else None


def _params(args) -> ExtremalParams:
    return ExtremalParams(args.n, args.r, args.beta)


# -- subcommands --------------------------------------------------------------


def cmd_xnorm(args) -> int:
    p = _params(args)
    oracle = xnorm_oracle(p)
    res = chareq.solve_char_eq(p)
    gap = abs(res.norm - oracle) / oracle
    emit_json(
        {
            "n": p.n,
            "r": p.r,
            "beta": p.beta,
            "norm_char_eq": res.norm,
            "norm_oracle": oracle,
            "rel_gap": gap,
            "method": res.method,
            "root_census": res.census.as_dict() if res.census else None,
        }
    )
    return EXIT_OK if gap < GAP_TOL else EXIT_FAIL


def _load_spectrum(args) -> Spectrum:
    if args.spectrum and args.spectrum_file:
        raise UsageError("give --spectrum or --spectrum-file, not both")
    if args.spectrum:
        text = args.spectrum
    elif args.spectrum_file:
        text = Path(args.spectrum_file).read_text()
    else:
        raise UsageError("a spectrum is required (--spectrum or --spectrum-file)")
    try:
        return Spectrum.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"bad spectrum JSON: {exc}") from exc


def cmd_bound(args) -> int:
    sigma = _load_spectrum(args)
    zeta = args.zeta
    if args.method == "theorem1":
        rep = bounds.bound_theorem1(sigma, zeta, conservative_beta=args.conservative_beta)
    elif args.method == "theorem3":
        rep = bounds.bound_theorem3(sigma, zeta)
    elif args.method == "prop2":
        rep = bounds.bound_prop2(sigma, zeta)
    else:
        rep = bounds.bound_prop5(sigma, zeta)
    out = rep.to_dict()
    out["reconstructed"] = rep.reconstruct()
    emit_json(out)
    return EXIT_OK


def _certify_rows(args) -> list[dict]:
    rows = []
    kinds = ["theorem1", "theorem4", "prop5"] if args.kind == "all" else [args.kind]
    if "theorem1" in kinds:
        for n in args.ns:
            for lam in args.lambdas:
                for z in args.zetas:
                    if abs(z - lam) < 1e-12:
                        print(f"skip theorem1 n={n} lambda={lam} zeta={z}: zeta on spectrum", file=sys.stderr)
                        continue
                    gap = bounds.certify_sharpness_theorem1(lam, n, z)
                    rows.append({"check": "theorem1", "n": n, "a": lam, "b": z, "gap": gap})
    if "theorem4" in kinds:
        for n in args.ns:
            for r in args.rs:
                for z in args.zetas:
                    if not (abs(z) < 1 and 0 < r < 1):
                        continue
                    w = bounds.sup_resolvent_R(z, r, n)
                    rows.append({"check": "theorem4", "n": n, "a": r, "b": z, "gap": w.rel_gap})
    if "prop5" in kinds:
        for n1 in args.ns:
            for n2 in args.n2s:
                for rho in args.rhos:
                    w = bounds.ds_constant_sup(n1, n2, rho)
                    rows.append({"check": "prop5", "n": n1, "a": rho, "b": n2, "gap": w.rel_gap})
    return rows


def cmd_certify(args) -> int:
    rows = _certify_rows(args)
    for row in rows:
        row["pass"] = row["gap"] < GAP_TOL
    fh = _open_out(args.output)
    write_csv(rows, fh or sys.stdout)
    if fh:
        fh.close()
    failed = sum(not row["pass"] for row in rows)
    print(f"certify: {len(rows)} checks, {failed} failed", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_audit(args) -> int:
    summary = bounds.random_contraction_audit(
        args.n, args.trials, args.seed, kind=args.kind, threads=args.threads
    )
    emit_json(summary.to_dict())
    if args.histogram:
        edges = np.linspace(0.0, 1.0, args.bins + 1)
        rows = []
        for name, vals in summary.ratios.items():
            counts, _ = np.histogram(np.clip(vals, 0, 1), bins=edges)
            rows += [
                {"bound": name, "lo": edges[k], "hi": edges[k + 1], "count": int(c)}
                for k, c in enumerate(counts)
            ]
        with open(args.histogram, "w", newline="") as fh:
            write_csv(rows, fh)
    return EXIT_OK if summary.violations == 0 else EXIT_FAIL


def _xnorm_row(p: ExtremalParams) -> dict:
    norm = xnorm_oracle(p)
    res = chareq.solve_char_eq(p)
    limit = gap = None
    if p.r < 1 and p.beta >= 1 - p.r * p.r:
        limit = p.beta / (1 - p.r * p.r)
        gap = chareq.xnorm_limit_gap(p)
    predicted = found = case = None
    if res.census is not None and res.census.predicted_count is not None:
        case = res.census.lemma_case
        predicted = res.census.predicted_count
        found = 2 * len(res.census.found_trig)
    return {
        "n": p.n,
        "r": p.r,
        "beta": p.beta,
        "norm": norm,
        "norm_char_eq": res.norm,
        "method": res.method,
        "limit": limit,
        "limit_gap": gap,
        "lemma_case": case,
        "predicted_roots": predicted,
        "found_roots": found,
    }


def cmd_sweep(args) -> int:
    rows: list[dict] = []
    if args.preset == "lemma":
        for _, p in chareq.lemma_case_grid():
            rows.append(_xnorm_row(p))
    elif args.preset == "sup":
        for n in args.ns:
            for r in args.rs:
                for z in args.zetas:
                    if not (abs(z) < 1 and 0 < r < 1):
                        raise UsageError("sup sweep needs |zeta| < 1 and 0 < r < 1")
                    w = bounds.sup_resolvent_R(z, r, n, certify=False)
                    rows.append(
                        {
                            "n": n,
                            "r": r,
                            "zeta": z,
                            "value": w.value,
                            "asymptotic_ratio": w.value * r**n * (1 - r * abs(z)),
                            "beta_max": w.details["beta_max"],
                        }
                    )
    else:
        for n in args.ns:
            for r in args.rs:
                for beta in args.betas:
                    rows.append(_xnorm_row(ExtremalParams(n, r, beta)))
    fh = _open_out(args.output)
    write_csv(rows, fh or sys.stdout)
    if fh:
        fh.close()
    return EXIT_OK


def cmd_roots(args) -> int:
    p = _params(args)
    if chareq.is_degenerate(p):
        census = chareq.root_census(p)
        emit_json({"n": p.n, "r": p.r, "beta": p.beta, "degenerate": True, **census.as_dict()})
        return EXIT_OK
    trig = chareq.scan_trig_roots(p, args.grid)
    plus, minus = chareq.solve_cosh_branches(p)
    census = chareq.root_census(p)
    emit_json(
        {
            "n": p.n,
            "r": p.r,
            "beta": p.beta,
            "degenerate": False,
            "lemma_case": chareq.lemma_case(p),
            "predicted_count": chareq.count_trig_roots(p),
            "theta_trig": trig.tolist(),
            "theta_cosh_plus": plus,
            "theta_cosh_minus": minus,
            "lambda_squares": census.lambda_squares,
        }
    )
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="resolvent-bounds",
        description="Resolvent norm bounds for matrix contractions with given spectrum.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def xparams(p, with_grid=False):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)
        if with_grid:
            p.add_argument("--grid", type=int, default=None, help="trig probe points (>= 8n)")

    p = sub.add_parser("xnorm", help="norm of X_{r,beta} by char. equation and eigensolver")
    xparams(p)
    p.set_defaults(func=cmd_xnorm)

    p = sub.add_parser("roots", help="branch roots of the characteristic equation")
    xparams(p, with_grid=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("bound", help="evaluate one resolvent bound")
    p.add_argument("--method", choices=["theorem1", "theorem3", "prop2", "prop5"], required=True)
    p.add_argument("--zeta", type=parse_complex, required=True)
    p.add_argument("--spectrum", help='JSON list of {"re", "im", "mult"}')
    p.add_argument("--spectrum-file")
    p.add_argument("--conservative-beta", action="store_true", help="use beta = 2")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("certify", help="check the extremal witnesses over a grid")
    p.add_argument("--kind", choices=["theorem1", "theorem4", "prop5", "all"], default="theorem1")
    p.add_argument("--lambdas", type=parse_grid, default=parse_grid("-0.9:0.9:0.3"))
    p.add_argument("--zetas", type=parse_grid, default=parse_grid("-1:1:0.5"))
    p.add_argument("--ns", type=int_grid, default=int_grid("1:8"))
    p.add_argument("--rs", type=parse_grid, default=parse_grid("0.3,0.5,0.7"))
    p.add_argument("--rhos", type=parse_grid, default=parse_grid("0,0.4,0.8"))
    p.add_argument("--n2s", type=int_grid, default=int_grid("1,3"))
    p.add_argument("--output", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("audit", help="random no-counterexample audit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=bounds.AUDIT_KINDS, default="gaussian")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--histogram", help="CSV path for the tightness histogram")
    p.add_argument("--bins", type=int, default=20)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("sweep", help="CSV tables over parameter grids")
    p.add_argument("--preset", choices=["grid", "lemma", "sup"], default="grid")
    p.add_argument("--ns", type=int_grid, default=int_grid("1:60"))
    p.add_argument("--rs", type=parse_grid, default=parse_grid("0.5"))
    p.add_argument("--betas", type=parse_grid, default=parse_grid("1.5"))
    p.add_argument("--zetas", type=parse_grid, default=parse_grid("0.5"))
    p.add_argument("--output", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ResolventBoundsError, UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
