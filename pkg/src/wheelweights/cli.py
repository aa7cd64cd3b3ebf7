"""Command-line front end.

Exit status: 0 verified, 1 a check or Monte Carlo verdict failed, 2 usage
error. Exact values are printed as ``p/q`` strings in every format.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import checks, genfun, mc, recursion

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 1_000_000
DEFAULT_CHUNK = 50_000


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{name} must be an integer, got {raw!r}")


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _emit_csv(header, rows, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_table(header, rows, out):
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def cmd_bernoulli(args, out) -> int:
    values = genfun.bernoulli_modified(args.order)
    if args.format == "json":
        json.dump({str(n): str(v) for n, v in enumerate(values)}, out)
        out.write("\n")
    else:
        rows = [(n, str(v)) for n, v in enumerate(values)]
        (_emit_csv if args.format == "csv" else _emit_table)(("n", "s_hat"), rows, out)
    return EXIT_OK


def cmd_weights(args, out) -> int:
    if args.method == "all":
        methods = tuple(recursion.Method)
    else:
        methods = (recursion.Method(args.method),)
    table = recursion.weight_table(args.max_n, methods)
    ok = table.all_agree()
    multi = len(methods) > 1
    if args.format == "json":
        rows = []
        for n, entry in table.entries.items():
            for method, value in entry.items():
                row = {"n": n, "value": str(value), "method": method.value}
                if multi:
                    row["agree"] = table.agrees(n)
                rows.append(row)
        json.dump({"rows": rows, "agree": ok}, out)
        out.write("\n")
    elif args.format == "csv":
        header = ("n", "value", "method") + (("agree",) if multi else ())
        rows = [
            (n, str(v), m.value) + ((str(table.agrees(n)).lower(),) if multi else ())
            for n, entry in table.entries.items()
            for m, v in entry.items()
        ]
        _emit_csv(header, rows, out)
    else:
        header = ("n",) + tuple(m.value for m in methods) + (("agree",) if multi else ())
        rows = [
            (n,)
            + tuple(str(table.entries[n][m]) for m in methods)
            + (("yes" if table.agrees(n) else "NO",) if multi else ())
            for n in table.entries
        ]
        _emit_table(header, rows, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_series(args, out) -> int:
    results = checks.series_suite(args.order, fault=args.inject_fault)
    passed = all(results.values())
    if args.format == "json":
        json.dump({"order": args.order, "checks": results, "passed": passed}, out)
        out.write("\n")
    elif args.format == "csv":
        _emit_csv(("check", "passed"), [(k, str(v).lower()) for k, v in results.items()], out)
    else:
        for name, ok in results.items():
            out.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_verify_mc(args, parser, out) -> int:
    samples = args.samples
    chunk = args.chunk_size or min(DEFAULT_CHUNK, samples)
    if args.antithetic and chunk % 2:
        chunk += 1 if chunk < samples else -1
    try:
        cfg = mc.MCConfig(samples=samples, seed=args.seed, chunk_size=chunk, antithetic=args.antithetic)
    except ValueError as exc:
        parser.error(str(exc))
    if args.target == "wheel":
        if args.n not in mc.WHEEL_N_SUPPORTED:
            parser.error(f"--n must be one of {mc.WHEEL_N_SUPPORTED} for the wheel target")
        est = mc.estimate_wheel_weight(args.n, cfg, workers=args.workers)
    elif args.target == "eq44":
        if args.m < 1:
            parser.error("--m must be at least 1")
        est = mc.estimate_eq44(args.m, cfg, workers=args.workers)
    else:
        if args.m < 1 or args.z1 == args.z2 or args.z1.imag <= 0 or args.z2.imag <= 0:
            parser.error("eq43 needs m >= 1 and distinct z1, z2 in the upper half-plane")
        est = mc.estimate_eq43(args.z1, args.z2, args.m, cfg, workers=args.workers)
    ok = est.within(3.0)
    record = {"target_kind": args.target, **est.to_dict(), "verdict": "pass" if ok else "fail"}
    if args.format == "json":
        json.dump(record, out)
        out.write("\n")
    elif args.format == "csv":
        _emit_csv(tuple(record), [tuple(record.values())], out)
    else:
        _emit_table(("field", "value"), list(record.items()), out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wheelweights",
        description="Exact and Monte Carlo weights of the outward-spoke wheel graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("bernoulli", help="modified Bernoulli numbers")
    p.add_argument("--order", type=int, default=13)
    p.add_argument("--format", **fmt)

    p = sub.add_parser("weights", help="exact wheel weights")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--method", choices=("recursion", "closed", "genfun", "all"), default="all")
    p.add_argument("--format", **fmt)

    verify = sub.add_parser("verify", help="verification suites")
    vsub = verify.add_subparsers(dest="suite", required=True)

    p = vsub.add_parser("series", help="generating-function identities")
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--format", **fmt)
    p.add_argument("--inject-fault", choices=checks.FAULTS, default=None, help=argparse.SUPPRESS)

    p = vsub.add_parser("mc", help="Monte Carlo cross-check")
    p.add_argument("--target", choices=("wheel", "eq43", "eq44"), default="wheel")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--z1", type=_complex, default=1j)
    p.add_argument("--z2", type=_complex, default=1 + 1j)
    p.add_argument("--samples", type=int, default=_env_int("WHEELWEIGHTS_SAMPLES", DEFAULT_SAMPLES))
    p.add_argument("--seed", type=int, default=_env_int("WHEELWEIGHTS_SEED", DEFAULT_SEED))
    p.add_argument("--chunk-size", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--antithetic", action="store_true", help="pair each draw with its mirror image")
    p.add_argument("--format", choices=("table", "json", "csv"), default="json")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bernoulli":
        if args.order < 2:
            parser.error("--order must be at least 2")
        return cmd_bernoulli(args, out)
    if args.command == "weights":
        if args.max_n < 2:
            parser.error("--max-n must be at least 2")
        return cmd_weights(args, out)
    if args.suite == "series":
        if args.order < 4:
            parser.error("--order must be at least 4")
        return cmd_verify_series(args, out)
    if args.samples < 1 or args.workers < 1:
        parser.error("--samples and --workers must be positive")
    return cmd_verify_mc(args, parser, out)


if __name__ == "__main__":
    sys.exit(main())
