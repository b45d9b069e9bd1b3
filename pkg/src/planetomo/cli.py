"""Command-line surface: symbol tables, grid exports, expectations and self-checks.

All floats are serialized with shortest round-trip formatting and every
subcommand produces byte-identical output across runs.  Exit codes: 0 ok,
1 verification failure, 2 input or validation error, 3 I/O error,
4 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import verify as verify_mod
from .fock import DEFAULT_DIM
from .pairing import PairingConfig, expect_optical, expect_planar, expect_trace, expectation_report
from .parsing import SpecParseError, parse_axis, parse_observable, parse_state
from .quadrature import IntegrationError, RuleConstructionError
from .symbols import biorthogonal_symbols
from .tomograms import AxisSpec, sample_grid

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4


def _fmt(value) -> str:
    return repr(float(value))


def symbols_payload(degree: int) -> dict:
    """JSON-ready symbol table for one degree, in deterministic order."""
    return {
        "degree": degree,
        "symbols": [
            {"k": k, "coeffs": {f"x^{i} y^{j}": float(value)
                                for (i, j), value in poly.terms_sorted()}}
            for k, poly in enumerate(biorthogonal_symbols(degree))
        ],
    }


def cmd_symbols(args) -> int:
    if args.format == "json":
        sys.stdout.write(json.dumps(symbols_payload(args.degree), allow_nan=False) + "\n")
        return EXIT_OK
    lines = ["k,i,j,value"]
    for k, poly in enumerate(biorthogonal_symbols(args.degree)):
        lines.extend(f"{k},{i},{j},{_fmt(value)}" for (i, j), value in poly.terms_sorted())
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_grid(args) -> int:
    state = parse_state(args.state, dim=args.dim)
    if args.kind == "tomogram":
        if args.x is None:
            raise SpecParseError("tomogram grids need --x min:max:step", args.kind, 0)
        axis1 = parse_axis(args.x)
        axis2 = AxisSpec(0.0, 2.0 * math.pi, args.phi, periodic=True)
        representation = "optical"
    else:
        if args.range is None:
            raise SpecParseError(f"{args.kind} grids need --range min:max:step", args.kind, 0)
        axis1 = parse_axis(args.range)
        axis2 = parse_axis(args.range)
        representation = args.kind
    grid = sample_grid(state, representation, axis1, axis2)
    lines = ["axis1,axis2,value"]
    lines.extend(f"{_fmt(a)},{_fmt(b)},{_fmt(v)}" for a, b, v in grid.rows())
    payload = "\n".join(lines) + "\n"
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def cmd_expect(args) -> int:
    state = parse_state(args.state, dim=args.dim)
    observable = parse_observable(args.observable)
    config = PairingConfig(kappa=args.kappa, tol=args.tol)
    result: dict = {"state": state.label, "observable": observable.label()}
    if args.method == "all":
        report = expectation_report(state, observable, config)
        result["planar"] = report.value_planar
        result["optical"] = report.value_optical
        result["trace"] = report.value_trace
        result["deviations"] = {
            "planar_abs": report.deviation_planar,
            "optical_abs": report.deviation_optical,
            "planar_rel": report.relative_planar,
            "optical_rel": report.relative_optical,
        }
    elif args.method == "planar":
        result["planar"] = expect_planar(observable, state, config)
    elif args.method == "optical":
        result["optical"] = expect_optical(observable, state, config)
    else:
        result["trace"] = expect_trace(observable, state)
    sys.stdout.write(json.dumps(result, allow_nan=False) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    results, passed = verify_mod.run(args.suite, tol=args.tol)
    if args.json:
        payload = {
            "suite": args.suite,
            "passed": passed,
            "checks": [
                {"suite": suite, "name": check.name, "deviation": check.deviation,
                 "tolerance": check.tolerance, "passed": check.passed, "detail": check.detail}
                for suite, check in results
            ],
        }
        sys.stdout.write(json.dumps(payload, allow_nan=False) + "\n")
    else:
        for suite, check in results:
            status = "PASS" if check.passed else "FAIL"
            detail = f" {check.detail}" if check.detail else ""
            sys.stdout.write(f"{status} [{suite}] {check.name}: deviation={_fmt(check.deviation)}"
                             f" tol={_fmt(check.tolerance)}{detail}\n")
        good = sum(check.passed for _, check in results)
        sys.stdout.write(f"{good}/{len(results)} checks passed\n")
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planetomo",
        description="Phase-space tomograms on the plane, observable symbols and plane-integration averages.")
    commands = parser.add_subparsers(dest="command", required=True)

    symbols = commands.add_parser("symbols", help="emit the dual-symbol table of one degree")
    symbols.add_argument("--degree", type=int, required=True)
    symbols.add_argument("--format", choices=("json", "csv"), default="json")
    symbols.set_defaults(handler=cmd_symbols)

    grid = commands.add_parser("grid", help="export a sampled distribution as CSV")
    grid.add_argument("kind", choices=("tomogram", "planar", "wigner"))
    grid.add_argument("--state", required=True, help="fock:<n> | coherent:<a+bi> | super:<c0>,<c1>,...")
    grid.add_argument("--range", help="x and y axis as min:max:step (planar and wigner grids)")
    grid.add_argument("--x", help="X axis as min:max:step (tomogram grids)")
    grid.add_argument("--phi", type=int, default=64, help="angle count over one period (tomogram grids)")
    grid.add_argument("--dim", type=int, default=DEFAULT_DIM)
    grid.add_argument("--out", help="output path (default stdout)")
    grid.set_defaults(handler=cmd_grid)

    expect = commands.add_parser("expect", help="evaluate one observable average")
    expect.add_argument("--state", required=True)
    expect.add_argument("--observable", required=True,
                        help="combination of S(m,n), N, I, e.g. '0.5*S(2,0)+0.5*S(0,2)-0.5*I'")
    expect.add_argument("--method", choices=("planar", "optical", "trace", "all"), default="all")
    expect.add_argument("--kappa", type=float, default=PairingConfig().kappa)
    expect.add_argument("--dim", type=int, default=DEFAULT_DIM)
    expect.add_argument("--tol", type=float, default=1e-8)
    expect.set_defaults(handler=cmd_expect)

    verify = commands.add_parser("verify", help="run the self-check suites")
    verify.add_argument("--suite", choices=("all",) + verify_mod.SUITE_ORDER, default="all")
    verify.add_argument("--tol", type=float, default=None, help="override every check tolerance")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)
    return parser


def _merge_axis_values(argv):
    """Join '--range -5:5:0.1' into '--range=-5:5:0.1' so argparse accepts the minus."""
    merged = []
    skip = False
    for index, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in ("--range", "--x") and index + 1 < len(argv):
            merged.append(f"{token}={argv[index + 1]}")
            skip = True
        else:
            merged.append(token)
    return merged


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_merge_axis_values(list(argv)))
    try:
        return args.handler(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IntegrationError, RuleConstructionError) as exc:
        print(f"error: numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except np.linalg.LinAlgError as exc:
        print(f"error: linear algebra failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
