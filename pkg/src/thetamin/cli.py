"""Command-line interface.

Subcommands: eval, reduce, scan, phase, verify, energy.  Output is a JSON
envelope (parameters echoed, results, certification data); phase tables and
scan rows can also be emitted as CSV with a stable column order.  Exit codes:
0 success, 2 invalid input, 3 computation failure, 4 claim violated (verify).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from . import __version__, bounds, minimize, potentials
from .errors import GridOutsideWindowError, ThetaminError
from .halfplane import UpperHalfPoint, membership, reduce
from .theta2d import (FunctionalSpec, radial_operator, theta2d_direct_with_cutoff,
                      theta2d_dx, theta2d_dy, w_beta)

EXIT_BAD_INPUT = 2
EXIT_COMPUTE_FAILURE = 3
EXIT_CLAIM_VIOLATED = 4

PHASE_COLUMNS = ["alpha", "beta", "k", "exists", "class",
                 "best_x", "best_y", "best_value", "gap"]
SCAN_COLUMNS = ["alpha", "beta", "k", "best_x", "best_y", "best_value",
                "refined_x", "refined_y", "refined_value", "hexagonal_gap",
                "divergence_detected"]


def _envelope(command: str, parameters: dict, results: dict,
              tolerances: dict) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "results": results,
        "tolerances": tolerances,
        "version": __version__,
    }


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2, allow_nan=True)
    sys.stdout.write("\n")


def _emit_csv(columns: list[str], rows: list[dict]) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns)
    writer.writeheader()
    for row in rows:
        writer.writerow({c: row.get(c) for c in columns})
    sys.stdout.write(buf.getvalue())


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad float list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetamin",
        description="Lattice theta functionals over the fundamental domain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate theta, the functional, or derivatives")
    p.add_argument("--what", required=True,
                   choices=["theta", "w", "dx", "dy", "radial"])
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("reduce", help="map a point into the fundamental domain")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)

    p = sub.add_parser("scan", help="grid-scan the functional for its minimizer")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--nx", type=int, default=128)
    p.add_argument("--ny", type=int, default=128)
    p.add_argument("--ymax", type=float, default=12.0)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--threads", type=int, default=os.cpu_count())
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("phase", help="existence/shape table over (alpha, beta)")
    p.add_argument("--alphas", type=_float_list, required=True)
    p.add_argument("--betas", type=_float_list, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--nx", type=int, default=64)
    p.add_argument("--ny", type=int, default=64)
    p.add_argument("--ymax", type=float, default=8.0)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--threads", type=int, default=os.cpu_count())
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("verify", help="sweep one analytic claim on a grid")
    p.add_argument("--claim", required=True,
                   choices=[c.value for c in bounds.Claim])
    p.add_argument("--n-alpha", type=int, default=200)
    p.add_argument("--n-y", type=int, default=200)
    p.add_argument("--alpha-min", type=float)
    p.add_argument("--alpha-max", type=float)
    p.add_argument("--y-min", type=float)
    p.add_argument("--y-max", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("energy", help="potential energy from a JSON spec file")
    p.add_argument("--spec-file", required=True)
    p.add_argument("--x", type=float)
    p.add_argument("--y", type=float)
    p.add_argument("--scan", action="store_true",
                   help="scan for the energy minimizer instead of one point")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--nx", type=int, default=64)
    p.add_argument("--ny", type=int, default=64)
    p.add_argument("--ymax", type=float, default=8.0)

    return parser


def cmd_eval(args) -> int:
    z = UpperHalfPoint(args.x, args.y)
    spec = FunctionalSpec(args.alpha, args.beta, 2.0, args.k)
    tolerances: dict = {"requested": args.tol, "certified": args.tol}
    if args.what == "theta":
        value, cutoff = theta2d_direct_with_cutoff(args.alpha, z, args.tol)
        tolerances.update(window_radius=cutoff.radius,
                          certified=cutoff.tail_bound)
    elif args.what == "w":
        value = w_beta(spec, z, args.tol)
    elif args.what == "dx":
        value = (theta2d_dx(args.alpha, z, args.tol)
                 - args.beta * theta2d_dx(spec.second_frequency, z, args.tol))
    elif args.what == "dy":
        value = (theta2d_dy(args.alpha, z, args.tol)
                 - args.beta * theta2d_dy(spec.second_frequency, z, args.tol))
    else:
        value = radial_operator(spec, z, args.tol)
    _emit(_envelope(
        "eval",
        {"what": args.what, "alpha": args.alpha, "beta": args.beta,
         "k": args.k, "x": args.x, "y": args.y, "tol": args.tol},
        {"value": value},
        tolerances))
    return 0


def cmd_reduce(args) -> int:
    z = UpperHalfPoint(args.x, args.y)
    point, g = reduce(z)
    mem = membership(point)
    _emit(_envelope(
        "reduce",
        {"x": args.x, "y": args.y},
        {"x": point.x, "y": point.y,
         "element": {"a": g.a, "b": g.b, "c": g.c, "d": g.d,
                     "reflected": g.reflected},
         "region": mem.region.value,
         "distance": mem.distance},
        {"boundary_tol": 1e-12}))
    return 0


def cmd_scan(args) -> int:
    spec = FunctionalSpec(args.alpha, args.beta, 2.0, args.k)
    report = minimize.scan_domain(spec, args.nx, args.ny, args.ymax,
                                  args.tol, args.threads)
    if args.format == "csv":
        _emit_csv(SCAN_COLUMNS, [{
            "alpha": args.alpha, "beta": args.beta, "k": args.k,
            "best_x": report.best_point.x, "best_y": report.best_point.y,
            "best_value": report.best_value,
            "refined_x": report.refined_point.x,
            "refined_y": report.refined_point.y,
            "refined_value": report.refined_value,
            "hexagonal_gap": report.hexagonal_gap,
            "divergence_detected": report.divergence_detected,
        }])
    else:
        _emit(_envelope(
            "scan",
            {"alpha": args.alpha, "beta": args.beta, "k": args.k,
             "nx": args.nx, "ny": args.ny, "ymax": args.ymax,
             "tol": args.tol},
            report.to_dict(),
            {"requested": args.tol}))
    return 0


def cmd_phase(args) -> int:
    cells = minimize.phase_report(args.alphas, args.betas, args.k, args.tol,
                                  args.nx, args.ny, args.ymax, args.threads)
    rows = [c.to_dict() for c in cells]
    if args.format == "csv":
        _emit_csv(PHASE_COLUMNS, rows)
    else:
        _emit(_envelope(
            "phase",
            {"alphas": args.alphas, "betas": args.betas, "k": args.k,
             "nx": args.nx, "ny": args.ny, "ymax": args.ymax, "tol": args.tol},
            {"cells": rows},
            {"requested": args.tol, "hexagonal_tol": minimize.HEX_CLASS_TOL}))
    return 0


def cmd_verify(args) -> int:
    kwargs: dict = {"n_alpha": args.n_alpha, "n_y": args.n_y}
    if args.alpha_min is not None or args.alpha_max is not None:
        if args.alpha_min is None or args.alpha_max is None:
            raise ValueError("provide both --alpha-min and --alpha-max")
        kwargs["alpha_range"] = (args.alpha_min, args.alpha_max)
    if args.y_min is not None or args.y_max is not None:
        if args.y_min is None or args.y_max is None:
            raise ValueError("provide both --y-min and --y-max")
        kwargs["y_range"] = (args.y_min, args.y_max)
    if args.beta is not None:
        kwargs["beta"] = args.beta
    report = bounds.verify_sweep(args.claim, **kwargs)
    if args.format == "csv":
        _emit_csv(["name", "grid", "min", "argmin_a", "argmin_b", "holds"], [{
            "name": report.name, "grid": report.grid_spec,
            "min": report.min_value, "argmin_a": report.argmin[0],
            "argmin_b": report.argmin[1], "holds": report.claim_holds,
        }])
    else:
        _emit(_envelope("verify",
                        {"claim": args.claim, **{k: str(v) for k, v in kwargs.items()}},
                        report.to_dict(),
                        {"margin": report.min_value}))
    return 0 if report.claim_holds else EXIT_CLAIM_VIOLATED


def cmd_energy(args) -> int:
    with open(args.spec_file, encoding="utf-8") as fh:
        spec = potentials.PotentialSpec.from_json(fh.read())
    if args.scan:
        report = potentials.minimize_energy(spec, args.tol, args.nx, args.ny,
                                            args.ymax)
        results = report.to_dict()
    else:
        if args.x is None or args.y is None:
            raise ValueError("provide --x and --y, or pass --scan")
        z = UpperHalfPoint(args.x, args.y)
        results = {"value": potentials.lattice_energy(spec, z, args.tol)}
    _emit(_envelope(
        "energy",
        {"spec": spec.to_dict(), "x": args.x, "y": args.y, "scan": args.scan,
         "tol": args.tol},
        results,
        {"requested": args.tol}))
    return 0


_COMMANDS = {
    "eval": cmd_eval,
    "reduce": cmd_reduce,
    "scan": cmd_scan,
    "phase": cmd_phase,
    "verify": cmd_verify,
    "energy": cmd_energy,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError,
            GridOutsideWindowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ThetaminError, ArithmeticError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE_FAILURE


if __name__ == "__main__":
    sys.exit(main())
