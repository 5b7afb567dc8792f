"""Command-line interface: ``gammalcm <command> ...``.

Exit codes: 0 consistent / success, 1 violation located (or oracle
disagreement), 2 usage, parse or domain error.  Numbers are written with 17
significant digits so CSV and JSON output round-trips to the bit.
"""

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings

from . import __version__
from .checker import (
    DEFAULT_GRID,
    DEFAULT_ORDER,
    TOLERANCE_FLOOR,
    GridSpec,
    Mode,
    finite_difference_crosscheck,
    sign_table,
    sweep,
    sweep_values,
)
from .errors import ConditioningWarning
from .families import parse_family, parse_number
from .specfun import gamma_quadrature, ln_gamma, polygamma, polygamma_quadrature
from .theorem import classify, find_violation, violation_tolerance

__all__ = ["main", "build_parser", "OUTDIR_ENV"]

OUTDIR_ENV = "GAMMALCM_OUTDIR"
EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2

ORACLE_TOLERANCE = {
    "polygamma-quadrature": 1e-8,
    "gamma-quadrature": 1e-9,
    "finite-difference": 1e-6,
}


def _num(v):
    return format(float(v), ".17g")


class _Emitter:
    """Collects one document and writes it to stdout or ``--out``."""

    def __init__(self, args):
        self.fmt = args.format
        self.out = getattr(args, "out", None)

    def write(self, human, header, rows, payload):
        if self.fmt == "json":
            text = json.dumps(payload, indent=2, allow_nan=True) + "\n"
        elif self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
            text = buf.getvalue()
        else:
            text = human.rstrip("\n") + "\n"
        if self.out:
            path = self.out
            outdir = os.environ.get(OUTDIR_ENV)
            if outdir and not os.path.isabs(path):
                os.makedirs(outdir, exist_ok=True)
                path = os.path.join(outdir, path)
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


# ---------------------------------------------------------------------------
# argument plumbing


def _number(text):
    try:
        return parse_number(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_output(p):
    p.add_argument("--format", choices=("human", "csv", "json"), default="human")
    p.add_argument("--out", help=f"write to this file (relative paths resolve against ${OUTDIR_ENV})")


def _add_grid(p):
    p.add_argument("--x-min", type=_number, default=DEFAULT_GRID.x_min)
    p.add_argument("--x-max", type=_number, default=DEFAULT_GRID.x_max)
    p.add_argument("--points", type=int, default=DEFAULT_GRID.points)
    p.add_argument("--spacing", choices=("log", "linear"), default=DEFAULT_GRID.spacing)
    p.add_argument("--K", "-K", dest="K", type=int, default=DEFAULT_ORDER, help="highest derivative order")
    p.add_argument("--mode", choices=("lcm", "cm"), default="lcm")


def _grid(args):
    return GridSpec(args.x_min, args.x_max, args.points, args.spacing)


def _add_abc(p):
    p.add_argument("--a", type=_number, required=True)
    p.add_argument("--b", type=_number, required=True)
    p.add_argument("--c", type=_number, required=True)


def _verdict_payload(v):
    if v.ok:
        return {"status": "consistent", "order": v.order, "tolerance": v.tolerance}
    return {"status": "violation", "k": v.k, "x": v.x, "value": v.value, "confirmation": v.confirmation}


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args, out):
    spec = parse_family(args.family)
    value = spec.evaluate(args.x)
    out.write(
        _num(value),
        ["family", "x", "value"],
        [[spec.text(), _num(args.x), _num(value)]],
        {"family": spec.text(), "x": args.x, "value": value},
    )
    return EXIT_OK


def cmd_classify(args, out):
    r = classify(args.a, args.b, args.c)
    human = f"{r.region}  threshold={_num(r.threshold)}  margin={_num(r.margin)}"
    out.write(
        human,
        ["a", "b", "c", "region", "threshold", "margin"],
        [[_num(args.a), _num(args.b), _num(args.c), str(r.region), _num(r.threshold), _num(r.margin)]],
        {"a": args.a, "b": args.b, "c": args.c, "region": str(r.region), "threshold": r.threshold, "margin": r.margin},
    )
    return EXIT_OK


def cmd_check(args, out):
    spec = parse_family(args.family)
    grid = _grid(args)
    table = sign_table(spec, grid, args.K, Mode(args.mode))
    v = table.verdict
    rows = [[k, _num(x), _num(val), flag] for k, x, val, flag in table.rows()]
    if v.ok:
        human = f"{table.family}: {v}  ({table.mode} mode, {grid.points} points on [{grid.x_min}, {grid.x_max}])"
    else:
        human = f"{table.family}: {v}  [{v.confirmation}]"
    payload = {
        "family": table.family,
        "mode": str(table.mode),
        "grid": grid.as_dict(),
        "max_order": table.max_order,
        "tolerance_floor": TOLERANCE_FLOOR,
        "verdict": _verdict_payload(v),
        "entries": [
            {"k": k, "x": x, "value": val, "tolerance": float(table.tolerances[r, i]), "verdict": flag}
            for r, k in enumerate(table.orders)
            for i, (x, val) in enumerate(zip(table.xs.tolist(), table.entries[r].tolist()))
            for flag in ("violation" if val < -table.tolerances[r, i] else "ok",)
        ],
    }
    out.write(human, ["k", "x", "value", "verdict"], rows, payload)
    return EXIT_OK if v.ok else EXIT_VIOLATION


def cmd_find_violation(args, out):
    orders = range(1, args.k + 1) if args.up_to else (args.k,)
    hit = None
    for k in orders:
        found = find_violation(args.a, args.b, args.c, k, args.x_max)
        if found is not None:
            hit = (k, *found)
            break
    tol = violation_tolerance(args.c)
    base = {"a": args.a, "b": args.b, "c": args.c, "x_max": args.x_max, "tolerance": tol}
    if hit is None:
        out.write(
            f"no violation found for k in {list(orders)} on (0, {args.x_max}]",
            ["k", "x", "value", "verdict"],
            [],
            dict(base, verdict={"status": "none"}),
        )
        return EXIT_OK
    k, x, value = hit
    out.write(
        f"violation at k={k}: x={_num(x)} value={_num(value)}",
        ["k", "x", "value", "verdict"],
        [[k, _num(x), _num(value), "violation"]],
        dict(base, verdict={"status": "violation", "k": k, "x": x, "value": value}),
    )
    return EXIT_VIOLATION


def cmd_sweep(args, out):
    values = sweep_values(args.start, args.stop, args.step)
    grid = _grid(args)
    results = sweep(args.template, args.free, values, grid, args.K, Mode(args.mode), args.workers)
    rows, lines, items = [], [], []
    for row in results:
        v = row.verdict
        if row.error:
            rows.append([_num(row.param), "error", "", "", ""])
            items.append({"param": row.param, "verdict": "error", "error": row.error})
            lines.append(f"{_num(row.param)}  error  {row.error}")
        elif v.ok:
            rows.append([_num(row.param), "consistent", "", "", ""])
            items.append({"param": row.param, "verdict": "consistent"})
            lines.append(f"{_num(row.param)}  {v}")
        else:
            rows.append([_num(row.param), "violation", v.k, _num(v.x), _num(v.value)])
            items.append({"param": row.param, "verdict": "violation", "k": v.k, "x": v.x, "value": v.value})
            lines.append(f"{_num(row.param)}  {v}")
    payload = {
        "template": args.template,
        "free": args.free,
        "mode": args.mode,
        "grid": grid.as_dict(),
        "max_order": args.K,
        "tolerance_floor": TOLERANCE_FLOOR,
        "rows": items,
    }
    out.write("\n".join(lines) or "empty sweep", ["param", "verdict", "k", "x", "value"], rows, payload)
    labels = {r.label for r in results}
    if "error" in labels:
        return EXIT_ERROR
    return EXIT_VIOLATION if "violation" in labels else EXIT_OK


def cmd_oracle(args, out):
    check = args.check
    if check == "polygamma-quadrature":
        if args.n is None:
            raise ValueError("polygamma-quadrature needs --n")
        fast, slow = polygamma(args.n, args.x), polygamma_quadrature(args.n, args.x)
        where = {"n": args.n, "x": args.x}
    elif check == "gamma-quadrature":
        fast, slow = ln_gamma(args.x), math.log(gamma_quadrature(args.x))
        where = {"x": args.x}
    else:
        if args.family is None:
            raise ValueError("finite-difference needs --family")
        spec = parse_family(args.family)
        fast, slow, _ = finite_difference_crosscheck(spec, args.x, args.k)
        where = {"family": spec.text(), "x": args.x, "k": args.k}
    scale = max(abs(fast), abs(slow))
    rel = 0.0 if scale == 0.0 else abs(fast - slow) / scale
    tol = ORACLE_TOLERANCE[check]
    verdict = "agree" if rel <= tol else "disagree"
    out.write(
        f"{check}: fast={_num(fast)} oracle={_num(slow)} rel_err={rel:.3e} ({verdict}, tolerance {tol:g})",
        ["check", "fast", "oracle", "rel_err", "tolerance", "verdict"],
        [[check, _num(fast), _num(slow), _num(rel), _num(tol), verdict]],
        dict(where, check=check, fast=fast, oracle=slow, rel_err=rel, tolerance=tol, verdict=verdict),
    )
    return EXIT_OK if verdict == "agree" else EXIT_VIOLATION


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gammalcm",
        description="Gamma-ratio families, log-complete-monotonicity checks and oracles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a family at one point")
    p.add_argument("family", help="family text, e.g. general-ratio:a=1,b=0.5,c=2sqrtpi")
    p.add_argument("--x", type=_number, required=True)
    _add_output(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("classify", help="place (a, b, c) in the sufficient regions")
    _add_abc(p)
    _add_output(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", help="sign table of signed derivatives over a grid")
    p.add_argument("family")
    _add_grid(p)
    _add_output(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find-violation", help="scan for a negative log-derivative of the general ratio")
    _add_abc(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--up-to", action="store_true", help="try every order 1..k")
    p.add_argument("--x-max", type=_number, default=100.0)
    _add_output(p)
    p.set_defaults(func=cmd_find_violation)

    p = sub.add_parser("sweep", help="verdicts across one free parameter")
    p.add_argument("template", help="family text with the free parameter left out")
    p.add_argument("--free", required=True)
    p.add_argument("--from", dest="start", type=_number, required=True)
    p.add_argument("--to", dest="stop", type=_number, required=True)
    p.add_argument("--step", type=_number, required=True)
    p.add_argument("--workers", type=int, default=1)
    _add_grid(p)
    _add_output(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="compare a fast path against its independent oracle")
    p.add_argument("check", choices=sorted(ORACLE_TOLERANCE))
    p.add_argument("--n", type=int)
    p.add_argument("--x", type=_number, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--family")
    _add_output(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConditioningWarning)
            return args.func(args, _Emitter(args))
    except BrokenPipeError:
        # reader went away (``| head``); silence the flush at interpreter exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_ERROR
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"gammalcm {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
