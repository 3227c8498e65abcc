"""Command-line interface.

Subcommands::

    osculant fit PROBLEM [-o OUT]           dump weights and coefficient tables (JSON)
    osculant eval PROBLEM <grid> [...]      evaluate on a grid (CSV)
    osculant verify [PROBLEM | --seed S]    cross-check against the reference solver
    osculant demo-runge [...]               node-placement stability demonstration (CSV)

Exit codes: 0 success, 1 validation/parse failure, 2 verification failure,
3 size limit.  All output is deterministic: floats are emitted with their
shortest round-trip representation, rows in a fixed order, and randomness
only ever comes from an explicit seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .core import Interpolant
from .errors import GridSpecError, OsculantError, SizeLimitError
from .evaluate import eval_barycentric, eval_derivative, eval_direct, eval_grid
from .oracle import confluent_vandermonde_fit, poly_eval_deriv
from .problems import load_problem, problem_to_interpolant, random_problem

VERIFY_TOL = 1e-8


def _fmt(value: float) -> str:
    """Shortest decimal that round-trips to the same double."""
    return repr(float(value))


def _write_text(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _csv_text(header: list[str], rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


# ---------------------------------------------------------------------------
# fit
# ---------------------------------------------------------------------------

def cmd_fit(args) -> int:
    problem = load_problem(args.problem)
    interp = problem_to_interpolant(problem)
    payload: dict = {}
    if problem.label is not None:
        payload["label"] = problem.label
    payload.update(
        {
            "nodes": [float(v) for v in interp.nodes.nodes],
            "m": interp.order,
            "delta": [float(v) for v in interp.weights.delta],
            "a_table": [[float(v) for v in row] for row in interp.a_table.values],
            "b_table": [[float(v) for v in row] for row in interp.b_table.values],
            "lagrange_table": [[float(v) for v in row] for row in interp.basis.lagrange],
        }
    )
    _write_text(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _parse_grid(args) -> np.ndarray:
    has_at = args.at is not None
    has_range = args.start is not None or args.stop is not None or args.points is not None
    if has_at and has_range:
        raise GridSpecError("--at cannot be combined with --from/--to/--points")
    if has_at:
        tokens = [tok.strip() for tok in args.at.split(",")]
        try:
            points = [float(tok) for tok in tokens if tok]
        except ValueError as exc:
            raise GridSpecError(f"bad --at list: {exc}") from None
        if not points:
            raise GridSpecError("--at needs at least one point")
        return np.array(points)
    if args.start is None or args.stop is None or args.points is None:
        raise GridSpecError("grid spec needs either --at or all of --from/--to/--points")
    if args.points < 1:
        raise GridSpecError("--points must be >= 1")
    return np.linspace(args.start, args.stop, args.points)


def cmd_eval(args) -> int:
    problem = load_problem(args.problem)
    interp = problem_to_interpolant(problem)
    grid = _parse_grid(args)
    if args.deriv < 0:
        raise GridSpecError("--deriv must be >= 0")
    if args.deriv > 0 and args.method != "direct":
        raise GridSpecError(
            "derivatives are only available through the direct method; "
            "drop --method or set it to 'direct'"
        )
    if args.method == "both":
        direct = eval_grid(interp, grid, "direct")
        bary = eval_grid(interp, grid, "barycentric")
        rows = [
            (_fmt(x), _fmt(d), _fmt(b), _fmt(abs(d - b)))
            for x, d, b in zip(grid, direct, bary)
        ]
        text = _csv_text(["x", "direct", "barycentric", "abs_diff"], rows)
    else:
        if args.deriv > 0:
            values = [eval_derivative(interp, x, args.deriv) for x in grid]
        else:
            values = eval_grid(interp, grid, args.method)
        rows = [(_fmt(x), _fmt(v)) for x, v in zip(grid, values)]
        text = _csv_text(["x", "value"], rows)
    _write_text(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.problem is not None:
        problem = load_problem(args.problem)
        name = args.problem
    elif args.seed is not None:
        rng = np.random.default_rng(args.seed)
        problem = random_problem(rng, args.n, args.m)
        name = f"random problem (seed={args.seed}, n={args.n}, m={args.m})"
    else:
        raise GridSpecError("verify needs a problem file or --seed")
    if problem.label:
        name = problem.label

    interp = problem_to_interpolant(problem)
    fit = confluent_vandermonde_fit(interp.nodes, interp.data)

    nodes = interp.nodes.nodes
    grid = np.linspace(nodes.min(), nodes.max(), 100)
    reference = np.array([poly_eval_deriv(fit, x, 0) for x in grid])
    denom = 1.0 + float(np.abs(reference).max())
    dev_direct = float(np.abs(eval_grid(interp, grid, "direct") - reference).max()) / denom
    dev_bary = float(np.abs(eval_grid(interp, grid, "barycentric") - reference).max()) / denom

    dev_nodes = 0.0
    for i, x_i in enumerate(nodes):
        for p in range(interp.order + 1):
            prescribed = interp.data.values[i, p]
            err = abs(eval_derivative(interp, x_i, p) - prescribed) / (1.0 + abs(prescribed))
            dev_nodes = max(dev_nodes, err)

    print(f"verify: {name} (nodes={len(interp.nodes)}, m={interp.order}, "
          f"degree<={interp.degree_bound})")
    print(f"oracle residual (scale-relative):     {fit.residual:.3e}")
    print(f"max deviation, direct vs oracle:      {dev_direct:.3e}")
    print(f"max deviation, barycentric vs oracle: {dev_bary:.3e}")
    print(f"max deviation, node conditions:       {dev_nodes:.3e}")
    ok = max(dev_direct, dev_bary, dev_nodes) <= VERIFY_TOL
    print(f"result: {'PASS' if ok else 'FAIL'} (tolerance {VERIFY_TOL:.1e})")
    return 0 if ok else 2


# ---------------------------------------------------------------------------
# demo-runge
# ---------------------------------------------------------------------------

def _runge(x: float) -> float:
    return 1.0 / (1.0 + 25.0 * x * x)


def _runge_prime(x: float) -> float:
    u = 1.0 + 25.0 * x * x
    return -50.0 * x / (u * u)


def _family_nodes(family: str, count: int) -> list[float]:
    if count == 1:
        return [0.0]
    n = count - 1
    if family == "equispaced":
        return [-1.0 + 2.0 * k / n for k in range(count)]
    # Chebyshev points of the second kind, ascending.
    return [math.cos((n - j) * math.pi / n) for j in range(count)]


def _runge_interpolant(family: str, count: int, m: int) -> Interpolant:
    from .core import build_data, build_interpolant, build_nodeset

    nodes = _family_nodes(family, count)
    if m == 0:
        data = [[_runge(x)] for x in nodes]
    else:
        data = [[_runge(x), _runge_prime(x)] for x in nodes]
    return build_interpolant(build_nodeset(nodes), build_data(data))


def cmd_demo_runge(args) -> int:
    families = ["equispaced", "chebyshev"] if args.family == "both" else [args.family]
    grid = [-1.0 + 2.0 * t / 1000.0 for t in range(1001)]
    rows = []
    summary = sys.stderr if args.output is None else sys.stdout
    for count in args.counts:
        if count < 1:
            raise GridSpecError("node counts must be >= 1")
        max_err = {}
        for family in families:
            interp = _runge_interpolant(family, count, args.m)
            values = eval_grid(interp, grid, "barycentric")
            worst = 0.0
            for x, p_x in zip(grid, values):
                f_x = _runge(x)
                err = abs(f_x - p_x)
                worst = max(worst, err)
                rows.append((family, str(count), _fmt(x), _fmt(f_x), _fmt(p_x), _fmt(err)))
            max_err[family] = worst
            print(f"demo-runge: family={family} nodes={count} m={args.m} "
                  f"max_abs_error={worst:.6e}", file=summary)
        if len(families) == 2:
            ratio = max_err["chebyshev"] / max_err["equispaced"]
            print(f"demo-runge: nodes={count} chebyshev/equispaced error ratio "
                  f"= {ratio:.3e}", file=summary)
    text = _csv_text(["family", "n_nodes", "x", "f", "interpolant", "abs_error"], rows)
    _write_text(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the validation code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="osculant",
        description="Osculating (Hermite-type) polynomial interpolation tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fit = sub.add_parser("fit", parents=[], help="dump interpolant tables as JSON")
    p_fit.add_argument("problem", help="problem JSON file")
    p_fit.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p_fit.set_defaults(func=cmd_fit)

    p_eval = sub.add_parser("eval", help="evaluate the interpolant on a grid (CSV)")
    p_eval.add_argument("problem", help="problem JSON file")
    p_eval.add_argument("--at", default=None, help="comma-separated evaluation points")
    p_eval.add_argument("--from", dest="start", type=float, default=None,
                        help="grid start (with --to/--points)")
    p_eval.add_argument("--to", dest="stop", type=float, default=None, help="grid end")
    p_eval.add_argument("--points", type=int, default=None, help="grid size (>= 1)")
    p_eval.add_argument("--method", choices=["direct", "barycentric", "both"],
                        default="direct", help="evaluation method (default direct)")
    p_eval.add_argument("--deriv", type=int, default=0,
                        help="derivative order (direct method only)")
    p_eval.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="cross-check against the reference solver")
    p_verify.add_argument("problem", nargs="?", default=None, help="problem JSON file")
    p_verify.add_argument("--seed", type=int, default=None,
                          help="generate a random problem instead of reading one")
    p_verify.add_argument("--n", type=int, default=4,
                          help="node index bound for --seed (default 4, i.e. 5 nodes)")
    p_verify.add_argument("--m", type=int, default=3,
                          help="derivative order for --seed (default 3)")
    p_verify.set_defaults(func=cmd_verify)

    p_demo = sub.add_parser("demo-runge", help="node-placement stability demonstration")
    p_demo.add_argument("--counts", type=int, nargs="+", default=[20],
                        help="node counts to run (default 20)")
    p_demo.add_argument("--family", choices=["equispaced", "chebyshev", "both"],
                        default="both", help="node family (default both)")
    p_demo.add_argument("--m", type=int, choices=[0, 1], default=1,
                        help="derivative order (default 1)")
    p_demo.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p_demo.set_defaults(func=cmd_demo_runge)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"osculant: {exc}", file=sys.stderr)
        return 3
    except OsculantError as exc:
        print(f"osculant: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"osculant: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
