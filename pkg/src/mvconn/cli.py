"""Command-line front end: ``mvconn check | eval | table``.

Exit status is 0 when every check passes, 1 when any fails and 2 for
usage or input errors.
"""
import argparse
import json
import re
import sys

from . import connectives as conn
from .errors import InfiniteCarrier, LatticeError
from .expr import evaluate, render_value
from .hyperops import HyperConnective
from .lattice import UNIT, boolean, chain, load_lattice, render
from .report import Report
from .sampling import Sampling
from .verifier import (check_hyper_duality, check_induced_order, check_order_characterization,
                       check_superlattice, run_regression)

SUITES = {
    "full": "full",
    "superlattice": "superlattice",
    "duality": "duality",
    "cond32": "distributivity",
    "distributivity": "distributivity",
    "a6a8": "induced-order",
    "induced-order": "induced-order",
    "prop41": "characterization",
    "characterization": "characterization",
}


class UsageError(Exception):
    pass


def parse_carrier(text):
    if text == "unit":
        return UNIT
    m = re.fullmatch(r"chain:(\d+)", text)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise UsageError("--carrier: chain:N requires N >= 2")
        return chain(n)
    m = re.fullmatch(r"bool:(\d+)", text)
    if m:
        n = int(m.group(1))
        if not 1 <= n <= 5:
            raise UsageError("--carrier: bool:N requires 1 <= N <= 5")
        return boolean(n)
    if re.fullmatch(r"(chain|bool):.*", text):
        raise UsageError(f"--carrier: cannot read {text!r}")
    return load_lattice(text)


def _pair(name, carrier):
    try:
        return conn.get_pair(name, carrier)
    except KeyError as e:
        raise UsageError(f"--pair/--quad: {e.args[0]}") from None


def selection(args, carrier):
    """``(pair, quad)`` with exactly one set; defaults to the meet-join pair."""
    if args.pair and args.quad:
        raise UsageError("--pair and --quad are mutually exclusive")
    if args.quad:
        names = [n.strip() for n in args.quad.split(",")]
        if len(names) != 2 or not all(names):
            raise UsageError("--quad: expected two pair names separated by a comma")
        return None, tuple(_pair(n, carrier) for n in names)
    return _pair(args.pair or "meet-join", carrier), None


def hyper(carrier, pair, quad, sampling):
    if pair is not None:
        meet_join = conn.builtin_pair("meet-join", carrier)
        return HyperConnective.from_pair(pair), conn.make_quadruple(pair, meet_join, sampling)
    q = conn.make_quadruple(*quad, sampling)
    return HyperConnective.from_quadruple(q), q


def _sampling(args):
    if args.samples < 1 or args.denominator_bound < 1:
        raise UsageError("--samples and --denominator-bound must be positive")
    return Sampling(args.samples, args.seed, args.denominator_bound)


def _load(args):
    carrier = parse_carrier(args.carrier)
    if carrier.finite and len(carrier) > args.max_elements:
        raise UsageError(f"--carrier: {len(carrier)} elements exceeds --max-elements {args.max_elements}")
    return carrier


def cmd_check(args, out):
    carrier = _load(args)
    sampling = _sampling(args)
    pair, quad = selection(args, carrier)
    suite = SUITES[args.suite]
    if suite == "full":
        report = run_regression(carrier, pair=pair, quad=quad, sampling=sampling)
    elif suite == "duality":
        report = Report("duality", params={"carrier": carrier.name})
        for p in ([pair] if pair else list({p.name: p for p in quad}.values())):
            report.extend(conn.check_duality(p, sampling), f"duality[{p.name}]")
        report.extend(check_hyper_duality(hyper(carrier, pair, quad, sampling)[0], sampling), "hyper-duality")
    elif suite == "distributivity":
        report = Report("distributivity", params={"carrier": carrier.name})
        for p in ([pair] if pair else list({p.name: p for p in quad}.values())):
            report.extend(conn.check_distributivity(p, sampling), f"distributivity[{p.name}]")
    else:
        H, q = hyper(carrier, pair, quad, sampling)
        if suite == "superlattice":
            report = check_superlattice(H, sampling)
        elif suite == "induced-order":
            report = check_induced_order(H)[0]
        else:
            report = check_order_characterization(q, sampling)
    if args.format == "json":
        out.write(report.to_json(carrier.render) + "\n")
    else:
        out.write(report.to_text(carrier.render) + "\n")
    return 0 if report.passed else 1


def cmd_eval(args, out):
    carrier = _load(args)
    sampling = _sampling(args)
    pair, quad = selection(args, carrier)
    H, _ = hyper(carrier, pair, quad, sampling)
    value = evaluate(args.expression, H)
    if args.format == "json":
        out.write(json.dumps({"expression": args.expression, "value": render_value(carrier, value)}) + "\n")
    else:
        out.write(render_value(carrier, value) + "\n")
    return 0


def cmd_table(args, out):
    carrier = _load(args)
    if not carrier.finite:
        raise InfiniteCarrier("table needs a finite carrier; use chain:N to discretize the unit interval")
    sampling = _sampling(args)
    pair, quad = selection(args, carrier)
    H, _ = hyper(carrier, pair, quad, sampling)
    op = H.op(args.op)
    xs = carrier.elements()
    cells = [[op(x, y) for y in xs] for x in xs]
    labels = [carrier.render(x) for x in xs]
    if args.format == "json":
        out.write(json.dumps({"carrier": carrier.name, "connective": H.name, "op": args.op,
                              "elements": labels, "rows": [[str(c) for c in row] for row in cells]},
                             indent=2) + "\n")
        return 0
    grid = [[args.op] + labels] + [[labels[i]] + [str(c) for c in row] for i, row in enumerate(cells)]
    widths = [max(len(r[k]) for r in grid) for k in range(len(grid[0]))]
    for r, row in enumerate(grid):
        line = "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        out.write(line + "\n")
        if r == 0:
            out.write("-" * len(line) + "\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="mvconn", description="Interval-valued t-norms and t-conorms.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--carrier", required=True,
                        help="unit, chain:N, bool:N, or path to a lattice JSON document")
    common.add_argument("--pair", help=f"dual pair ({', '.join(conn.BUILTINS)} or a document pair)")
    common.add_argument("--quad", help="two pairs 'LOWER,UPPER' for the generalized construction")
    common.add_argument("--samples", type=int, default=10_000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--denominator-bound", type=int, default=64)
    common.add_argument("--max-elements", type=int, default=64)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES), default="full")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expression")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", parents=[common], help="print the full ⊓ or ⊔ table")
    p.add_argument("--op", choices=("hmeet", "hjoin"), default="hmeet")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, LatticeError) as e:
        kind = type(e).__name__
        witness = getattr(e, "witness", None)
        msg = f"mvconn: error: {kind}: {e}"
        if witness:
            msg += " [witness: " + ", ".join(map(render, witness)) + "]"
        err.write(msg + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
