"""Command-line front end: ``gbwalk gb|walk|walk-classic|knapsack``.

Problem files hold header lines ``vars: x, y`` (required) and optionally
``order:``, ``from:``, ``to:``, followed by one generator per line.  ``#``
starts a comment.  A generator may mark one term as ``[term]``.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 parse or validation error, 3 step cap or internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (
    GroebnerError,
    InvalidInputBasis,
    NonMonomialNormalForm,
    ParseError,
    StepCapExceeded,
)
from .groebner import MarkedBasis, buchberger
from .orders import MatrixOrder, parse_order
from .poly import (
    DEFAULT_STEP_CAP,
    MarkedPolynomial,
    default_names,
    format_marked,
    parse_marked,
)
from .toric import (
    KnapsackInstance,
    compute_test_set,
    default_query_bound,
    format_stats,
    solve_feasibility,
)
from .walk import WalkOptions, classic_walk, generic_walk

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3

_HEADER = re.compile(r"^\s*(vars|order|from|to)\s*:(.*)$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass
class ProblemFile:
    names: tuple
    generators: list  # (Polynomial, marked monomial or None, line number)
    orders: dict = field(default_factory=dict)  # header key -> spec text

    @property
    def nvars(self):
        return len(self.names)


def parse_problem(text: str) -> ProblemFile:
    names = None
    orders = {}
    pending = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m:
            key, value = m.group(1), m.group(2).strip()
            if key == "vars":
                if names is not None:
                    raise ParseError("duplicate vars declaration", line=lineno)
                names = tuple(v.strip() for v in value.split(",") if v.strip())
                if not names:
                    raise ParseError("vars declaration is empty", line=lineno)
                bad = [v for v in names if not _NAME.match(v)]
                if bad:
                    raise ParseError(f"invalid variable name {bad[0]!r}", line=lineno)
                if len(set(names)) != len(names):
                    raise ParseError("variable names must be unique", line=lineno)
            else:
                orders[key] = value
            continue
        pending.append((lineno, line))
    if names is None:
        raise ParseError("missing 'vars:' declaration", line=1)
    gens = []
    for lineno, line in pending:
        try:
            f, mark = parse_marked(line, names)
        except ParseError as e:
            raise e.at_line(lineno) from None
        if not f:
            raise ParseError("generator is the zero polynomial", line=lineno)
        gens.append((f, mark, lineno))
    return ProblemFile(names, gens, orders)


def parse_rational_vector(text: str, n: int) -> tuple:
    parts = [p.strip() for p in text.strip().strip("()[]").split(",")]
    try:
        vec = tuple(Fraction(p) for p in parts if p)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed rational vector {text!r}") from None
    if len(vec) != n:
        raise ParseError(f"vector {text!r} has {len(vec)} entries, ring has {n} variables")
    return vec


def _parse_truncate(text):
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"--truncate expects 'p,q', got {text!r}") from None
    return p, q


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _order(args, problem, key, default):
    spec = getattr(args, key if key != "from" else "from_", None) or problem.orders.get(key) or default
    return spec, parse_order(spec, problem.nvars)


def _format_basis(basis: MarkedBasis, order: MatrixOrder, names, brackets=False):
    return [format_marked(g, names, key=order.key, bracket=brackets) for g in basis.sorted(order)]


def _emit(out, names, order_spec, basis, order, args, trace=None):
    lines = _format_basis(basis, order, names, args.mark)
    if args.json:
        doc = {"vars": list(names), "order": order_spec, "basis": lines}
        if trace is not None:
            doc["trace"] = trace.to_json()
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    if trace is not None and args.trace:
        out.write(f"# trace: {trace.facets_text()}".rstrip() + "\n")
        for row in trace.to_text().splitlines():
            out.write(f"# {row}\n")
    out.write("vars: " + ", ".join(names) + "\n")
    out.write(f"order: {order_spec}\n")
    for line in lines:
        out.write(line + "\n")


def _walk_options(args):
    return WalkOptions(
        truncate=_parse_truncate(args.truncate) if args.truncate else None,
        step_cap=args.step_cap,
        group_order=args.group_order,
        validate=not args.no_validate,
    )


def _start_basis(problem, o1, args) -> MarkedBasis:
    args.names = problem.names  # for diagnostics
    if not problem.generators:
        raise InvalidInputBasis("no generators given")
    bodies = [f for f, _, _ in problem.generators]
    if args.start_gb:
        return buchberger(bodies, o1, args.step_cap, group_order=args.group_order)
    members = []
    for f, mark, _ in problem.generators:
        g = MarkedPolynomial(f, mark) if mark is not None else MarkedPolynomial.by_order(f, o1)
        members.append(g.monic())
    return MarkedBasis(tuple(members), o1)


def cmd_gb(args, out):
    problem = parse_problem(_read(args.input))
    spec, order = _order(args, problem, "order", "lex")
    basis = buchberger(
        [f for f, _, _ in problem.generators],
        order,
        args.step_cap,
        group_order=args.group_order,
        degree_first=args.degree_first,
    )
    _emit(out, problem.names, spec, basis, order, args)


def cmd_walk(args, out):
    problem = parse_problem(_read(args.input))
    _, o1 = _order(args, problem, "from", "degrevlex")
    spec2, o2 = _order(args, problem, "to", "lex")
    G = _start_basis(problem, o1, args)
    basis, trace = generic_walk(G, o1, o2, _walk_options(args))
    _emit(out, problem.names, spec2, basis, o2, args, trace)


def cmd_walk_classic(args, out):
    problem = parse_problem(_read(args.input))
    _, o1 = _order(args, problem, "from", "degrevlex")
    spec2, o2 = _order(args, problem, "to", "lex")
    w0 = parse_rational_vector(args.w0, problem.nvars)
    t0 = parse_rational_vector(args.t0, problem.nvars)
    G = _start_basis(problem, o1, args)
    basis, trace = classic_walk(G, o1, o2, w0, t0, _walk_options(args))
    _emit(out, problem.names, spec2, basis, o2, args, trace)


def _queries(args):
    qs = list(args.b or [])
    if args.queries:
        for lineno, line in enumerate(_read(args.queries).splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                qs.append(int(line))
            except ValueError:
                raise ParseError(f"query {line!r} is not an integer", line=lineno) from None
    if any(b < 0 for b in qs):
        raise ParseError("queries must be non-negative integers")
    return qs


def cmd_knapsack(args, out):
    inst = KnapsackInstance.parse(_read(args.instance))
    queries = _queries(args)
    if args.all:
        queries += range(default_query_bound(inst) + 1)
    opts = WalkOptions(step_cap=args.step_cap, validate=not args.no_validate)
    G, trace = compute_test_set(inst, opts)
    names = inst.variable_names()
    results = [solve_feasibility(G, inst, b, args.step_cap) for b in queries]
    if args.json:
        doc = {
            "coefficients": list(inst.coefficients),
            "vars": list(names),
            "test_set": _format_basis(G, G.order, names, args.mark),
            "trace": trace.to_json(),
            "stats": {"Gsigma": inst.n, "Gtau": len(G), "steps": trace.total_steps},
            "queries": [
                {"b": r.b, "feasible": r.feasible, "t": r.t, "x": list(r.x)} for r in results
            ],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    if args.stats:
        out.write(format_stats(inst, G, trace) + "\n")
    if args.trace:
        out.write(f"# trace: {trace.facets_text()}".rstrip() + "\n")
    if not args.no_basis:
        out.write("vars: " + ", ".join(names) + "\n")
        out.write("order: knapsack-target\n")
        for line in _format_basis(G, G.order, names, args.mark):
            out.write(line + "\n")
    for r in results:
        out.write(r.line() + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbwalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP, metavar="N",
                       help="reduction step budget (default %(default)s)")
        p.add_argument("--group-order", action="store_true",
                       help="allow orders that are not term orders")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--mark", action="store_true", help="bracket the marked term")

    def walking(p):
        p.add_argument("input", help="problem file ('-' for stdin)")
        p.add_argument("--from", dest="from_", metavar="ORDER", help="source order")
        p.add_argument("--to", metavar="ORDER", help="target order")
        p.add_argument("--trace", action="store_true", help="print the crossed facets")
        p.add_argument("--truncate", metavar="p,q", help="comparison depths")
        p.add_argument("--no-validate", action="store_true",
                       help="skip checking that the input is a marked reduced basis")
        p.add_argument("--start-gb", action="store_true",
                       help="compute the source basis from the generators first")
        common(p)

    p = sub.add_parser("gb", help="reduced Groebner basis by Buchberger's algorithm")
    p.add_argument("input", help="problem file ('-' for stdin)")
    p.add_argument("--order", metavar="ORDER", help="term order (default: file or lex)")
    p.add_argument("--degree-first", action="store_true",
                   help="select S-pairs by total degree of the lcm before the order")
    common(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("walk", help="generic Groebner walk")
    walking(p)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("walk-classic", help="classical Groebner walk along a weight line")
    walking(p)
    p.add_argument("--w0", required=True, help="start weight, e.g. 1,1 or 1/2,3")
    p.add_argument("--t0", required=True, help="target weight")
    p.set_defaults(func=cmd_walk_classic)

    p = sub.add_parser("knapsack", help="knapsack test set and feasibility queries")
    p.add_argument("instance", help="file with one line of positive integers a1 ... an")
    p.add_argument("queries", nargs="?", help="file with one right-hand side b per line")
    p.add_argument("-b", type=int, action="append", help="a right-hand side (repeatable)")
    p.add_argument("--all", action="store_true", help="query every b up to 10*max(a)")
    p.add_argument("--stats", action="store_true", help="print basis sizes and step count")
    p.add_argument("--trace", action="store_true", help="print the crossed facets")
    p.add_argument("--no-basis", action="store_true", help="do not print the test set")
    p.add_argument("--no-validate", action="store_true", help="skip input validation")
    common(p)
    p.set_defaults(func=cmd_knapsack)
    return parser


def main(argv: Optional[list] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except (StepCapExceeded, NonMonomialNormalForm) as e:
        err.write(f"gbwalk: error: {e}\n")
        return EXIT_INTERNAL
    except InvalidInputBasis as e:
        err.write(f"gbwalk: error: {e}\n")
        for g in getattr(e, "culprits", []):
            names = getattr(args, "names", None) or default_names(g.nvars)
            err.write(f"  offending member: {format_marked(g, names, bracket=True)}\n")
        return EXIT_INPUT
    except (ValueError, OSError) as e:
        err.write(f"gbwalk: error: {e}\n")
        return EXIT_INPUT
    except GroebnerError as e:
        err.write(f"gbwalk: internal error: {e}\n")
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
