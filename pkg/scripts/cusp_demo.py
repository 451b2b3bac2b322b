"""Walk the cusp ideal <x^2 - y^3, x^3 - y^2 - x> from degrevlex to lex,
printing every facet and the basis reached after crossing it."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from gbwalk.cli import parse_problem
from gbwalk.groebner import buchberger
from gbwalk.orders import parse_order
from gbwalk.poly import format_marked
from gbwalk.walk import generic_walk

DEFAULT_PROBLEM = Path(__file__).with_name("data") / "cusp.txt"


@dataclass
class DemoConfig:
    problem: Path = DEFAULT_PROBLEM
    source: str = ""  # empty: use the file's from: header
    target: str = ""  # empty: use the file's to: header


def show(basis, order, names):
    for g in basis.sorted(order):
        print("   ", format_marked(g, names, key=order.key))


def run(cfg: DemoConfig):
    problem = parse_problem(cfg.problem.read_text())
    names = problem.names
    o1 = parse_order(cfg.source or problem.orders.get("from", "degrevlex"), len(names))
    o2 = parse_order(cfg.target or problem.orders.get("to", "lex"), len(names))
    G = buchberger([f for f, _, _ in problem.generators], o1)
    print(f"start basis over {o1.name}:")
    show(G, o1, names)
    _, trace = generic_walk(G, o1, o2)
    for k, step in enumerate(trace.steps, 1):
        print(f"step {k}: facet {step.facet}  |H|={step.facet_basis_size}  |G|={step.basis_size}")
        show(step.basis, o2, names)
    print(f"trace: {trace.facets_text()}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--problem", type=Path, default=DemoConfig.problem)
    ap.add_argument("--source", default="")
    ap.add_argument("--target", default="")
    run(DemoConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
