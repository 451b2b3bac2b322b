"""Build knapsack test sets for random instances, report their sizes and
walk lengths, and check every feasibility verdict against a dynamic program."""

import argparse
import random
import time
from dataclasses import asdict, dataclass

from gbwalk.toric import KnapsackInstance, compute_test_set, format_stats, solve_feasibility


@dataclass
class KnapsackConfig:
    seed: int = 0
    count: int = 10
    max_items: int = 4
    max_coefficient: int = 30
    query_factor: int = 10  # queries b = 0 .. query_factor * max(a)


def reachable(a, bound):
    reach = [False] * (bound + 1)
    reach[0] = True
    for b in range(1, bound + 1):
        reach[b] = any(b >= ai and reach[b - ai] for ai in a)
    return reach


def run(cfg: KnapsackConfig):
    rng = random.Random(cfg.seed)
    print("config:", asdict(cfg))
    errors = 0
    for _ in range(cfg.count):
        a = tuple(rng.randint(1, cfg.max_coefficient) for _ in range(rng.randint(1, cfg.max_items)))
        inst = KnapsackInstance(a)
        t0 = time.perf_counter()
        G, trace = compute_test_set(inst)
        elapsed = time.perf_counter() - t0
        bound = cfg.query_factor * max(a)
        reach = reachable(a, bound)
        feasible = 0
        for b in range(bound + 1):
            r = solve_feasibility(G, inst, b)
            feasible += r.feasible
            witness_ok = not r.feasible or sum(x * ai for x, ai in zip(r.x, a)) == b
            errors += (r.feasible != reach[b]) + (not witness_ok)
        print(
            f"a={' '.join(map(str, a)):<14} {format_stats(inst, G, trace):<34} "
            f"{elapsed * 1000:8.1f} ms  feasible {feasible}/{bound + 1}"
        )
    print(f"errors: {errors}")
    return errors


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, value in asdict(KnapsackConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(value), default=value)
    raise SystemExit(1 if run(KnapsackConfig(**vars(ap.parse_args()))) else 0)


if __name__ == "__main__":
    main()
