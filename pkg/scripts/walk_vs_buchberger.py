"""Time the generic walk, the classic walk and a direct Buchberger run on a
seeded corpus of random ideals, checking that all three agree."""

import argparse
import random
import statistics
import time
from dataclasses import asdict, dataclass

from gbwalk.groebner import buchberger
from gbwalk.orders import named_order
from gbwalk.poly import Polynomial
from gbwalk.walk import classic_walk, cone_interior_point, generic_walk


@dataclass
class CorpusConfig:
    seed: int = 0
    count: int = 100
    max_vars: int = 3
    max_gens: int = 3
    max_degree: int = 4
    max_terms: int = 4
    coeff_bound: int = 5
    source: str = "degrevlex"
    target: str = "lex"


def random_ideal(rng: random.Random, cfg: CorpusConfig):
    n = rng.randint(1, cfg.max_vars)
    coeffs = [c for c in range(-cfg.coeff_bound, cfg.coeff_bound + 1) if c]
    gens = []
    for _ in range(rng.randint(1, cfg.max_gens)):
        terms = {}
        for _ in range(rng.randint(2, cfg.max_terms)):
            e = [0] * n
            for _ in range(rng.randint(0, cfg.max_degree)):
                e[rng.randrange(n)] += 1
            terms[tuple(e)] = rng.choice(coeffs)
        f = Polynomial(n, terms)
        if f:
            gens.append(f)
    return n, gens or [Polynomial.variable(n, 0)]


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def run(cfg: CorpusConfig):
    rng = random.Random(cfg.seed)
    times = {"buchberger": [], "generic": [], "classic": []}
    steps, disagreements = [], 0
    for _ in range(cfg.count):
        n, gens = random_ideal(rng, cfg)
        o1, o2 = named_order(cfg.source, n), named_order(cfg.target, n)
        start = buchberger(gens, o1)
        target, t_bb = timed(buchberger, gens, o2)
        (G, trace), t_gw = timed(generic_walk, start, o1, o2)
        w0, t0 = cone_interior_point(start, o1), cone_interior_point(target, o2)
        (C, _), t_cw = timed(classic_walk, start, o1, o2, w0, t0)
        times["buchberger"].append(t_bb)
        times["generic"].append(t_gw)
        times["classic"].append(t_cw)
        steps.append(len(trace))
        disagreements += (G != target) + (C != target)

    print("config:", asdict(cfg))
    print(f"{'method':<12} {'mean ms':>9} {'median ms':>10} {'max ms':>9}")
    for name, ts in times.items():
        ms = [1000 * t for t in ts]
        print(f"{name:<12} {statistics.mean(ms):>9.2f} {statistics.median(ms):>10.2f} {max(ms):>9.2f}")
    print(f"facets per walk: mean {statistics.mean(steps):.2f}, max {max(steps)}")
    print(f"disagreements: {disagreements}")
    return disagreements


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, value in asdict(CorpusConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(value), default=value)
    raise SystemExit(1 if run(CorpusConfig(**vars(ap.parse_args()))) else 0)


if __name__ == "__main__":
    main()
