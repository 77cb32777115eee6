"""Seeded sweep of the three cross-checks with timing, for sizing experiments.

Compares the wedge-complex Betti table with Hochster's formula, checks exactness
of Taylor strands, and checks invariance under equivalent complements.
"""

import argparse
import random
import time
from dataclasses import dataclass

from sctor.combinatorics import SimplicialComplement, complement_from_complex, minimalize
from sctor.hochster import hochster_bigraded
from sctor.linalg import FieldSpec, parse_field
from sctor.sampling import random_complement, random_complex, random_generator_system
from sctor.taylor import exactness_sweep
from sctor.tor import bigraded_betti


@dataclass
class Config:
    field: FieldSpec
    trials: int = 100
    max_m: int = 8
    seed: int = 0


def hochster(cfg: Config, rng: random.Random) -> int:
    bad = 0
    for _ in range(cfg.trials):
        K = random_complex(rng, rng.randint(1, cfg.max_m))
        bad += bool(bigraded_betti(complement_from_complex(K), cfg.field).discrepancies(hochster_bigraded(K, cfg.field)))
    return bad


def taylor(cfg: Config, rng: random.Random) -> int:
    bad = 0
    for _ in range(cfg.trials):
        G = random_generator_system(rng, rng.randint(1, min(cfg.max_m, 4)), rng.randint(1, 5), 2)
        bad += any(not r.passed for r in exactness_sweep(G, cfg.field))
    return bad


def equivalence(cfg: Config, rng: random.Random) -> int:
    bad = 0
    for _ in range(cfg.trials):
        m = rng.randint(1, cfg.max_m)
        P = random_complement(rng, m, rng.randint(1, 6))
        gens = list(P.generators)
        rng.shuffle(gens)
        base = bigraded_betti(P, cfg.field)
        bad += bigraded_betti(minimalize(P), cfg.field) != base
        bad += bigraded_betti(SimplicialComplement(m, tuple(gens)), cfg.field) != base
    return bad


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", type=parse_field, default=parse_field("rational"))
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--max-m", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = Config(a.field, a.trials, a.max_m, a.seed)
    for name, fn in (("hochster", hochster), ("taylor", taylor), ("equivalence", equivalence)):
        t0 = time.perf_counter()
        bad = fn(cfg, random.Random(cfg.seed))
        print(f"{name:12s} failures={bad:<3d} trials={cfg.trials} {time.perf_counter() - t0:6.1f}s")


if __name__ == "__main__":
    main()
