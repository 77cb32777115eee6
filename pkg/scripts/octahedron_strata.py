"""Stratum-by-stratum Poincaré series of Z_K(S², S¹) for the octahedral sphere."""

import argparse
from dataclasses import dataclass

from sctor.combinatorics import SimplicialComplement
from sctor.linalg import FieldSpec, parse_field
from sctor.moment_angle import PairFamily, ma_poincare, s2s1_series, strata_by_size, zk_series


@dataclass
class Config:
    field: FieldSpec
    ledger: bool = False


OCTAHEDRON = SimplicialComplement.of(6, [[1, 2], [3, 4], [5, 6]])


def run(cfg: Config) -> None:
    print(f"Z_K(D², S¹): {zk_series(OCTAHEDRON, cfg.field).format('t')}")
    for size, bucket in sorted(strata_by_size(OCTAHEDRON, cfg.field).items()):
        for poly, mult in bucket.items():
            print(f"  |ω| = {size}: {mult} x ({poly.format('t')})")
    total = s2s1_series(OCTAHEDRON, cfg.field)
    print(f"Z_K(S², S¹): {total.format('t')}  (total {total.total()})")
    if cfg.ledger:
        rep = ma_poincare(OCTAHEDRON, PairFamily.sphere_circle(6), cfg.field)
        for w, s, q, p in rep.ledger():
            print(f"  ω={w} σ={s} q={q}: {p.format('t')}")
        print(f"note: {rep.hypotheses}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", type=parse_field, default=parse_field("rational"))
    ap.add_argument("--ledger", action="store_true")
    args = ap.parse_args()
    run(Config(args.field, args.ledger))


if __name__ == "__main__":
    main()
