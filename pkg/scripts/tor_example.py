"""Tor algebra of the 5-vertex example: classes, representatives, products.

    python3 scripts/tor_example.py --field gf:2
"""

import argparse
from dataclasses import dataclass

from sctor.combinatorics import SimplicialComplement, complex_from_complement
from sctor.linalg import FieldSpec, parse_field
from sctor.moment_angle import zk_series
from sctor.tor import bigraded_betti, tor_product_table


@dataclass
class Config:
    field: FieldSpec
    show_unit_products: bool = False


EXAMPLE = SimplicialComplement.of(5, [[1, 5], [2, 4], [1, 2, 3], [3, 4, 5]])


def run(cfg: Config) -> None:
    K = complex_from_complement(EXAMPLE)
    print(f"facets: {K.sorted_facets()}")
    table = bigraded_betti(EXAMPLE, cfg.field)
    print(f"Tor series over {cfg.field}: {table.totals()}")
    T = tor_product_table(EXAMPLE, cfg.field)
    for c in T.classes:
        print(f"  {c}  {T.describe(c)}")
    print("nonzero products:")
    for a, b, r in T.nonzero_products(positive_only=not cfg.show_unit_products):
        rhs = " + ".join(f"{v}·{T.describe(c)}" for c, v in sorted(r.items()))
        print(f"  ({T.describe(a)}) * ({T.describe(b)}) = {rhs}")
    print(f"Z_K series: {zk_series(EXAMPLE, cfg.field).format('t')}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", type=parse_field, default=parse_field("rational"))
    ap.add_argument("--all", action="store_true", help="include products with the unit")
    args = ap.parse_args()
    run(Config(args.field, args.all))


if __name__ == "__main__":
    main()
