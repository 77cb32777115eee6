"""Exact Tor algebras of Stanley–Reisner rings via simplicial complements,
with Taylor and Hochster cross-checks and moment-angle Poincaré series."""

from .combinatorics import (
    GeneratorSystem,
    SimplicialComplement,
    SimplicialComplex,
    complement_from_complex,
    complex_from_complement,
    compress,
    full_subcomplex,
    lcm_join,
    link,
    minimalize,
    star,
)
from .linalg import GF2, QQ, FieldSpec, parse_field
from .polynomial import PoincarePolynomial
from .tor import BettiTable, bigraded_betti, link_cohomology, tor_poincare, tor_product_table
from .hochster import hochster_bigraded, reduced_cohomology
from .moment_angle import (
    PairFamily,
    contractible_A_series,
    ma_poincare,
    ma_poincare_over_K,
    s2s1_series,
    stratum_series,
    zk_series,
)

__version__ = "0.1.0"

__all__ = [
    "GeneratorSystem",
    "SimplicialComplement",
    "SimplicialComplex",
    "complement_from_complex",
    "complex_from_complement",
    "compress",
    "full_subcomplex",
    "lcm_join",
    "link",
    "minimalize",
    "star",
    "GF2",
    "QQ",
    "FieldSpec",
    "parse_field",
    "PoincarePolynomial",
    "BettiTable",
    "bigraded_betti",
    "link_cohomology",
    "tor_poincare",
    "tor_product_table",
    "hochster_bigraded",
    "reduced_cohomology",
    "PairFamily",
    "contractible_A_series",
    "ma_poincare",
    "ma_poincare_over_K",
    "s2s1_series",
    "stratum_series",
    "zk_series",
]
