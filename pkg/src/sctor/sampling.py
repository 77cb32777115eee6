"""Seeded random inputs for the verification sweeps."""

from __future__ import annotations

import random

from .combinatorics import (
    GeneratorSystem,
    SimplicialComplement,
    SimplicialComplex,
    complement_from_complex,
    complex_from_complement,
)
from .moment_angle import PairFamily

__all__ = [
    "random_subset",
    "random_complement",
    "random_complex",
    "random_generator_system",
    "random_pair_family",
    "random_face",
]


def random_subset(rng: random.Random, m: int, lo: int = 1, hi: int | None = None) -> frozenset:
    hi = m if hi is None else min(hi, m)
    size = rng.randint(min(lo, hi), hi)
    return frozenset(rng.sample(range(1, m + 1), size))


def random_complement(rng: random.Random, m: int, k: int) -> SimplicialComplement:
    """``k`` nonempty generators of size 1..min(m, 4); duplicates possible."""
    gens = [random_subset(rng, m, 1, min(m, 4)) for _ in range(k)]
    return SimplicialComplement(m, tuple(gens))


def random_complex(rng: random.Random, m: int, max_nonfaces: int = 9) -> SimplicialComplex:
    """A random complex on ``[m]`` with at most ``max_nonfaces`` minimal non-faces.

    Half the draws come from random facets (rejection-sampled on the size of
    the complement), half from a random complement.
    """
    if rng.random() < 0.5:
        for _ in range(50):
            nf = rng.randint(1, max(1, m))
            facets = [random_subset(rng, m, 1, m) for _ in range(nf)]
            K = SimplicialComplex.from_faces(m, facets)
            if len(complement_from_complex(K)) <= max_nonfaces:
                return K
    k = rng.randint(0, min(max_nonfaces, 6))
    return complex_from_complement(random_complement(rng, m, k))


def random_generator_system(rng: random.Random, m: int, k: int, max_exp: int = 2) -> GeneratorSystem:
    gens = []
    while len(gens) < k:
        g = tuple(rng.randint(0, max_exp) for _ in range(m))
        if any(g):
            gens.append(g)
    return GeneratorSystem(m, tuple(gens))


def random_pair_family(rng: random.Random, m: int, max_degree: int = 3) -> PairFamily:
    """Reduced Betti polynomials with zero constant term (connected spaces)."""

    def poly():
        if rng.random() < 0.3:
            return ()
        return (0,) + tuple(rng.randint(0, 2) for _ in range(rng.randint(1, max_degree)))

    return PairFamily(tuple(poly() for _ in range(m)), tuple(poly() for _ in range(m)))


def random_face(rng: random.Random, K: SimplicialComplex) -> frozenset:
    faces = K.faces()
    return faces[rng.randrange(len(faces))]
