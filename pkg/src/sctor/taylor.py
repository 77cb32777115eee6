"""The Taylor complex of a monomial generator system.

Basis elements ``a_S`` are indexed by strictly increasing 1-based index
tuples ``S`` into the generator sequence, with multidegree ``lcm(S)``. The
differential is

    d a_S = sum_u (-1)^(u-1) x^(lcm(S) - lcm(S minus u)) a_(S minus u)

and the product is ``a_S a_T = ± x^(lcm S + lcm T - lcm(S ∪ T)) a_(S ∪ T)``,
zero when ``S`` and ``T`` share an index.

Everything here is finite: elements of ``T(P)`` are formal sums
``{(c, S): coeff}`` standing for ``coeff * x^c a_S``, and homology is only
taken one multidegree at a time (:func:`taylor_strand`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional, Sequence

from .chain import ChainComplex, homology_dims
from .combinatorics import GeneratorSystem
from .linalg import QQ, ExactMatrix, FieldSpec

__all__ = [
    "TaylorBasisElement",
    "basis_element",
    "taylor_differential",
    "taylor_product",
    "apply_d",
    "multiply",
    "taylor_strand",
    "ExactnessReport",
    "verify_exactness",
    "multidegrees_up_to",
    "exactness_sweep",
]


def _lcm(P: GeneratorSystem, S: Sequence[int]) -> tuple:
    out = [0] * P.m
    for i in S:
        for j, x in enumerate(P.generators[i - 1]):
            if x > out[j]:
                out[j] = x
    return tuple(out)


def _sub(a, b) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def sort_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class TaylorBasisElement:
    indices: tuple
    multidegree: tuple

    @property
    def degree(self) -> int:
        return len(self.indices)


def basis_element(P: GeneratorSystem, indices: Sequence[int]) -> TaylorBasisElement:
    idx = tuple(indices)
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"indices {idx} are not strictly increasing")
    if idx and not (1 <= idx[0] and idx[-1] <= len(P)):
        raise ValueError(f"indices {idx} outside 1..{len(P)}")
    return TaylorBasisElement(idx, _lcm(P, idx))


def taylor_differential(P: GeneratorSystem, e: TaylorBasisElement) -> list[tuple[int, tuple, TaylorBasisElement]]:
    """Terms ``(sign, multiplier, face)`` of ``d e``.

    A singleton ``a_i`` maps to ``x^(a_i)`` times the unit; the unit maps to 0.
    """
    terms = []
    for u in range(e.degree):
        face = basis_element(P, e.indices[:u] + e.indices[u + 1:])
        sign = -1 if u % 2 else 1
        terms.append((sign, _sub(e.multidegree, face.multidegree), face))
    return terms


def taylor_product(
    P: GeneratorSystem, e1: TaylorBasisElement, e2: TaylorBasisElement
) -> Optional[tuple[tuple, int, TaylorBasisElement]]:
    """``(multiplier, sign, merged)`` for ``e1 * e2``, or ``None`` if the product is 0."""
    if set(e1.indices) & set(e2.indices):
        return None
    cat = e1.indices + e2.indices
    merged = basis_element(P, sorted(cat))
    mult = _sub(_add(e1.multidegree, e2.multidegree), merged.multidegree)
    return mult, sort_sign(cat), merged


# Formal sums: {(monomial exponent c, indices S): coefficient}.

def _accumulate(out: dict, key, c: int) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def apply_d(P: GeneratorSystem, chain: dict) -> dict:
    """Apply the differential to a formal sum (integer coefficients)."""
    out: dict = {}
    for (c, S), coeff in chain.items():
        e = basis_element(P, S)
        for sign, mult, face in taylor_differential(P, e):
            _accumulate(out, (_add(c, mult), face.indices), sign * coeff)
    return out


def multiply(P: GeneratorSystem, x: dict, y: dict) -> dict:
    """Bilinear product of two formal sums."""
    out: dict = {}
    for (c1, S), a in x.items():
        e1 = basis_element(P, S)
        for (c2, T), b in y.items():
            r = taylor_product(P, e1, basis_element(P, T))
            if r is None:
                continue
            mult, sign, merged = r
            _accumulate(out, (_add(_add(c1, c2), mult), merged.indices), sign * a * b)
    return out


def _all_tuples(k: int) -> Iterator[tuple]:
    for s in range(k + 1):
        yield from combinations(range(1, k + 1), s)


def taylor_strand(P: GeneratorSystem, b: Sequence[int], field: FieldSpec = QQ) -> ChainComplex:
    """The multidegree-``b`` component of ``T(P)`` as a complex of vector spaces.

    Degree ``q`` has basis ``x^(b - lcm S) a_S`` for ``|S| = q`` with
    ``lcm S <= b``; the empty tuple is the unit in degree 0. Every boundary
    term stays in the strand with coefficient ±1.
    """
    b = tuple(b)
    if len(b) != P.m:
        raise ValueError(f"multidegree {b} does not have length {P.m}")
    usable = [i for i in range(1, len(P) + 1) if all(x <= y for x, y in zip(P.generators[i - 1], b))]
    bases: dict[int, list] = {}
    for s in range(len(usable) + 1):
        bases[s] = list(combinations(usable, s))
    index = {q: {S: i for i, S in enumerate(B)} for q, B in bases.items()}
    boundaries = {}
    for q in range(1, len(usable) + 1):
        items = {}
        for col, S in enumerate(bases[q]):
            for u in range(q):
                items[(index[q - 1][S[:u] + S[u + 1:]], col)] = -1 if u % 2 else 1
        boundaries[q] = ExactMatrix.from_sparse(len(bases[q - 1]), len(bases[q]), items, field)
    return ChainComplex(field, bases, boundaries)


@dataclass(frozen=True)
class ExactnessReport:
    b: tuple
    h0_expected: int
    h0_actual: int
    higher_vanish: bool

    @property
    def passed(self) -> bool:
        return self.h0_expected == self.h0_actual and self.higher_vanish


def verify_exactness(P: GeneratorSystem, b: Sequence[int], field: FieldSpec = QQ) -> ExactnessReport:
    """Compare the strand's homology with ``H_0 = k[x]/I`` and ``H_{>0} = 0``."""
    b = tuple(b)
    dims = homology_dims(taylor_strand(P, b, field))
    return ExactnessReport(
        b=b,
        h0_expected=0 if P.divides(b) else 1,
        h0_actual=dims.get(0, 0),
        higher_vanish=all(h == 0 for q, h in dims.items() if q > 0),
    )


def multidegrees_up_to(cap: Sequence[int]) -> Iterator[tuple]:
    """All ``b`` with ``0 <= b <= cap`` coordinatewise, in lexicographic order."""
    return product(*(range(c + 1) for c in cap))


def exactness_sweep(P: GeneratorSystem, field: FieldSpec = QQ) -> list[ExactnessReport]:
    """Reports for every multidegree up to ``P.cap()``."""
    return [verify_exactness(P, b, field) for b in multidegrees_up_to(P.cap())]
