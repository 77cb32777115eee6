"""Poincaré polynomials of generalized moment-angle complexes ``Z_K(X, A)``.

The cohomology splits over pairs ``(ω, σ)`` of disjoint vertex sets. Each
summand is ``Tor_{q,σ}`` of the ω-compressed complement tensored with the
reduced cohomology of ``X_i`` (``i ∈ ω``) and ``A_j`` (``j ∈ σ``).

t-degree bookkeeping: the Tor class sits in the reduced cohomology of a
suspended order complex, ``H_{q,σ} = H̃^(|σ|-q)(Σ|Δ|)``, so it contributes
``t^(|σ|-q)``. The full summand is therefore

    dim H_{q,σ}(E_ω P) · t^(|σ|-q) · Π_{i∈ω} PX_i(t) · Π_{j∈σ} PA_j(t)

Specialising gives ``t^(2|σ|-q)`` for ``(D², S¹)`` and
``t^(2|ω|+2|σ|-q)`` for ``(S², S¹)``. Whenever ``ω`` is not a face, the
compression contains the empty set and all of its homology vanishes, so
the sum over every ``ω ⊆ [m]`` equals the sum over faces.

None of this checks that ``A_i -> X_i`` is null-homotopic or that the
Künneth formula applies; :data:`HYPOTHESES` is copied into every report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    SimplicialComplement,
    all_subsets,
    canonical_key,
    complex_from_complement,
    compress,
    vertex_set,
)
from .linalg import QQ, FieldSpec
from .polynomial import PoincarePolynomial
from .tor import bigraded_betti

__all__ = [
    "HYPOTHESES",
    "PairFamily",
    "MASeriesReport",
    "ma_poincare",
    "ma_poincare_over_K",
    "contractible_A_series",
    "zk_series",
    "s2s1_series",
    "stratum_series",
    "strata_by_size",
]

HYPOTHESES = (
    "assumes every inclusion A_i -> X_i is null-homotopic and the Künneth formula "
    "has no Tor term; neither can be checked from Betti numbers"
)

Poly = PoincarePolynomial
_ONE = Poly.one()


@dataclass(frozen=True)
class PairFamily:
    """Reduced Poincaré polynomials of ``X_i`` and ``A_i`` for each vertex."""

    px: tuple
    pa: tuple

    def __post_init__(self):
        px = tuple(p if isinstance(p, Poly) else Poly(tuple(p)) for p in self.px)
        pa = tuple(p if isinstance(p, Poly) else Poly(tuple(p)) for p in self.pa)
        if len(px) != len(pa):
            raise ValueError("X and A lists have different lengths")
        for p in px + pa:
            if any(c < 0 for c in p.coefficients):
                raise ValueError("Betti numbers must be nonnegative")
        object.__setattr__(self, "px", px)
        object.__setattr__(self, "pa", pa)

    @property
    def m(self) -> int:
        return len(self.px)

    @classmethod
    def constant(cls, m: int, x: Sequence[int], a: Sequence[int]) -> "PairFamily":
        return cls((Poly(tuple(x)),) * m, (Poly(tuple(a)),) * m)

    @classmethod
    def disk_circle(cls, m: int) -> "PairFamily":
        """``(D², S¹)`` at every vertex."""
        return cls.constant(m, (), (0, 1))

    @classmethod
    def sphere_circle(cls, m: int) -> "PairFamily":
        """``(S², S¹)`` at every vertex."""
        return cls.constant(m, (0, 0, 1), (0, 1))

    def permuted(self, perm: Mapping[int, int]) -> "PairFamily":
        """Move the data of vertex ``v`` to vertex ``perm[v]``."""
        px = [None] * self.m
        pa = [None] * self.m
        for v in range(1, self.m + 1):
            px[perm[v] - 1] = self.px[v - 1]
            pa[perm[v] - 1] = self.pa[v - 1]
        return PairFamily(tuple(px), tuple(pa))


@dataclass(frozen=True)
class MASeriesReport:
    """Total series plus every nonzero ``(ω, σ, q)`` contribution except the constant 1."""

    total: PoincarePolynomial
    contributions: Mapping[tuple, PoincarePolynomial] = field(repr=False)
    hypotheses: str = HYPOTHESES

    @property
    def total_betti(self) -> int:
        return self.total.total()

    def ledger(self) -> list[tuple[tuple, tuple, int, PoincarePolynomial]]:
        return [
            (tuple(sorted(w)), tuple(sorted(s)), q, p)
            for (w, s, q), p in sorted(
                self.contributions.items(),
                key=lambda kv: (canonical_key(kv[0][0]), canonical_key(kv[0][1]), kv[0][2]),
            )
        ]


def _prod(polys: Iterable[Poly]) -> Poly:
    return reduce(lambda a, b: a * b, polys, _ONE)


def _check(P: SimplicialComplement, pairs: PairFamily) -> None:
    if pairs.m != P.m:
        raise ValueError(f"pair family covers {pairs.m} vertices, complement has m = {P.m}")


def _stratum_terms(P, omega: frozenset, pairs: PairFamily, field: FieldSpec, restrict: bool):
    # One ω-stratum: the Tor table of the compression, weighted by the pairs.
    px_w = _prod(pairs.px[i - 1] for i in omega)
    table = bigraded_betti(compress(P, omega), field)
    for (q, sigma), dim in table.items():
        if restrict and sigma & omega:
            continue
        shift = len(sigma) - q
        if shift < 0:
            raise AssertionError(f"Tor class with q={q} > |σ|={len(sigma)}")
        term = (px_w * _prod(pairs.pa[j - 1] for j in sigma)).shift(shift) * dim
        if not term.is_zero():
            yield (omega, sigma, q), term


def _report(terms) -> MASeriesReport:
    total = Poly.zero()
    contributions = {}
    for key, term in terms:
        total = total + term
        if key != (frozenset(), frozenset(), 0):
            contributions[key] = term
    return MASeriesReport(total, contributions)


def ma_poincare(
    P: SimplicialComplement, pairs: PairFamily, field: FieldSpec = QQ, prune: bool = False
) -> MASeriesReport:
    """Sum over every ``ω ⊆ [m]`` and every ``σ``.

    With ``prune=True`` only faces ``ω`` of ``K`` are visited; the default
    runs the unpruned sum so the vanishing for non-faces is exercised.
    """
    _check(P, pairs)
    if prune:
        omegas = complex_from_complement(P).faces()
    else:
        omegas = list(all_subsets(P.m))
    return _report(t for w in omegas for t in _stratum_terms(P, w, pairs, field, restrict=False))


def ma_poincare_over_K(P: SimplicialComplement, pairs: PairFamily, field: FieldSpec = QQ) -> MASeriesReport:
    """Sum over faces ``ω`` of ``K`` and ``σ ⊆ [m] - ω`` only."""
    _check(P, pairs)
    K = complex_from_complement(P)
    return _report(t for w in K.faces() for t in _stratum_terms(P, w, pairs, field, restrict=True))


def contractible_A_series(P: SimplicialComplement, pairs: PairFamily, field: FieldSpec = QQ) -> PoincarePolynomial:
    """``Σ_{ω∈K} Π_{i∈ω} PX_i`` when every ``A_i`` is contractible.

    ``field`` does not enter: the formula only uses the face poset.
    """
    _check(P, pairs)
    if any(not p.is_zero() for p in pairs.pa):
        raise ValueError("contractible_A_series needs every PA_i = 0")
    K = complex_from_complement(P)
    total = Poly.zero()
    for w in K.faces():
        total = total + _prod(pairs.px[i - 1] for i in w)
    return total


def zk_series(P: SimplicialComplement, field: FieldSpec = QQ) -> PoincarePolynomial:
    """Poincaré polynomial of ``Z_K = Z_K(D², S¹)``: ``Tor_{q,σ}`` in degree ``2|σ| - q``."""
    table = bigraded_betti(P, field)
    return Poly.from_terms((2 * len(s) - q, v) for (q, s), v in table.items())


def stratum_series(P: SimplicialComplement, omega: Iterable[int], field: FieldSpec = QQ) -> PoincarePolynomial:
    """The ω-summand of the ``(S², S¹)`` series: degree ``2|ω| + 2|σ| - q``."""
    w = vertex_set(omega, P.m)
    table = bigraded_betti(compress(P, w), field)
    return Poly.from_terms((2 * len(w) + 2 * len(s) - q, v) for (q, s), v in table.items())


def s2s1_series(P: SimplicialComplement, field: FieldSpec = QQ) -> PoincarePolynomial:
    """Poincaré polynomial of ``Z_K(S², S¹)``: sum of strata over the faces of ``K``."""
    K = complex_from_complement(P)
    total = Poly.zero()
    for w in K.faces():
        total = total + stratum_series(P, w, field)
    return total


def strata_by_size(P: SimplicialComplement, field: FieldSpec = QQ) -> dict[int, dict[PoincarePolynomial, int]]:
    """Group the ``(S², S¹)`` strata by ``|ω|``: ``{|ω|: {series: multiplicity}}``."""
    K = complex_from_complement(P)
    out: dict[int, dict[PoincarePolynomial, int]] = {}
    for w in K.faces():
        s = stratum_series(P, w, field)
        bucket = out.setdefault(len(w), {})
        bucket[s] = bucket.get(s, 0) + 1
    return out

