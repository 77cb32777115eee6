"""Tor of a face ring from a simplicial complement.

Basis elements of the wedge complex are increasing 1-based index tuples
``S = (i_1 < ... < i_s)`` into the generator sequence; the support of ``S``
is the union of the chosen generators. The differential only keeps the
deletions that leave the support unchanged:

    d S = sum over u with supp(S minus i_u) == supp(S) of (-1)^(u-1) (S minus i_u)

This is the Taylor differential reduced modulo the variables, so every
support ``σ`` spans a subcomplex (a *strand*) and ``Tor_{q,σ}`` is the
``q``-th homology of that strand. The sign ``(-1)^(u-1)`` agrees with the
Taylor complex; the alternative ``(-1)^u`` flips every differential and
gives the same kernels and images.

Products: ``S · T`` is the merged tuple with its sorting sign when the
supports are disjoint, and zero otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .chain import ChainComplex, HomologyBasis, homology_dims, homology_representatives
from .combinatorics import (
    SimplicialComplement,
    canonical_key,
    compress,
    from_mask,
    to_mask,
    vertex_set,
)
from .linalg import QQ, ExactMatrix, FieldSpec
from .polynomial import PoincarePolynomial
from .taylor import sort_sign

__all__ = [
    "LambdaBasisElement",
    "BettiTable",
    "ProductTable",
    "ClassLabel",
    "lambda_supports",
    "strand_tuples",
    "build_strand",
    "lambda_complex",
    "bigraded_betti",
    "tor_poincare",
    "wedge_product",
    "tor_product_table",
    "link_cohomology",
    "format_tuple",
    "clear_caches",
]


@dataclass(frozen=True)
class LambdaBasisElement:
    indices: tuple
    support: frozenset

    @classmethod
    def of(cls, P: SimplicialComplement, indices: Sequence[int]) -> "LambdaBasisElement":
        idx = tuple(indices)
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices {idx} are not strictly increasing")
        if idx and not (1 <= idx[0] and idx[-1] <= len(P)):
            raise ValueError(f"indices {idx} outside 1..{len(P)}")
        return cls(idx, frozenset().union(*(P.generators[i - 1] for i in idx)))

    @property
    def degree(self) -> int:
        return len(self.indices)


def format_tuple(S: Sequence[int]) -> str:
    return "∧".join(f"σ{i}" for i in S) if S else "1"


def _union(masks: Sequence[int], S: Iterable[int]) -> int:
    u = 0
    for i in S:
        u |= masks[i - 1]
    return u


def lambda_supports(P: SimplicialComplement) -> set[frozenset]:
    """All unions of subfamilies of generators, ∅ included."""
    seen = {0}
    for g in P.masks():
        seen |= {x | g for x in seen}
    return {from_mask(x) for x in seen}


def strand_tuples(P: SimplicialComplement, sigma: Iterable[int]) -> dict[int, list[tuple]]:
    """Index tuples with union exactly ``σ``, by degree, in lexicographic order."""
    s = to_mask(vertex_set(sigma, P.m))
    masks = P.masks()
    cand = [i for i, g in enumerate(masks, start=1) if g & s == g]
    out: dict[int, list[tuple]] = {}
    for q in range(len(cand) + 1):
        hits = [S for S in combinations(cand, q) if _union(masks, S) == s]
        if hits:
            out[q] = hits
    return out


def build_strand(P: SimplicialComplement, sigma: Iterable[int], field: FieldSpec = QQ) -> ChainComplex:
    """The support-``σ`` subcomplex of the wedge complex."""
    s = to_mask(vertex_set(sigma, P.m))
    masks = P.masks()
    bases = strand_tuples(P, from_mask(s))
    index = {q: {S: i for i, S in enumerate(B)} for q, B in bases.items()}
    boundaries = {}
    for q, B in bases.items():
        if q == 0 or q - 1 not in bases:
            continue
        items = {}
        for col, S in enumerate(B):
            for u in range(q):
                face = S[:u] + S[u + 1:]
                if _union(masks, face) == s:
                    items[(index[q - 1][face], col)] = -1 if u % 2 else 1
        if items:
            boundaries[q] = ExactMatrix.from_sparse(len(bases[q - 1]), len(B), items, field)
    return ChainComplex(field, bases, boundaries)


def lambda_complex(P: SimplicialComplement, field: FieldSpec = QQ) -> ChainComplex:
    """The whole wedge complex (all ``2^k`` tuples), the direct sum of its strands.

    Only sensible for small ``k``; everything else works strand by strand.
    """
    k = len(P)
    masks = P.masks()
    bases = {q: list(combinations(range(1, k + 1), q)) for q in range(k + 1)}
    index = {q: {S: i for i, S in enumerate(B)} for q, B in bases.items()}
    boundaries = {}
    for q in range(1, k + 1):
        items = {}
        for col, S in enumerate(bases[q]):
            full = _union(masks, S)
            for u in range(q):
                face = S[:u] + S[u + 1:]
                if _union(masks, face) == full:
                    items[(index[q - 1][face], col)] = -1 if u % 2 else 1
        boundaries[q] = ExactMatrix.from_sparse(len(bases[q - 1]), len(bases[q]), items, field)
    return ChainComplex(field, bases, boundaries)


@dataclass(frozen=True)
class BettiTable:
    """``(q, σ) -> dim Tor_{q,σ}``; only nonzero entries are stored."""

    entries: Mapping[tuple, int]
    field: FieldSpec = QQ

    def __post_init__(self):
        clean = {}
        for (q, s), v in self.entries.items():
            if v < 0:
                raise ValueError("negative Betti number")
            if v:
                clean[(int(q), frozenset(s))] = int(v)
        object.__setattr__(self, "entries", clean)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def get(self, q: int, sigma: Iterable[int]) -> int:
        return self.entries.get((q, frozenset(sigma)), 0)

    def items(self) -> list[tuple[tuple, int]]:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], canonical_key(kv[0][1])))

    def totals(self) -> PoincarePolynomial:
        return PoincarePolynomial.from_terms((q, v) for (q, _), v in self.entries.items())

    def discrepancies(self, other: "BettiTable") -> list[tuple[int, frozenset, int, int]]:
        """``(q, σ, self, other)`` for every entry where the tables differ."""
        keys = set(self.entries) | set(other.entries)
        out = [
            (q, s, self.entries.get((q, s), 0), other.entries.get((q, s), 0))
            for q, s in keys
            if self.entries.get((q, s), 0) != other.entries.get((q, s), 0)
        ]
        return sorted(out, key=lambda t: (t[0], canonical_key(t[1])))

    def to_json(self) -> list[dict]:
        return [{"q": q, "sigma": sorted(s), "dim": v} for (q, s), v in self.items()]

    @classmethod
    def from_json(cls, rows: list[dict], field: FieldSpec = QQ) -> "BettiTable":
        return cls({(r["q"], frozenset(r["sigma"])): r["dim"] for r in rows}, field)


@lru_cache(maxsize=4096)
def _strand_cached(P: SimplicialComplement, s: frozenset, field: FieldSpec) -> ChainComplex:
    return build_strand(P, s, field)


@lru_cache(maxsize=4096)
def bigraded_betti(P: SimplicialComplement, field: FieldSpec = QQ) -> BettiTable:
    """Homology dimensions of every strand."""
    entries = {}
    for s in lambda_supports(P):
        for q, h in homology_dims(_strand_cached(P, s, field)).items():
            if h:
                entries[(q, s)] = h
    return BettiTable(entries, field)


def clear_caches() -> None:
    """Drop memoised strands and Betti tables."""
    _strand_cached.cache_clear()
    bigraded_betti.cache_clear()


def tor_poincare(P: SimplicialComplement, field: FieldSpec = QQ) -> PoincarePolynomial:
    return bigraded_betti(P, field).totals()


def wedge_product(
    P: SimplicialComplement, e1: LambdaBasisElement, e2: LambdaBasisElement
) -> Optional[tuple[int, LambdaBasisElement]]:
    """``(sign, merged)`` or ``None`` when the product vanishes."""
    if set(e1.indices) & set(e2.indices) or e1.support & e2.support:
        return None
    cat = e1.indices + e2.indices
    return sort_sign(cat), LambdaBasisElement(tuple(sorted(cat)), e1.support | e2.support)


@dataclass(frozen=True, order=True)
class ClassLabel:
    """A homology basis class: degree, support, position among representatives."""

    q: int
    sigma: tuple  # sorted vertices
    i: int

    @property
    def support(self) -> frozenset:
        return frozenset(self.sigma)

    def __str__(self) -> str:
        return f"[q={self.q} σ={{{','.join(map(str, self.sigma))}}} #{self.i}]"


@dataclass(frozen=True)
class ProductTable:
    """Structure constants of the Tor algebra in a fixed basis of classes.

    ``constants[(a, b)]`` maps target classes to coefficients and is only
    stored for pairs with disjoint supports; other products are zero.
    """

    P: SimplicialComplement
    field: FieldSpec
    classes: tuple
    representatives: Mapping[ClassLabel, dict] = field(repr=False)
    constants: Mapping[tuple, dict] = field(repr=False)

    @property
    def unit(self) -> Optional[ClassLabel]:
        u = ClassLabel(0, (), 0)
        return u if u in self.representatives else None

    def product(self, a: ClassLabel, b: ClassLabel) -> dict:
        return dict(self.constants.get((a, b), {}))

    def multiply(self, x: Mapping[ClassLabel, object], y: Mapping[ClassLabel, object]) -> dict:
        """Bilinear extension to combinations of classes."""
        f = self.field
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for c, v in self.constants.get((a, b), {}).items():
                    w = f.norm(out.get(c, 0) + ca * cb * v)
                    if w == 0:
                        out.pop(c, None)
                    else:
                        out[c] = w
        return out

    def nonzero_products(self, positive_only: bool = True) -> list[tuple[ClassLabel, ClassLabel, dict]]:
        out = []
        for (a, b), v in sorted(self.constants.items()):
            if positive_only and (a.q == 0 or b.q == 0):
                continue
            if v:
                out.append((a, b, dict(v)))
        return out

    def describe(self, c: ClassLabel) -> str:
        """Representative as a signed sum of wedge tuples."""
        parts = []
        for S, v in sorted(self.representatives[c].items()):
            neg = self.field.is_rational and v < 0
            v = -v if neg else v
            term = format_tuple(S) if v == 1 else f"{v}·{format_tuple(S)}"
            parts.append(("- " if neg else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _strand_homology(P: SimplicialComplement, s: frozenset, field: FieldSpec) -> tuple[ChainComplex, HomologyBasis]:
    C = _strand_cached(P, s, field)
    return C, homology_representatives(C)


def tor_product_table(P: SimplicialComplement, field: FieldSpec = QQ) -> ProductTable:
    """Multiply every pair of homology representatives and reduce the result."""
    strands = {s: _strand_homology(P, s, field) for s in lambda_supports(P)}
    reps: dict[ClassLabel, dict] = {}
    for s, (C, H) in strands.items():
        for q in C.degrees:
            for i, v in enumerate(H.reps(q)):
                lab = ClassLabel(q, tuple(sorted(s)), i)
                reps[lab] = {C.basis(q)[j]: x for j, x in enumerate(v) if x != 0}
    classes = tuple(sorted(reps, key=lambda c: (c.q, canonical_key(c.support), c.i)))
    constants: dict[tuple, dict] = {}
    for a in classes:
        for b in classes:
            if a.support & b.support:
                continue
            target = a.support | b.support
            C, H = strands[target]
            q = a.q + b.q
            if not H.reps(q):
                constants[(a, b)] = {}
                continue
            z = [0] * C.dim(q)
            for S, x in reps[a].items():
                for T, y in reps[b].items():
                    if set(S) & set(T):
                        continue
                    cat = S + T
                    j = C.index(q, tuple(sorted(cat)))
                    z[j] = field.norm(z[j] + sort_sign(cat) * x * y)
            coords = H.express(z, q)
            constants[(a, b)] = {
                ClassLabel(q, tuple(sorted(target)), i): c for i, c in enumerate(coords) if c != 0
            }
    return ProductTable(P, field, classes, reps, constants)


def link_cohomology(P: SimplicialComplement, omega: Iterable[int], field: FieldSpec = QQ) -> dict[int, int]:
    """Reduced cohomology of the link of ``ω`` from the compressed complement.

    Reads the ``[m] - ω`` strand of the ω-compression; ``H_q`` there is
    ``H̃^(m - |ω| - q - 1)`` of the link. Returns nonzero dimensions only;
    all zero when ``ω`` is not a face.
    """
    w = vertex_set(omega, P.m)
    E = compress(P, w)
    rest = frozenset(range(1, P.m + 1)) - w
    C = build_strand(E, rest, field)
    out = {}
    for q, h in homology_dims(C).items():
        if h:
            out[P.m - len(w) - q - 1] = h
    return out
