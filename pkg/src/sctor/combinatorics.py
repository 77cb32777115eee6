"""Vertex sets, exponent vectors, simplicial complexes and complements.

Vertices are 1-indexed. A vertex set is a ``frozenset[int]``; hot loops work
on bitmasks where vertex ``v`` is bit ``v - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "VertexSet",
    "ExponentVector",
    "to_mask",
    "from_mask",
    "vertex_set",
    "canonical_key",
    "lcm_join",
    "SimplicialComplex",
    "SimplicialComplement",
    "GeneratorSystem",
    "complement_from_complex",
    "complex_from_complement",
    "minimalize",
    "compress",
    "star",
    "link",
    "full_subcomplex",
]

VertexSet = frozenset
ExponentVector = tuple


def to_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> frozenset:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def vertex_set(vs: Iterable[int], m: int) -> frozenset:
    """Validate and freeze a vertex set on ``[m]``."""
    vs = list(vs)
    s = frozenset(vs)
    if len(s) != len(vs):
        raise ValueError(f"duplicate vertices in {vs}")
    bad = [v for v in s if not (isinstance(v, int) and 1 <= v <= m)]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} outside 1..{m}")
    return s


def canonical_key(s: frozenset) -> tuple:
    """Sort key: size first, then lexicographic."""
    return (len(s), tuple(sorted(s)))


def lcm_join(vs: Sequence[Sequence[int]]) -> tuple:
    """Coordinatewise maximum of exponent vectors (the lcm of the monomials)."""
    if not vs:
        raise ValueError("lcm of an empty sequence is undefined")
    m = len(vs[0])
    if any(len(v) != m for v in vs):
        raise ValueError("exponent vectors have different lengths")
    return tuple(max(col) for col in zip(*vs))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on ``[m]`` stored by its facets.

    The complex ``{∅}`` has the single facet ``frozenset()``. The void
    complex (no faces at all) is not representable.
    """

    m: int
    facets: frozenset

    def __post_init__(self):
        if not self.facets:
            raise ValueError("void complex (no faces, not even the empty face) is not allowed")
        for f in self.facets:
            vertex_set(f, self.m)
        masks = [to_mask(f) for f in self.facets]
        for a in masks:
            for b in masks:
                if a != b and a & b == a:
                    raise ValueError("a facet is contained in another facet")

    @classmethod
    def from_faces(cls, m: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Complex generated by ``faces`` (facets are the maximal ones)."""
        masks = set(to_mask(vertex_set(f, m)) for f in faces) or {0}
        maximal = [a for a in masks if not any(a != b and a & b == a for b in masks)]
        return cls(m, frozenset(from_mask(a) for a in maximal))

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, frozenset([frozenset(range(1, m + 1))]))

    @classmethod
    def empty_face_only(cls, m: int) -> "SimplicialComplex":
        return cls(m, frozenset([frozenset()]))

    def facet_masks(self) -> list[int]:
        return [to_mask(f) for f in self.facets]

    def face_masks(self) -> set[int]:
        out: set[int] = set()
        for f in self.facet_masks():
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return out

    def faces(self) -> list[frozenset]:
        return sorted((from_mask(x) for x in self.face_masks()), key=canonical_key)

    def is_face(self, tau: Iterable[int]) -> bool:
        t = to_mask(tau)
        return any(t & f == t for f in self.facet_masks())

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by size, starting with the empty face."""
        counts = [0] * (self.dimension + 2)
        for x in self.face_masks():
            counts[bin(x).count("1")] += 1
        return tuple(counts)

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(f)) for f in sorted(self.facets, key=canonical_key)]


@dataclass(frozen=True)
class SimplicialComplement:
    """An ordered sequence of vertex sets generating a square-free monomial ideal.

    Order and repetition are kept as given.
    """

    m: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(vertex_set(g, self.m) for g in self.generators)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, m: int, generators: Iterable[Iterable[int]]) -> "SimplicialComplement":
        return cls(m, tuple(frozenset(g) for g in generators))

    def __len__(self) -> int:
        return len(self.generators)

    def masks(self) -> list[int]:
        return [to_mask(g) for g in self.generators]

    @property
    def has_empty_generator(self) -> bool:
        return any(not g for g in self.generators)

    def as_lists(self) -> list[list[int]]:
        return [sorted(g) for g in self.generators]

    def to_generator_system(self) -> "GeneratorSystem":
        return GeneratorSystem(
            self.m, tuple(tuple(int(v in g) for v in range(1, self.m + 1)) for g in self.generators)
        )


@dataclass(frozen=True)
class GeneratorSystem:
    """A sequence of nonzero exponent vectors in ``N^m`` (repetition allowed)."""

    m: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        for g in gens:
            if len(g) != self.m:
                raise ValueError(f"generator {g} does not have length {self.m}")
            if any(x < 0 for x in g):
                raise ValueError(f"generator {g} has a negative exponent")
            if not any(g):
                raise ValueError("zero exponent vector is not a valid generator")
        object.__setattr__(self, "generators", gens)

    def __len__(self) -> int:
        return len(self.generators)

    def cap(self) -> tuple[int, ...]:
        """Coordinatewise maximum exponent over all generators."""
        if not self.generators:
            return (0,) * self.m
        return lcm_join(self.generators)

    def divides(self, b: Sequence[int]) -> bool:
        """Whether some generator divides ``x^b``, i.e. ``x^b`` lies in the ideal."""
        return any(all(a <= c for a, c in zip(g, b)) for g in self.generators)


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    uniq = set(masks)
    return [a for a in uniq if not any(b != a and a & b == b for b in uniq)]


def _canonical(m: int, masks: Iterable[int]) -> SimplicialComplement:
    sets = sorted((from_mask(x) for x in masks), key=canonical_key)
    return SimplicialComplement(m, tuple(sets))


def complement_from_complex(K: SimplicialComplex) -> SimplicialComplement:
    """Minimal non-faces of ``K``, canonically ordered."""
    faces = K.face_masks()
    out = set()
    for f in faces:
        top = f.bit_length()  # only extend past the largest vertex of f
        for v in range(top, K.m):
            t = f | (1 << v)
            if t in faces:
                continue
            rest = t
            ok = True
            while rest:
                low = rest & -rest
                if (t ^ low) not in faces:
                    ok = False
                    break
                rest ^= low
            if ok:
                out.add(t)
    return _canonical(K.m, out)


def complex_from_complement(P: SimplicialComplement) -> SimplicialComplex:
    """The complex whose faces are the sets containing no generator."""
    if P.has_empty_generator:
        raise ValueError("empty generator: the ideal is the unit ideal and no complex exists")
    m = P.m
    gens = _minimal_masks(P.masks())
    by_vertex = [[g for g in gens if g >> v & 1] for v in range(m)]
    facets = []
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        extended = False
        for v in range(m):
            if face >> v & 1:
                continue
            t = face | (1 << v)
            if any(g & t == g for g in by_vertex[v]):
                continue
            extended = True
            if v >= start:
                stack.append((t, v + 1))
        if not extended:
            facets.append(face)
    return SimplicialComplex(m, frozenset(from_mask(f) for f in facets))


def minimalize(P: SimplicialComplement) -> SimplicialComplement:
    """Drop duplicates and generators strictly containing another; canonical order."""
    return _canonical(P.m, _minimal_masks(P.masks()))


def compress(P: SimplicialComplement, omega: Iterable[int]) -> SimplicialComplement:
    """Delete ``omega`` from every generator, keeping order, multiplicity and empties."""
    w = vertex_set(omega, P.m)
    return SimplicialComplement(P.m, tuple(g - w for g in P.generators))


def star(K: SimplicialComplex, omega: Iterable[int]) -> SimplicialComplex:
    """``{τ ∈ K : ω ∪ τ ∈ K}``; the complex ``{∅}`` when ``ω`` is not a face."""
    w = to_mask(vertex_set(omega, K.m))
    fs = [f for f in K.facet_masks() if f & w == w]
    if not fs:
        return SimplicialComplex.empty_face_only(K.m)
    return SimplicialComplex(K.m, frozenset(from_mask(f) for f in fs))


def link(K: SimplicialComplex, omega: Iterable[int]) -> SimplicialComplex:
    """Faces of the star disjoint from ``ω``."""
    w = to_mask(vertex_set(omega, K.m))
    fs = [f & ~w for f in K.facet_masks() if f & w == w]
    if not fs:
        return SimplicialComplex.empty_face_only(K.m)
    return SimplicialComplex(K.m, frozenset(from_mask(f) for f in fs))


def full_subcomplex(K: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """``K ∩ σ``: the faces of ``K`` contained in ``σ``."""
    s = to_mask(vertex_set(sigma, K.m))
    fs = _maximal_masks([f & s for f in K.facet_masks()])
    return SimplicialComplex(K.m, frozenset(from_mask(f) for f in fs))


def _maximal_masks(masks: Iterable[int]) -> list[int]:
    uniq = set(masks)
    return [a for a in uniq if not any(b != a and a & b == a for b in uniq)]


def iter_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask``)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def all_subsets(m: int) -> Iterator[frozenset]:
    for r in range(m + 1):
        for c in combinations(range(1, m + 1), r):
            yield frozenset(c)
