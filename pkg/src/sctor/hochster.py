"""Independent check of Tor via reduced cohomology of full subcomplexes.

``Tor_{i,σ}`` should equal ``dim H̃^(|σ|-i-1)(K ∩ σ)``. The cochain complex
includes the empty face in degree -1, so ``H̃^{-1}({∅}) = k`` and the unit
entry ``(0, ∅)`` comes out of the same computation instead of being added.
"""

from __future__ import annotations

from .chain import ChainComplex, homology_dims
from .combinatorics import (
    SimplicialComplement,
    SimplicialComplex,
    all_subsets,
    complement_from_complex,
    complex_from_complement,
    from_mask,
    full_subcomplex,
)
from .linalg import QQ, ExactMatrix, FieldSpec
from .tor import BettiTable, bigraded_betti

__all__ = [
    "reduced_cochain_complex",
    "reduced_cohomology",
    "hochster_bigraded",
    "compare_with_lambda",
    "hochster_from_complement_of",
]


def reduced_cochain_complex(K: SimplicialComplex, field: FieldSpec = QQ) -> ChainComplex:
    """Augmented cochain complex; degree ``j`` holds the faces with ``j + 1`` vertices.

    The coboundary is the transpose of the simplicial boundary with faces
    oriented by increasing vertex label: ``∂[v_0..v_j] = Σ (-1)^i [.. v_i-hat ..]``.
    """
    by_dim: dict[int, list[tuple]] = {}
    for x in K.face_masks():
        f = tuple(sorted(from_mask(x)))
        by_dim.setdefault(len(f) - 1, []).append(f)
    for faces in by_dim.values():
        faces.sort()
    index = {j: {f: i for i, f in enumerate(fs)} for j, fs in by_dim.items()}
    cob = {}
    for j in sorted(by_dim):
        if j + 1 not in by_dim:
            continue
        items = {}
        for row, tau in enumerate(by_dim[j + 1]):
            for i in range(len(tau)):
                items[(row, index[j][tau[:i] + tau[i + 1:]])] = -1 if i % 2 else 1
        cob[j] = ExactMatrix.from_sparse(len(by_dim[j + 1]), len(by_dim[j]), items, field)
    return ChainComplex(field, by_dim, cob, direction=+1)


def reduced_cohomology(K: SimplicialComplex, field: FieldSpec = QQ) -> dict[int, int]:
    """Nonzero ``dim H̃^j(K)`` for ``j >= -1``."""
    dims = homology_dims(reduced_cochain_complex(K, field))
    return {j: h for j, h in dims.items() if h}


def hochster_bigraded(K: SimplicialComplex, field: FieldSpec = QQ) -> BettiTable:
    """Betti table from ``H̃^(|σ|-i-1)(K ∩ σ)`` over every ``σ ⊆ [m]``."""
    entries = {}
    for sigma in all_subsets(K.m):
        for j, h in reduced_cohomology(full_subcomplex(K, sigma), field).items():
            i = len(sigma) - j - 1
            if i < 0:
                raise AssertionError(f"H̃^{j} nonzero on {sorted(sigma)} exceeds the dimension bound")
            entries[(i, sigma)] = h
    return BettiTable(entries, field)


def compare_with_lambda(P: SimplicialComplement, field: FieldSpec = QQ) -> list[tuple[int, frozenset, int, int]]:
    """Entries ``(q, σ, wedge, hochster)`` where the two routes disagree."""
    if P.has_empty_generator:
        raise ValueError("complement with an empty generator describes no complex")
    K = complex_from_complement(P)
    return bigraded_betti(P, field).discrepancies(hochster_bigraded(K, field))


def hochster_from_complement_of(K: SimplicialComplex, field: FieldSpec = QQ) -> list:
    """Discrepancies between ``K``'s Hochster table and its minimal complement's wedge table."""
    return bigraded_betti(complement_from_complex(K), field).discrepancies(hochster_bigraded(K, field))
