import pytest
from hypothesis import given
from hypothesis import strategies as st

from sctor.chain import ChainComplex, audit, express_in_homology, homology_dims, homology_representatives
from sctor.combinatorics import GeneratorSystem
from sctor.linalg import GF2, QQ, ExactMatrix
from sctor.taylor import taylor_strand


def simplex_boundary(n, field):
    """Chain complex of the full simplex on n vertices (nonempty faces only)."""
    from itertools import combinations

    bases = {q: list(combinations(range(n), q + 1)) for q in range(n)}
    bd = {}
    for q in range(1, n):
        idx = {f: i for i, f in enumerate(bases[q - 1])}
        items = {}
        for col, f in enumerate(bases[q]):
            for i in range(len(f)):
                items[(idx[f[:i] + f[i + 1:]], col)] = (-1) ** i
        bd[q] = ExactMatrix.from_sparse(len(bases[q - 1]), len(bases[q]), items, field)
    return ChainComplex(field, bases, bd)


def test_dd_nonzero_rejected():
    one = ExactMatrix.from_rows([[1]], QQ)
    with pytest.raises(ValueError, match="d∘d"):
        ChainComplex(QQ, {0: ["a"], 1: ["b"], 2: ["c"]}, {1: one, 2: one})


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError, match="shape"):
        ChainComplex(QQ, {0: ["a"], 1: ["b", "c"]}, {1: ExactMatrix.from_rows([[1]], QQ)})


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        ChainComplex(QQ, {0: ["a", "a"]})


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        ChainComplex(QQ, {0: ["a"], 1: ["b"]}, {1: ExactMatrix.from_rows([[1]], GF2)})


def test_dd_zero_only_mod_2():
    # the map 1 -> 2 -> composition 2 vanishes over GF(2) only
    a = ExactMatrix.from_rows([[1]], GF2)
    ChainComplex(GF2, {0: ["x"], 1: ["y"], 2: ["z"]}, {1: a, 2: ExactMatrix.from_rows([[2]], GF2)})
    with pytest.raises(ValueError):
        ChainComplex(QQ, {0: ["x"], 1: ["y"], 2: ["z"]}, {1: ExactMatrix.from_rows([[1]], QQ), 2: ExactMatrix.from_rows([[2]], QQ)})


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("field", [QQ, GF2], ids=["QQ", "GF2"])
def test_simplex_is_acyclic(n, field):
    C = simplex_boundary(n, field)
    assert homology_dims(C) == {q: int(q == 0) for q in range(n)}
    assert C.euler_characteristic() == 1


def test_cochain_direction():
    # coboundary k -> k^2 of a single edge's augmented cochains in degrees -1, 0, 1
    d_1 = ExactMatrix.from_rows([[1], [1]], QQ)
    d0 = ExactMatrix.from_rows([[-1, 1]], QQ)
    C = ChainComplex(QQ, {-1: ["∅"], 0: ["a", "b"], 1: ["ab"]}, {-1: d_1, 0: d0}, direction=+1)
    assert homology_dims(C) == {-1: 0, 0: 0, 1: 0}


def test_taylor_strand_dims():
    P = GeneratorSystem(2, ((2, 0), (1, 1)))
    C = taylor_strand(P, (2, 1), QQ)
    assert [C.dim(q) for q in C.degrees] == [1, 2, 1]
    assert homology_dims(C) == {0: 0, 1: 0, 2: 0}


def test_audit_counts():
    with audit(eager_euler=True) as log:
        simplex_boundary(3, QQ)
        simplex_boundary(2, GF2)
    assert log.complexes == 2 and log.dd_checks == 2 and log.euler_checks == 2


def test_representatives_and_express():
    # circle: 3 vertices, 3 edges
    C = simplex_boundary(3, QQ)
    tri = ChainComplex(QQ, {0: C.basis(0), 1: C.basis(1)}, {1: C.d(1)})
    H = homology_representatives(tri)
    assert len(H.reps(0)) == 1 and len(H.reps(1)) == 1
    z = H.reps(1)[0]
    assert express_in_homology(tri, H, z, 1) == (1,)
    doubled = tuple(2 * x for x in z)
    assert H.express(doubled, 1) == (2,)
    # a boundary has zero class
    assert H.express(tri.d(1).column(0), 0) == (0,)
    with pytest.raises(ValueError, match="not a cycle"):
        H.express((1, 0, 0), 1)
    with pytest.raises(ValueError):
        H.express((1, 0), 1)


@given(st.lists(st.integers(-2, 2), min_size=3, max_size=3))
def test_h0_class_is_augmentation(coeffs):
    C = simplex_boundary(3, QQ)
    circle = ChainComplex(QQ, {0: C.basis(0), 1: C.basis(1)}, {1: C.d(1)})
    H = homology_representatives(circle)
    # the H_0 coordinate is the coefficient sum, scaled by the representative's
    assert H.express(H.reps(0)[0], 0) == (1,)
    c = H.express(tuple(coeffs), 0)
    assert c[0] * sum(H.reps(0)[0]) == sum(coeffs)
