from itertools import combinations

import pytest
from conftest import FIVE, generator_systems
from hypothesis import given
from hypothesis import strategies as st

from sctor.chain import homology_dims
from sctor.combinatorics import GeneratorSystem, lcm_join
from sctor.linalg import GF2, QQ
from sctor.taylor import (
    apply_d,
    basis_element,
    exactness_sweep,
    multidegrees_up_to,
    multiply,
    sort_sign,
    taylor_differential,
    taylor_product,
    taylor_strand,
    verify_exactness,
)
from sctor.tor import build_strand

X2_XY = GeneratorSystem(2, ((2, 0), (1, 1)))


def unit_chain(P, S):
    return {((0,) * P.m, tuple(S)): 1}


def test_singleton_differential():
    e = basis_element(X2_XY, (1,))
    assert taylor_differential(X2_XY, e) == [(1, (2, 0), basis_element(X2_XY, ()))]


def test_pair_differential_by_hand():
    # lcm (2,1); dropping a_1 leaves lcm (1,1), dropping a_2 leaves (2,0)
    d = apply_d(X2_XY, unit_chain(X2_XY, (1, 2)))
    assert d == {((1, 0), (2,)): 1, ((0, 1), (1,)): -1}


def test_unit_differential_is_zero():
    assert apply_d(X2_XY, unit_chain(X2_XY, ())) == {}


def test_product_by_hand():
    # multiplier (2,0) + (1,1) - (2,1)
    mult, sign, merged = taylor_product(X2_XY, basis_element(X2_XY, (1,)), basis_element(X2_XY, (2,)))
    assert (mult, sign, merged.indices) == ((1, 0), 1, (1, 2))
    assert taylor_product(X2_XY, basis_element(X2_XY, (1,)), basis_element(X2_XY, (1,))) is None
    mult2, sign2, _ = taylor_product(X2_XY, basis_element(X2_XY, (2,)), basis_element(X2_XY, (1,)))
    assert (mult2, sign2) == ((1, 0), -1)


@pytest.mark.parametrize("seq,sign", [((1, 2, 3), 1), ((2, 1), -1), ((3, 1, 2), 1), ((3, 2, 1), -1), ((), 1)])
def test_sort_sign(seq, sign):
    assert sort_sign(seq) == sign


def test_basis_element_validation():
    with pytest.raises(ValueError):
        basis_element(X2_XY, (2, 1))
    with pytest.raises(ValueError):
        basis_element(X2_XY, (3,))


@given(generator_systems(), st.data())
def test_d_squared_zero(P, data):
    k = len(P)
    S = tuple(sorted(data.draw(st.sets(st.integers(1, k)))))
    assert apply_d(P, apply_d(P, unit_chain(P, S))) == {}


@given(generator_systems(), st.data())
def test_leibniz(P, data):
    k = len(P)
    S = tuple(sorted(data.draw(st.sets(st.integers(1, k)))))
    T = tuple(sorted(data.draw(st.sets(st.integers(1, k)))))
    x, y = unit_chain(P, S), unit_chain(P, T)
    lhs = apply_d(P, multiply(P, x, y))
    rhs = multiply(P, apply_d(P, x), y)
    sign = -1 if len(S) % 2 else 1
    for key, c in multiply(P, x, apply_d(P, y)).items():
        rhs[key] = rhs.get(key, 0) + sign * c
    rhs = {k_: v for k_, v in rhs.items() if v}
    assert lhs == rhs


@given(generator_systems(), st.data())
def test_product_associative(P, data):
    sets = [tuple(sorted(data.draw(st.sets(st.integers(1, len(P)))))) for _ in range(3)]
    a, b, c = (unit_chain(P, s) for s in sets)
    assert multiply(P, multiply(P, a, b), c) == multiply(P, a, multiply(P, b, c))


@given(generator_systems())
def test_product_of_singletons_matches_relation(P):
    # a_{i1} ... a_{is} = x^(sum - lcm) a_{i1..is}
    k = len(P)
    idx = tuple(range(1, k + 1))
    chain = unit_chain(P, ())
    for i in idx:
        chain = multiply(P, chain, unit_chain(P, (i,)))
    total = tuple(sum(col) for col in zip(*P.generators))
    mult = tuple(t - l for t, l in zip(total, lcm_join(P.generators)))
    assert chain == {(mult, idx): 1}


def test_strand_sizes_by_enumeration():
    b = (2, 1)
    C = taylor_strand(X2_XY, b)
    expected = {}
    for s in range(3):
        expected[s] = sum(
            1
            for S in combinations(range(1, 3), s)
            if not S or all(x <= y for x, y in zip(lcm_join([X2_XY.generators[i - 1] for i in S]), b))
        )
    assert {q: C.dim(q) for q in C.degrees} == expected


def test_strand_with_no_divisor():
    P = GeneratorSystem(2, ((2, 0), (0, 2)))
    C = taylor_strand(P, (1, 1))
    assert list(C.degrees) == [0] and C.dim(0) == 1
    r = verify_exactness(P, (1, 1))
    assert r.h0_expected == 1 and r.passed


def test_bad_multidegree_length():
    with pytest.raises(ValueError):
        taylor_strand(X2_XY, (1, 1, 1))


def test_squarefree_top_strand_matches_wedge_strand():
    # at b = (1,...,1) every tuple is in the Taylor strand; the wedge strand
    # keeps those whose union is all of [5]
    P = FIVE.to_generator_system()
    T = taylor_strand(P, (1,) * 5)
    W = build_strand(FIVE, range(1, 6))
    for q in W.degrees:
        assert set(W.basis(q)) <= set(T.basis(q))
    full = [S for q in T.degrees for S in T.basis(q) if set().union(*(FIVE.generators[i - 1] for i in S)) == set(range(1, 6))]
    assert sorted(full) == sorted(S for q in W.degrees for S in W.basis(q))


@given(generator_systems(max_m=3, max_k=4))
def test_exactness_sweep(P):
    for r in exactness_sweep(P, QQ):
        assert r.passed, r


@pytest.mark.parametrize("field", [QQ, GF2], ids=["QQ", "GF2"])
def test_exactness_x2_xy(field):
    reports = exactness_sweep(X2_XY, field)
    assert len(reports) == len(list(multidegrees_up_to((2, 1)))) == 6
    assert all(r.passed for r in reports)
    assert [r.h0_expected for r in reports] == [1, 1, 1, 0, 0, 0]


def test_wedge_differential_is_zero_multiplier_part():
    # reducing the Taylor differential mod (x) keeps exactly the terms with multiplier 0
    P = FIVE.to_generator_system()
    for S in [(1, 2, 3, 4), (1, 3, 4), (2, 3, 4), (1, 2)]:
        kept = {
            face.indices: sign
            for sign, mult, face in taylor_differential(P, basis_element(P, S))
            if not any(mult)
        }
        support = frozenset().union(*(FIVE.generators[i - 1] for i in S))
        W = build_strand(FIVE, support)
        q = len(S)
        col = W.d(q).column(W.index(q, S)) if q - 1 in W.degrees and W.dim(q - 1) else ()
        got = {W.basis(q - 1)[i]: v for i, v in enumerate(col) if v}
        assert got == kept
        assert homology_dims(W)  # Euler check passes
