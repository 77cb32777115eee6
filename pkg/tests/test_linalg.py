from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from sctor.linalg import GF2, QQ, Echelon, ExactMatrix, FieldSpec, nullspace_basis, parse_field, rank, rref, solve_affine


def int_matrices(max_r=5, max_c=5, lo=-3, hi=3):
    return st.integers(0, max_r).flatmap(
        lambda r: st.integers(0, max_c).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r).map(
                lambda rows: (r, c, rows)
            )
        )
    )


def mk(r, c, rows, field):
    return ExactMatrix.from_rows(rows, field, cols=c)


def brute_rank_mod_p(rows, c, p):
    # |ker| = p^(c - rank); enumerate every vector
    kernel = 0
    for v in product(range(p), repeat=c):
        if all(sum(a * x for a, x in zip(row, v)) % p == 0 for row in rows):
            kernel += 1
    n = 0
    while p**n < kernel:
        n += 1
    return c - n


@given(int_matrices())
def test_rank_matches_sympy(data):
    r, c, rows = data
    expected = sympy.Matrix(r, c, [x for row in rows for x in row]).rank() if r and c else 0
    assert rank(mk(r, c, rows, QQ)) == expected


@given(int_matrices(max_r=4, max_c=5), st.sampled_from([2, 3]))
def test_rank_mod_p_matches_enumeration(data, p):
    r, c, rows = data
    assert rank(mk(r, c, rows, FieldSpec.gf(p))) == brute_rank_mod_p(rows, c, p)


@given(int_matrices(), st.sampled_from([QQ, GF2, FieldSpec.gf(5)]))
def test_rank_nullity(data, field):
    r, c, rows = data
    M = mk(r, c, rows, field)
    null = nullspace_basis(M)
    assert rank(M) + len(null) == c
    for v in null:
        assert not any(M.apply(v))


@given(int_matrices())
def test_reduction_mod_p_cannot_raise_rank(data):
    r, c, rows = data
    q = rank(mk(r, c, rows, QQ))
    assert rank(mk(r, c, rows, GF2)) <= q
    assert rank(mk(r, c, rows, FieldSpec.gf(3))) <= q


@given(int_matrices(), st.sampled_from([QQ, GF2]), st.data())
def test_solve_affine(data, field, draw):
    r, c, rows = data
    M = mk(r, c, rows, field)
    x0 = draw.draw(st.lists(st.integers(-2, 2), min_size=c, max_size=c))
    b = M.apply([field.coerce(x) for x in x0])
    x = solve_affine(M, b)
    assert x is not None and tuple(M.apply(x)) == tuple(b)


def test_solve_affine_inconsistent_and_bad_length():
    M = ExactMatrix.from_rows([[1, 1], [2, 2]], QQ)
    assert solve_affine(M, [1, 3]) is None
    assert solve_affine(ExactMatrix.from_rows([[1, 1], [2, 2]], GF2), [1, 0]) == (1, 0)
    with pytest.raises(ValueError):
        solve_affine(M, [1])


def test_rref_is_reduced():
    M = ExactMatrix.from_rows([[2, 4, 1], [1, 2, 0], [3, 6, 1]], QQ)
    R, piv = rref(M)
    assert piv == (0, 2)
    assert R.entries == ((1, 2, 0), (0, 0, 1))


def test_rational_entries_are_exact():
    M = ExactMatrix.from_rows([[Fraction(1, 3), Fraction(2, 3)], [1, 2]], QQ)
    assert rank(M) == 1
    assert nullspace_basis(M) == [(-2, 1)]


def test_gf2_collapses_even_entries():
    M = ExactMatrix.from_rows([[2, 4], [1, 1]], GF2)
    assert rank(M) == 1


def test_echelon_membership():
    e = Echelon(QQ)
    assert e.add({0: 1, 1: 1})
    assert not e.add({0: 2, 1: 2})
    assert e.contains({0: -1, 1: -1})
    assert not e.contains({1: 1})


def test_five_vertex_degree3_boundary():
    # d out of the 3-tuples of the full strand, columns 123,124,134,234
    # rows 34, with signs from deleting position 1 of 134 and 234
    M = ExactMatrix.from_rows([[0, 0, 1, 1]], QQ)
    assert rank(M) == 1
    assert len(nullspace_basis(M)) == 3
    # σ3∧σ4 is hit
    assert solve_affine(M, [1]) is not None


def test_matmul_and_identity():
    A = ExactMatrix.from_rows([[1, 2], [3, 4]], QQ)
    assert (A @ ExactMatrix.identity(2, QQ)).entries == A.entries
    assert (A @ A).entries == ((7, 10), (15, 22))
    with pytest.raises(ValueError):
        A @ ExactMatrix.zeros(3, 1, QQ)


@pytest.mark.parametrize("text,expected", [("rational", QQ), ("gf:2", GF2), ("gf:7", FieldSpec.gf(7))])
def test_parse_field(text, expected):
    assert parse_field(text) == expected
    assert str(expected) == text


@pytest.mark.parametrize("bad", ["gf:4", "gf:1", "real", "gf:x"])
def test_parse_field_rejects(bad):
    with pytest.raises(ValueError):
        parse_field(bad)
