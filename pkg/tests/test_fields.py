from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from traceforge.errors import DivisionByZero
from traceforge.fields import GF, QQ, Matrix, rank, rref, solve_homogeneous


def test_rational_arithmetic():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.element(4, 6) == Fraction(2, 3)
    assert QQ.element(4, 6).denominator == 3


def test_prime_field_inverse():
    F5 = GF(5)
    assert F5.inv(3) == 2
    assert F5.mul(3, F5.inv(3)) == 1


def test_inversion_of_zero_raises():
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))
    with pytest.raises(DivisionByZero):
        GF(5).inv(0)
    with pytest.raises(DivisionByZero):
        GF(7).div(3, 0)


def test_gf_rejects_composites():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)


def test_gf_parses_fractions():
    F5 = GF(5)
    assert F5.parse("1/2") == F5.div(1, 2) == 3


def test_rref_dependent_rows():
    m = Matrix.from_rows(QQ, [[1, 2], [2, 4]])
    red, piv = rref(m)
    assert piv == (0,)
    assert rank(m) == 1
    assert red.rows[0] == (Fraction(1), Fraction(2))
    assert red.rows[1] == (Fraction(0), Fraction(0))


def test_rref_identity():
    m = Matrix.from_rows(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    red, piv = rref(m)
    assert red == m and piv == (0, 1, 2)


def test_rref_row_swap_mod_2():
    m = Matrix.from_rows(GF(2), [[0, 1], [1, 0]])
    red, piv = rref(m)
    assert red.rows == ((1, 0), (0, 1)) and piv == (0, 1)


def test_nullspace_examples():
    assert solve_homogeneous(Matrix.from_rows(GF(2), [[1, 1]])) == [(1, 1)]
    identity = Matrix.from_rows(QQ, [[1, 0], [0, 1]])
    assert solve_homogeneous(identity) == []
    zero = Matrix.from_rows(QQ, [[0, 0, 0], [0, 0, 0]])
    assert len(solve_homogeneous(zero)) == 3


small_fraction = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@settings(max_examples=100, deadline=None)
@given(small_fraction, small_fraction, small_fraction)
def test_rational_field_axioms(a, b, c):
    assert QQ.add(QQ.add(a, b), c) == QQ.add(a, QQ.add(b, c))
    assert QQ.mul(QQ.mul(a, b), c) == QQ.mul(a, QQ.mul(b, c))
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    assert QQ.add(a, QQ.neg(a)) == QQ.zero
    if a != 0:
        assert QQ.mul(a, QQ.inv(a)) == QQ.one


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(0, 48), st.integers(0, 48),
       st.integers(0, 48))
def test_prime_field_axioms(p, a, b, c):
    f = GF(p)
    a, b, c = a % p, b % p, c % p
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    if a:
        assert f.mul(a, f.inv(a)) == 1


matrix_entries = st.integers(-4, 4)


def _random_matrix(draw, field):
    nr = draw(st.integers(1, 4))
    nc = draw(st.integers(1, 4))
    rows = [[field.element(draw(matrix_entries)) for _ in range(nc)]
            for _ in range(nr)]
    return Matrix.from_rows(field, rows)


@st.composite
def matrices(draw):
    field = draw(st.sampled_from([QQ, GF(2), GF(5)]))
    return _random_matrix(draw, field)


@settings(max_examples=120, deadline=None)
@given(matrices())
def test_rref_idempotent_and_rank_stable(m):
    red, piv = rref(m)
    again, piv2 = rref(red)
    assert again == red and piv2 == piv
    assert rank(m) == rank(red) == len(piv)


@settings(max_examples=120, deadline=None)
@given(matrices())
def test_nullspace_vectors_annihilate(m):
    f = m.field
    basis = solve_homogeneous(m)
    assert len(basis) == m.ncols - rank(m)
    for v in basis:
        for row in m.rows:
            acc = f.zero
            for x, y in zip(row, v):
                acc = f.add(acc, f.mul(x, y))
            assert f.is_zero(acc)
