from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie.errors import InputError
from homlie.scalar import (
    Matrix,
    det,
    format_rational,
    invert,
    kernel_basis,
    parse_rational,
    rank,
    rational,
    solve_linear,
)
from strategies import invertible_matrices, matrices, rationals, vectors


@pytest.mark.parametrize("text,value", [("3", 3), ("-1/2", Fraction(-1, 2)), ("4/6", Fraction(2, 3)), ("0", 0)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1/0", "", "abc", "1e3"])
def test_parse_rational_rejects(text):
    with pytest.raises(InputError):
        parse_rational(text)


def test_rational_rejects_floats():
    with pytest.raises(InputError):
        rational(0.5)


@given(rationals)
def test_format_parse_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_column_action_convention():
    # M(e_1) = e_2: column 0 holds the image of e_1
    M = Matrix([[0, 0], [1, 0]], 2)
    assert M.apply((1, 0)) == (0, 1)
    assert M.column(0) == (0, 1)


def test_known_inverse_and_det():
    M = Matrix([[2, 1], [1, 1]], 2)
    assert invert(M) == Matrix([[1, -1], [-1, 2]], 2)
    assert det(M.rows) == 1
    assert invert(Matrix([[1, 2], [2, 4]], 2)) is None


@given(invertible_matrices(3))
def test_inverse_is_two_sided(M):
    Minv = invert(M)
    assert M @ Minv == Matrix.identity(3) == Minv @ M


@given(matrices(3, 4))
def test_rank_nullity(M):
    ker = kernel_basis(M)
    assert rank(M) + len(ker) == 4
    for v in ker:
        assert not any(M.apply(v))


@given(matrices(3, 3), vectors(3))
def test_solve_linear_solves(M, x):
    b = M.apply(x)
    y = solve_linear(M, b)
    assert y is not None and M.apply(y) == b


@given(matrices(2, 3), matrices(3, 2), matrices(2, 2))
def test_matmul_associative(A, B, C):
    assert (A @ B) @ C == A @ (B @ C)


@given(st.lists(vectors(3), min_size=3, max_size=3))
def test_det_multiplicative(rows):
    A = Matrix(rows, 3)
    B = Matrix.identity(3) + A.T
    assert det((A @ B).rows) == det(A.rows) * det(B.rows)
