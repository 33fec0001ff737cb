from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcat.exact import Matrix, fraction_str, matrix_from_strings, matrix_to_strings


def matrices(max_rows=5, max_cols=5):
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(0, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                               min_size=r, max_size=r).map(lambda d: Matrix(d, r, c))))


@given(matrices())
def test_rank_matches_rref_pivots(m):
    _, pivots = m.rref()
    assert m.rank() == len(pivots) == m.T.rank()


@given(matrices())
def test_nullspace_is_a_kernel_basis(m):
    ns = m.nullspace()
    assert ns.rows == m.cols and ns.cols == m.cols - m.rank()
    assert (m @ ns).is_zero()
    assert ns.rank() == ns.cols


@given(matrices())
def test_left_nullspace(m):
    ln = m.left_nullspace()
    assert (ln @ m).is_zero()
    assert ln.rows == m.rows - m.rank()


@settings(max_examples=50)
@given(matrices(4, 4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_recovers_consistent_rhs(m, x):
    x = Matrix([[v] for v in x[:m.cols]], m.cols, 1)
    b = m @ x
    y = m.solve(b)
    assert m @ y == b


def test_solve_inconsistent():
    m = Matrix([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        m.solve(Matrix([[0], [1]]))


def test_empty_shapes():
    z = Matrix.zeros(0, 3)
    assert z.rank() == 0
    assert z.nullspace().shape == (3, 3)
    assert (Matrix.zeros(2, 0) @ Matrix.zeros(0, 4)).shape == (2, 4)
    assert Matrix.zeros(3, 0).left_nullspace().shape == (3, 3)


def test_inverse_and_fractions():
    m = Matrix([[2, 1], [1, 1]])
    assert m @ m.inverse() == Matrix.identity(2)
    h = Matrix([[1, 2], [3, 4]]).scale(Fraction(1, 2))
    assert h[0, 0] == Fraction(1, 2)
    assert fraction_str(Fraction(3)) == "3/1"
    assert matrix_from_strings(matrix_to_strings(h), 2, 2) == h


def test_no_floats():
    with pytest.raises(TypeError):
        Matrix([[0.5]])
