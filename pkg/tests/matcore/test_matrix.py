from decimal import Decimal
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.matcore import (
    RationalMatrix,
    IndexSet,
    to_rational,
    submatrix,
    principal_complement,
    bandwidth,
)
from src.utils.errors import InvalidIndexError, EmptyComplementError, NotSquareError


def test_to_rational_is_exact():
    """Decimal strings and floats convert without rounding"""
    assert to_rational("0.048") == Fraction(6, 125)
    assert to_rational("0.1") == Fraction(1, 10)
    assert to_rational(" 1/3 ") == Fraction(1, 3)
    assert to_rational(Decimal("2.5")) == Fraction(5, 2)
    assert to_rational(0.5) == Fraction(1, 2)
    assert to_rational(np.int64(-7)) == Fraction(-7)


def test_to_rational_rejects_booleans():
    """True is not an entry even though it is an int"""
    with pytest.raises(TypeError):
        to_rational(True)


def test_ragged_rows_rejected():
    """Rows of unequal length"""
    with pytest.raises(NotSquareError):
        RationalMatrix.from_rows([[1, 2], [3]])


def test_from_array():
    """numpy input keeps exact binary values"""
    a = RationalMatrix.from_array(np.array([[0.5, 0.25], [2.0, -1.0]]))
    assert a.entry(1, 1) == Fraction(1, 2)
    assert a.entry(1, 2) == Fraction(1, 4)
    assert a.entry(2, 2) == -1


def test_entry_is_one_based(small_m_matrix):
    """a_12 is the first row, second column"""
    assert small_m_matrix.entry(1, 2) == -1
    assert small_m_matrix.entry(3, 3) == 5


def test_index_set_validation():
    """Out-of-range and duplicate indices"""
    assert IndexSet.of([3, 1], 3) == IndexSet((1, 3))
    with pytest.raises(InvalidIndexError):
        IndexSet.of([0, 1], 3)
    with pytest.raises(InvalidIndexError):
        IndexSet.of([4], 3)
    with pytest.raises(InvalidIndexError):
        IndexSet.of([2, 2], 3)


def test_index_set_complement():
    """Complement within 1..n"""
    assert IndexSet.of([2], 4).complement(4) == IndexSet((1, 3, 4))
    assert not IndexSet.full(3).complement(3)


def test_submatrix(non_z_matrix):
    """Rows and columns are taken in ascending order"""
    assert submatrix(non_z_matrix, [1, 3], [1, 3]) == RationalMatrix.from_rows([[1, 1], [0, 1]])
    assert submatrix(non_z_matrix, [3, 1], [3, 1]) == submatrix(non_z_matrix, [1, 3], [1, 3])


def test_submatrix_may_be_rectangular(small_m_matrix):
    """Row and column sets of different sizes"""
    b = submatrix(small_m_matrix, [1], [2, 3])
    assert b.shape == (1, 2)
    assert b.rows == ((-1, -1),)


def test_submatrix_rejects_empty_sets(small_m_matrix):
    """An empty index set is an input error"""
    with pytest.raises(InvalidIndexError):
        submatrix(small_m_matrix, [], [1])


def test_principal_complement(small_m_matrix):
    """A(alpha) drops the rows and columns in alpha"""
    assert principal_complement(small_m_matrix, [1]) == RationalMatrix.from_rows([[5, 0], [-1, 5]])


def test_principal_complement_of_everything(small_m_matrix):
    """The full index set leaves nothing"""
    with pytest.raises(EmptyComplementError):
        principal_complement(small_m_matrix, [1, 2, 3])


def test_bandwidth(non_z_matrix, coupled_matrix):
    """(lower, upper) from the farthest nonzero entries"""
    assert bandwidth(non_z_matrix) == (1, 2)
    assert bandwidth(coupled_matrix) == (1, 1)
    assert bandwidth(RationalMatrix.identity(4)) == (0, 0)
    assert coupled_matrix.is_tridiagonal()
    assert not non_z_matrix.is_tridiagonal()
    assert non_z_matrix.is_pentadiagonal()


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n)
))
def test_transpose_swaps_bandwidth(rows):
    """Transposition exchanges the lower and upper widths"""
    a = RationalMatrix.from_rows(rows)
    lower, upper = bandwidth(a)
    assert bandwidth(a.transpose()) == (upper, lower)


def test_matmul_and_apply(small_m_matrix):
    """Products against the identity and a vector"""
    assert small_m_matrix @ RationalMatrix.identity(3) == small_m_matrix
    assert small_m_matrix.apply([1, 1, 1]) == (3, 5, 4)


def test_n_requires_square():
    """A rectangular matrix has no order"""
    with pytest.raises(NotSquareError):
        RationalMatrix.zeros(2, 3).n
