from fractions import Fraction

import pytest

from src.matcore import RationalMatrix, IndexSet
from src.mclass import (
    is_z_matrix,
    is_p_matrix,
    subsets_lexicographic,
    check_principal_minors,
    check_inverse_nonneg,
    check_positive_vector,
    check_spectral,
    collatz_wielandt_bound,
    spectral_split,
)
from src.utils.errors import NotZMatrixError, SizeLimitError


def test_z_matrix(small_m_matrix, non_z_matrix):
    assert is_z_matrix(small_m_matrix)
    assert is_z_matrix(RationalMatrix.identity(3))
    assert not is_z_matrix(non_z_matrix)


def test_subsets_in_lexicographic_order():
    """Sorted tuples compared lexicographically"""
    assert list(subsets_lexicographic(3)) == [
        (1,), (1, 2), (1, 2, 3), (1, 3), (2,), (2, 3), (3,)
    ]
    assert len(list(subsets_lexicographic(5))) == 2 ** 5 - 1


def test_principal_minors_hold(small_m_matrix, coupled_matrix):
    assert check_principal_minors(small_m_matrix).holds
    assert check_principal_minors(coupled_matrix).holds


def test_first_failing_minor_is_lexicographic():
    """{1, 2} precedes {2} even though both fail"""
    a = RationalMatrix.from_rows([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    result = check_principal_minors(a)
    assert not result.holds
    assert result.failing_set == IndexSet((1, 2))
    assert result.failing_value == -1


def test_zero_matrix_fails_on_first_entry():
    result = check_principal_minors(RationalMatrix.from_rows([[0]]))
    assert result == (False, IndexSet((1,)), 0)


def test_minor_enumeration_is_capped():
    """Orders above the cap are refused rather than enumerated"""
    with pytest.raises(SizeLimitError):
        check_principal_minors(RationalMatrix.identity(17))


def test_p_matrix_need_not_be_z(non_z_matrix):
    """Every principal minor of this non-Z matrix equals 1"""
    assert is_p_matrix(non_z_matrix)


def test_inverse_nonneg(small_m_matrix, small_m_inverse, non_z_matrix, singular_matrix):
    result = check_inverse_nonneg(small_m_matrix)
    assert result.holds
    assert result.inverse == small_m_inverse

    result = check_inverse_nonneg(non_z_matrix)
    assert not result.holds
    assert result.failing_entry == (1, 3)

    result = check_inverse_nonneg(singular_matrix)
    assert not result.holds
    assert result.singular


def test_positive_vector_from_inverse(small_m_matrix):
    """x = A^{-1} 1, scaled to coprime integers"""
    result = check_positive_vector(small_m_matrix)
    assert result.holds
    assert result.witness == (36, 25, 30)
    assert all(v > 0 for v in small_m_matrix.apply(result.witness))


def test_positive_vector_when_ones_fail():
    """A 1 = (-1, 1) is not positive but A^{-1} 1 works"""
    a = RationalMatrix.from_rows([[1, -2], [0, 1]])
    assert a.apply([1, 1]) == (-1, 1)
    assert check_positive_vector(a).witness == (3, 1)


def test_positive_vector_absent():
    assert not check_positive_vector(RationalMatrix.from_rows([[0]])).holds
    assert not check_positive_vector(RationalMatrix.from_rows([[1, -2], [-2, 1]])).holds


def test_positive_vector_needs_z(non_z_matrix):
    with pytest.raises(NotZMatrixError):
        check_positive_vector(non_z_matrix)


def test_spectral_split(small_m_matrix):
    s, b = spectral_split(small_m_matrix)
    assert s == 5
    assert b == RationalMatrix.from_rows([[0, 1, 1], [0, 0, 0], [0, 1, 0]])


def test_collatz_wielandt_bound_is_an_upper_bound(small_m_matrix):
    """B is nilpotent here; the first iterate already bounds rho(B) by 2"""
    _, b = spectral_split(small_m_matrix)
    bound = collatz_wielandt_bound(b, 32, Fraction(1, 1000))
    assert 0 <= bound <= 2


def test_spectral_verdicts(small_m_matrix):
    assert check_spectral(small_m_matrix)
    assert check_spectral(RationalMatrix.identity(3))
    # singular: rho(B) = s exactly, never strictly below
    assert not check_spectral(RationalMatrix.from_rows([[1, -1], [-1, 1]]))
    assert not check_spectral(RationalMatrix.from_rows([[1, -2], [-2, 1]]))
