import pytest

from src.matcore import RationalMatrix, inverse_direct
from src.maybee import Sign, SignPattern, predict_sign_structure
from src.maybee import signs as signs_module
from src.digraph import reachable
from src.utils.errors import NotMMatrixError


def test_prediction_matches_inverse(small_m_matrix):
    predicted = predict_sign_structure(small_m_matrix)
    assert predicted.to_list() == [["+", "+", "+"], ["0", "+", "0"], ["0", "+", "+"]]
    assert not predicted.mismatches(SignPattern.from_matrix(inverse_direct(small_m_matrix)))


def test_coupled_prediction(coupled_matrix):
    """3 reaches 1 through 2, so the (3, 1) entry is positive"""
    predicted = predict_sign_structure(coupled_matrix)
    assert predicted.at(3, 1) is Sign.POS
    assert predicted.at(1, 3) is Sign.ZERO
    assert predicted.render().splitlines() == ["+ + 0 0", "+ + 0 0", "+ + + +", "0 0 0 +"]
    assert predicted == SignPattern.from_matrix(inverse_direct(coupled_matrix))


def test_diagonal_m_matrix():
    predicted = predict_sign_structure(RationalMatrix.from_rows([[2, 0], [0, 3]]))
    assert predicted.to_list() == [["+", "0"], ["0", "+"]]


def test_refuses_non_m_input(non_z_matrix):
    """Reachability predicts (1, 2) > 0 but the entry is 0 here"""
    assert inverse_direct(non_z_matrix).entry(1, 2) == 0
    with pytest.raises(NotMMatrixError):
        predict_sign_structure(non_z_matrix)


def test_uses_reachability_only(mocker, chain_matrix):
    """One reachability query per off-diagonal pair, no inverse"""
    query = mocker.patch.object(signs_module, "reachable", wraps=reachable)
    predict_sign_structure(chain_matrix)
    assert query.call_count == 4 * 3


def test_mismatches_listed_row_major():
    a = SignPattern.from_matrix(RationalMatrix.from_rows([[1, 0], [0, 1]]))
    b = SignPattern.from_matrix(RationalMatrix.from_rows([[1, -1], [2, 1]]))
    assert a.mismatches(b) == [(1, 2), (2, 1)]
    assert b.at(1, 2) is Sign.NEG
