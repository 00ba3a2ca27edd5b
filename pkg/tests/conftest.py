import pytest

from src.matcore import RationalMatrix


@pytest.fixture
def non_z_matrix():
    """Positive off-diagonal entries; not a Z-matrix, though a P-matrix"""
    return RationalMatrix.from_rows([[1, 1, 1], [0, 1, 0], [0, 1, 1]])


@pytest.fixture
def small_m_matrix():
    return RationalMatrix.from_rows([[5, -1, -1], [0, 5, 0], [0, -1, 5]])


@pytest.fixture
def small_m_inverse():
    return RationalMatrix.from_rows([
        ["1/5", "6/125", "1/25"],
        [0, "1/5", 0],
        [0, "1/25", "1/5"],
    ])


@pytest.fixture
def split_matrix():
    """Tridiagonal M-matrix meeting condition (3); its inverse stays tridiagonal"""
    return RationalMatrix.from_rows([
        [2, -1, 0, 0],
        [0, 2, 0, 0],
        [0, -1, 2, -1],
        [0, 0, 0, 2],
    ])


@pytest.fixture
def coupled_matrix():
    """Adds a_21 to the split matrix; (3) fails at i=2 and the inverse fills (3, 1)"""
    return RationalMatrix.from_rows([
        [2, -1, 0, 0],
        [-1, 2, 0, 0],
        [0, -1, 2, -1],
        [0, 0, 0, 2],
    ])


@pytest.fixture
def chain_matrix():
    """Full tridiagonal chain; (4) fails at i=2"""
    return RationalMatrix.from_rows([
        [10, -1, 0, 0],
        [-1, 10, -1, 0],
        [0, -1, 10, -1],
        [0, 0, -1, 10],
    ])


@pytest.fixture
def dense_m_matrix():
    """Order 5, every off-diagonal entry -1: 16 simple paths between any pair"""
    return RationalMatrix.from_rows([
        [10 if i == j else -1 for j in range(5)] for i in range(5)
    ])


@pytest.fixture
def singular_matrix():
    return RationalMatrix.from_rows([[1, 1], [1, 1]])
