from fractions import Fraction

import pytest

from src.matcore import RationalMatrix, bandwidth, determinant
from src.mclass import classify, is_z_matrix, check_positive_vector, InverseCheck
from src.banded import check_condition_tri, all_hold
from src.search import (
    GeneratorSpec,
    PatternMode,
    in_band_positions,
    dominant_matrix,
    enforce_condition_tri,
    random_m_matrix,
    random_tridiagonal_m_matrix,
    random_banded_matrix,
)
from src.utils.errors import GeneratorSpecError, SizeLimitError, InternalInconsistencyError


@pytest.mark.parametrize("kwargs, error", [
    ({"order": 13}, SizeLimitError),
    ({"order": 9, "sign_pattern_mode": PatternMode.EXHAUSTIVE}, SizeLimitError),
    ({"order": 0}, SizeLimitError),
    ({"order": 4, "dominance_slack": Fraction(0)}, GeneratorSpecError),
    ({"order": 4, "magnitude_range": (3, 1)}, GeneratorSpecError),
    ({"order": 4, "band": (-1, 1)}, GeneratorSpecError),
    ({"order": 4, "zero_probability": 1.5}, GeneratorSpecError),
    ({"order": 4, "seed": -1}, GeneratorSpecError),
])
def test_spec_validation(kwargs, error):
    with pytest.raises(error):
        GeneratorSpec(**kwargs)


def test_in_band_positions_row_major():
    assert in_band_positions(3, (1, 1)) == [(1, 2), (2, 1), (2, 3), (3, 2)]
    assert in_band_positions(3, (0, 2)) == [(1, 2), (1, 3), (2, 3)]


def test_dominant_matrix_rows():
    """Diagonal = off-diagonal mass + slack"""
    a = dominant_matrix(3, {(1, 2): 2, (1, 3): Fraction(1, 2), (3, 1): 4}, Fraction(1, 3))
    assert a == RationalMatrix.from_rows([
        ["17/6", -2, "-1/2"],
        [0, "1/3", 0],
        [-4, 0, "13/3"],
    ])
    assert all(s == Fraction(1, 3) for s in a.apply([1, 1, 1]))


def test_all_zero_draw_is_diagonal():
    assert random_m_matrix(GeneratorSpec(order=4, zero_probability=1.0)) == RationalMatrix.identity(4)


def test_draws_are_deterministic():
    spec = GeneratorSpec(order=6, band=(2, 2), seed=42)
    assert random_m_matrix(spec) == random_m_matrix(spec)
    assert random_banded_matrix(5, 7) == random_banded_matrix(5, 7)


@pytest.mark.parametrize("order", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("band", [(1, 1), (2, 2), (0, 3)])
def test_m_matrix_generator_is_sound(order, band):
    """Every draw classifies as an M-matrix inside the requested band"""
    for seed in range(1000):
        a = random_m_matrix(GeneratorSpec(order=order, band=band, seed=seed))
        lower, upper = bandwidth(a)
        assert lower <= band[0] and upper <= band[1]
        assert classify(a).is_m


@pytest.mark.parametrize("order", [7, 8, 9, 10, 11, 12])
def test_m_matrix_generator_is_sound_at_large_orders(order):
    """Positive-vector certificate on every draw, full classification on a sample"""
    bands = [(1, 1), (2, 2), (0, 3)]
    for seed in range(1000):
        band = bands[seed % 3]
        a = random_m_matrix(GeneratorSpec(order=order, band=band, seed=seed))
        lower, upper = bandwidth(a)
        assert lower <= band[0] and upper <= band[1]
        assert is_z_matrix(a)
        assert check_positive_vector(a).holds
        if seed % 100 == 0:
            assert classify(a).is_m


def test_failed_post_check_is_an_inconsistency(mocker):
    mocker.patch("src.search.generator.check_inverse_nonneg", return_value=InverseCheck(False, (1, 2)))
    with pytest.raises(InternalInconsistencyError):
        random_m_matrix(GeneratorSpec(order=4, seed=1))


def test_enforce_condition_tri():
    """A triggered implication drops its consequent"""
    kept = enforce_condition_tri(4, {(2, 1): 1, (3, 2): 1, (4, 3): 2, (1, 2): 1, (2, 3): 1})
    assert kept == {(2, 1): 1, (4, 3): 2, (1, 2): 1}


@pytest.mark.parametrize("order", [3, 4, 5, 6, 7])
def test_tridiagonal_generator(order):
    for seed in range(40):
        spec = GeneratorSpec(order=order, seed=seed, zero_probability=0.2)
        a = random_tridiagonal_m_matrix(spec, satisfy_condition=True)
        assert a.is_tridiagonal()
        assert all_hold(check_condition_tri(a))
        assert random_tridiagonal_m_matrix(spec, satisfy_condition=False).is_tridiagonal()


def test_tridiagonal_generator_needs_tridiagonal_band():
    with pytest.raises(GeneratorSpecError):
        random_tridiagonal_m_matrix(GeneratorSpec(order=4, band=(2, 2)), True)


@pytest.mark.parametrize("seed", range(20))
def test_banded_matrix_is_nonsingular(seed):
    a = random_banded_matrix(5, seed, band=(1, 1))
    assert a.is_tridiagonal()
    assert determinant(a) != 0
