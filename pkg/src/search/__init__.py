from .generator import (
    PatternMode,
    GeneratorSpec,
    in_band_positions,
    dominant_matrix,
    enforce_condition_tri,
    random_m_matrix,
    random_tridiagonal_m_matrix,
    random_z_matrix,
    random_banded_matrix,
    random_matrix,
)
from .patterns import enumerate_sign_patterns, pattern_count, pattern_at, pattern_to_matrix
from .checkpoint import HuntCheckpoint
from .hunter import (
    SearchStatus,
    Certificate,
    SearchOutcome,
    Evaluation,
    ConverseHunter,
    find_violation,
    verify_certificate,
    hunt_converse_penta,
)

__all__ = [
    "PatternMode",
    "GeneratorSpec",
    "in_band_positions",
    "dominant_matrix",
    "enforce_condition_tri",
    "random_m_matrix",
    "random_tridiagonal_m_matrix",
    "random_z_matrix",
    "random_banded_matrix",
    "random_matrix",
    "enumerate_sign_patterns",
    "pattern_count",
    "pattern_at",
    "pattern_to_matrix",
    "HuntCheckpoint",
    "SearchStatus",
    "Certificate",
    "SearchOutcome",
    "Evaluation",
    "ConverseHunter",
    "find_violation",
    "verify_certificate",
    "hunt_converse_penta",
]
