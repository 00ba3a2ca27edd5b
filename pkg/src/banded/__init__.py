from .conditions import (
    ConditionId,
    Violation,
    ConditionReport,
    check_condition_tri,
    check_conditions_penta,
    all_hold,
)
from .theorems import (
    BandVerdict,
    LemmaVerdict,
    verify_lemma_tridiag,
    verify_theorem_tridiag,
    verify_theorem_penta,
    verify_reducibility_remark,
)
from .families import (
    split_tridiagonal_matrix,
    split_tridiagonal_inverse,
    coupled_tridiagonal_matrix,
    coupled_tridiagonal_inverse,
    coupled_gamma,
)

__all__ = [
    "ConditionId",
    "Violation",
    "ConditionReport",
    "check_condition_tri",
    "check_conditions_penta",
    "all_hold",
    "BandVerdict",
    "LemmaVerdict",
    "verify_lemma_tridiag",
    "verify_theorem_tridiag",
    "verify_theorem_penta",
    "verify_reducibility_remark",
    "split_tridiagonal_matrix",
    "split_tridiagonal_inverse",
    "coupled_tridiagonal_matrix",
    "coupled_tridiagonal_inverse",
    "coupled_gamma",
]
