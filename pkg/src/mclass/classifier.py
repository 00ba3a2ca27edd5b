from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from .. import config
from ..matcore import RationalMatrix, IndexSet
from ..utils.errors import InternalInconsistencyError
from ..utils.logging_config import get_logger, DebugCategory
from .conditions import (
    is_z_matrix,
    check_principal_minors,
    check_inverse_nonneg,
    check_positive_vector,
    check_spectral,
)

logger = get_logger(__name__)


class MCondition(Enum):
    PRINCIPAL_MINORS = "principal_minors"
    INVERSE_NONNEG = "inverse_nonneg"
    POSITIVE_VECTOR = "positive_vector"
    SPECTRAL = "spectral"


@dataclass
class MClassReport:
    is_z: bool
    is_m: bool
    method_verdicts: Dict[MCondition, bool] = field(default_factory=dict)
    witness_vector: Optional[Tuple[Fraction, ...]] = None
    witness_inverse: Optional[RationalMatrix] = None
    failing_minor: Optional[Tuple[IndexSet, Fraction]] = None
    failing_inverse_entry: Optional[Tuple[int, int]] = None
    singular: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "is_z": self.is_z,
            "is_m": self.is_m,
            "method_verdicts": {c.value: v for c, v in self.method_verdicts.items()},
            "witness_vector": [str(x) for x in self.witness_vector] if self.witness_vector else None,
            "witness_inverse": self.witness_inverse.to_strings() if self.witness_inverse else None,
            "failing_minor": (
                {"indices": self.failing_minor[0].to_list(), "value": str(self.failing_minor[1])}
                if self.failing_minor else None
            ),
            "failing_inverse_entry": list(self.failing_inverse_entry) if self.failing_inverse_entry else None,
            "singular": self.singular,
        }


def classify(a: RationalMatrix) -> MClassReport:
    """Run every applicable condition and insist that they agree"""
    if not is_z_matrix(a):
        logger.debug("Matrix is not a Z-matrix", extra={"category": DebugCategory.CLASSIFY.value})
        return MClassReport(is_z=False, is_m=False)

    report = MClassReport(is_z=True, is_m=False)
    n = a.n

    if n <= config.MAX_MINOR_ORDER:
        minors = check_principal_minors(a)
        report.method_verdicts[MCondition.PRINCIPAL_MINORS] = minors.holds
        if not minors.holds:
            report.failing_minor = (minors.failing_set, minors.failing_value)

    inverse = check_inverse_nonneg(a)
    report.method_verdicts[MCondition.INVERSE_NONNEG] = inverse.holds
    report.witness_inverse = inverse.inverse
    report.failing_inverse_entry = inverse.failing_entry
    report.singular = inverse.singular

    vector = check_positive_vector(a)
    report.method_verdicts[MCondition.POSITIVE_VECTOR] = vector.holds
    report.witness_vector = vector.witness

    authoritative = {
        c: v for c, v in report.method_verdicts.items() if c is not MCondition.SPECTRAL
    }
    if len(set(authoritative.values())) > 1:
        raise InternalInconsistencyError(
            f"M-matrix conditions disagree: {{{', '.join(f'{c.value}={v}' for c, v in authoritative.items())}}}",
            details=report
        )
    report.is_m = next(iter(authoritative.values()))

    spectral = check_spectral(a)
    report.method_verdicts[MCondition.SPECTRAL] = spectral
    if spectral and not report.is_m:
        raise InternalInconsistencyError(
            "Spectral bound certifies an M-matrix the exact tests reject", details=report
        )

    if report.is_m and any(x <= 0 for x in a.diagonal()):
        raise InternalInconsistencyError(
            "M-matrix with a non-positive diagonal entry", details=report
        )

    logger.debug(
        f"Classified order-{n} matrix: is_m={report.is_m}",
        extra={"category": DebugCategory.CLASSIFY.value}
    )
    return report
