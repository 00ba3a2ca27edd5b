"""Verifiers for the banded-inverse results.

Each verifier recomputes both sides of the claimed relationship from scratch
and records any disagreement; disagreements are raised as
InternalInconsistencyError carrying the verdict.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..matcore import RationalMatrix, bandwidth, inverse_direct
from ..mclass import classify
from ..digraph import build_digraph, is_irreducible
from ..utils.errors import NotMMatrixError, NotTridiagonalError, InternalInconsistencyError, SizeTooSmallError
from ..utils.logging_config import get_logger, DebugCategory
from .conditions import ConditionReport, check_condition_tri, check_conditions_penta, all_hold

logger = get_logger(__name__)


@dataclass
class BandVerdict:
    a_band: Tuple[int, int]
    ainv_band: Tuple[int, int]
    condition_reports: list[ConditionReport] = field(default_factory=list)
    inverse_condition_reports: list[ConditionReport] = field(default_factory=list)
    asserted: bool = True
    inconsistencies: list[str] = field(default_factory=list)

    @property
    def a_is_tridiagonal(self) -> bool:
        return max(self.a_band) <= 1

    @property
    def a_is_pentadiagonal(self) -> bool:
        return max(self.a_band) <= 2

    @property
    def ainv_is_tridiagonal(self) -> bool:
        return max(self.ainv_band) <= 1

    @property
    def ainv_is_pentadiagonal(self) -> bool:
        return max(self.ainv_band) <= 2

    @property
    def consistent(self) -> bool:
        return not self.inconsistencies

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a_band": list(self.a_band),
            "ainv_band": list(self.ainv_band),
            "a_is_tridiagonal": self.a_is_tridiagonal,
            "a_is_pentadiagonal": self.a_is_pentadiagonal,
            "ainv_is_tridiagonal": self.ainv_is_tridiagonal,
            "ainv_is_pentadiagonal": self.ainv_is_pentadiagonal,
            "condition_reports": [r.to_dict() for r in self.condition_reports],
            "inverse_condition_reports": [r.to_dict() for r in self.inverse_condition_reports],
            "asserted": self.asserted,
            "consistent": self.consistent,
            "inconsistencies": list(self.inconsistencies),
        }


@dataclass(frozen=True)
class LemmaVerdict:
    holds: bool
    clause: Optional[str] = None
    counterexample: Optional[Tuple[int, int]] = None


def _require_m_matrix(a: RationalMatrix, min_order: int) -> None:
    if a.n < min_order:
        raise SizeTooSmallError(f"Needs n >= {min_order}, got {a.n}")
    if not classify(a).is_m:
        raise NotMMatrixError("Banded inverse theorems are stated for M-matrices")


def _raise_if_inconsistent(verdict: BandVerdict, what: str) -> BandVerdict:
    if verdict.inconsistencies:
        logger.error(
            f"{what} failed: {'; '.join(verdict.inconsistencies)}",
            extra={"category": DebugCategory.BANDED.value}
        )
        raise InternalInconsistencyError(f"{what}: {verdict.inconsistencies[0]}", details=verdict)
    return verdict


def verify_lemma_tridiag(a: RationalMatrix) -> LemmaVerdict:
    """Nonsingular tridiagonal A: zero neighbours of the diagonal stay zero in
    the inverse, and condition (3) passes from A to its inverse."""
    if not a.is_tridiagonal():
        raise NotTridiagonalError(f"Matrix has bandwidth {bandwidth(a)}")
    inverse = inverse_direct(a)
    n = a.n
    for i in range(1, n + 1):
        for j in (i - 1, i + 1):
            if 1 <= j <= n and a.entry(i, j) == 0 and inverse.entry(i, j) != 0:
                return LemmaVerdict(False, "zero-preservation", (i, j))
    if n >= 3 and all_hold(check_condition_tri(a)):
        sub, sup = check_condition_tri(inverse)
        if not sub.holds:
            i = sub.violations[0].index
            return LemmaVerdict(False, "condition-inheritance", (i + 1, i))
        if not sup.holds:
            i = sup.violations[0].index
            return LemmaVerdict(False, "condition-inheritance", (i, i + 1))
    return LemmaVerdict(True)


def verify_theorem_tridiag(a: RationalMatrix) -> BandVerdict:
    """Three-way equivalence for an M-matrix A:
    inverse tridiagonal <=> A tridiagonal with (3) <=> inverse tridiagonal with (3)."""
    _require_m_matrix(a, 3)
    reports = list(check_condition_tri(a))
    inverse = inverse_direct(a)
    inverse_reports = list(check_condition_tri(inverse))
    verdict = BandVerdict(
        a_band=bandwidth(a),
        ainv_band=bandwidth(inverse),
        condition_reports=reports,
        inverse_condition_reports=inverse_reports,
    )

    inverse_tri = verdict.ainv_is_tridiagonal
    a_side = verdict.a_is_tridiagonal and all_hold(reports)
    inverse_side = inverse_tri and all_hold(inverse_reports)
    if inverse_tri != a_side:
        verdict.inconsistencies.append(
            f"inverse tridiagonal={inverse_tri} but A tridiagonal with (3)={a_side}"
        )
    if inverse_tri != inverse_side:
        verdict.inconsistencies.append(
            f"inverse tridiagonal={inverse_tri} but inverse tridiagonal with (3)={inverse_side}"
        )
    logger.debug(
        f"Tridiagonal verdict: bands {verdict.a_band} / {verdict.ainv_band}",
        extra={"category": DebugCategory.BANDED.value}
    )
    return _raise_if_inconsistent(verdict, "Tridiagonal inverse characterization")


def verify_theorem_penta(a: RationalMatrix) -> BandVerdict:
    """Necessity only: a pentadiagonal inverse forces A pentadiagonal and (4)-(9)"""
    _require_m_matrix(a, 4)
    reports = check_conditions_penta(a)
    inverse = inverse_direct(a)
    verdict = BandVerdict(
        a_band=bandwidth(a),
        ainv_band=bandwidth(inverse),
        condition_reports=reports,
        asserted=False,
    )
    if verdict.ainv_is_pentadiagonal:
        verdict.asserted = True
        if not verdict.a_is_pentadiagonal:
            verdict.inconsistencies.append(
                f"inverse is pentadiagonal but A has bandwidth {verdict.a_band}"
            )
        for report in reports:
            if not report.holds:
                verdict.inconsistencies.append(
                    f"inverse is pentadiagonal but condition {report.condition_id.reference} "
                    f"fails at i={report.violations[0].index}"
                )
    return _raise_if_inconsistent(verdict, "Pentadiagonal necessary conditions")


def verify_reducibility_remark(a: RationalMatrix) -> bool:
    """A tridiagonal matrix satisfying (3) is reducible; True when consistent"""
    if not a.is_tridiagonal() or a.n < 3:
        return True
    if not all_hold(check_condition_tri(a)):
        return True
    return not is_irreducible(build_digraph(a))
