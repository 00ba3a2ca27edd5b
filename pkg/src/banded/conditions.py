from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict

from ..matcore import RationalMatrix, determinant, submatrix
from ..utils.errors import SizeTooSmallError


class ConditionId(Enum):
    TRI_SUB = "TRI_SUB"
    TRI_SUPER = "TRI_SUPER"
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"

    @property
    def reference(self) -> str:
        return _REFERENCES[self]


_REFERENCES = {
    ConditionId.TRI_SUB: "(3)-left",
    ConditionId.TRI_SUPER: "(3)-right",
    ConditionId.P1: "(4)",
    ConditionId.P2: "(5)",
    ConditionId.P3: "(6)",
    ConditionId.P4: "(7)",
    ConditionId.P5: "(8)",
    ConditionId.P6: "(9)",
}


@dataclass(frozen=True)
class Violation:
    index: int
    antecedent: Dict[str, Fraction]
    consequent: Dict[str, Fraction]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "i": self.index,
            "antecedent": {k: str(v) for k, v in self.antecedent.items()},
            "consequent": {k: str(v) for k, v in self.consequent.items()},
        }


@dataclass
class ConditionReport:
    condition_id: ConditionId
    violations: list[Violation] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "condition": self.condition_id.value,
            "reference": self.condition_id.reference,
            "holds": self.holds,
            "violations": [v.to_dict() for v in self.violations],
        }


class _Evaluator:
    """Reads entries and 2x2 minors of A by 1-based index with readable labels"""

    def __init__(self, a: RationalMatrix):
        self.a = a

    def entry(self, i: int, j: int) -> tuple[str, Fraction]:
        return f"a[{i},{j}]", self.a.entry(i, j)

    def minor(self, rows: tuple[int, int], cols: tuple[int, int]) -> tuple[str, Fraction]:
        label = f"det A[{rows[0]},{rows[1]}|{cols[0]},{cols[1]}]"
        return label, determinant(submatrix(self.a, rows, cols))

    def implication(
        self,
        report: ConditionReport,
        i: int,
        antecedent: list[tuple[str, Fraction]],
        consequent: list[tuple[str, Fraction]]
    ) -> None:
        """Antecedent: every value nonzero. Consequent: every value zero."""
        if all(v != 0 for _, v in antecedent) and any(v != 0 for _, v in consequent):
            report.violations.append(Violation(i, dict(antecedent), dict(consequent)))


def check_condition_tri(a: RationalMatrix) -> tuple[ConditionReport, ConditionReport]:
    """No two consecutive nonzeros on the sub- or super-diagonal, 2 <= i <= n-1"""
    n = a.n
    if n < 3:
        raise SizeTooSmallError(f"Tridiagonal conditions need n >= 3, got {n}")
    ev = _Evaluator(a)
    sub = ConditionReport(ConditionId.TRI_SUB)
    sup = ConditionReport(ConditionId.TRI_SUPER)
    for i in range(2, n):
        ev.implication(sub, i, [ev.entry(i, i - 1)], [ev.entry(i + 1, i)])
        ev.implication(sup, i, [ev.entry(i - 1, i)], [ev.entry(i, i + 1)])
    return sub, sup


def check_conditions_penta(a: RationalMatrix) -> list[ConditionReport]:
    """First, second and third order conditions on their stated index ranges"""
    n = a.n
    if n < 4:
        raise SizeTooSmallError(f"Pentadiagonal conditions need n >= 4, got {n}")
    ev = _Evaluator(a)
    reports = {cid: ConditionReport(cid) for cid in (
        ConditionId.P1, ConditionId.P2, ConditionId.P3,
        ConditionId.P4, ConditionId.P5, ConditionId.P6,
    )}

    for i in range(2, n - 1):
        ev.implication(
            reports[ConditionId.P1], i,
            [ev.entry(i, i - 1), ev.entry(i + 1, i)],
            [ev.entry(i + 2, i + 1)]
        )
        ev.implication(
            reports[ConditionId.P2], i,
            [ev.entry(i, i + 1), ev.entry(i + 1, i + 2)],
            [ev.entry(i - 1, i)]
        )

    for i in range(3, n - 1):
        ev.implication(
            reports[ConditionId.P3], i,
            [ev.minor((i - 2, i), (i - 2, i - 1))],
            [ev.entry(i + 2, i)]
        )
        ev.implication(
            reports[ConditionId.P4], i,
            [ev.minor((i, i + 2), (i + 1, i + 2))],
            [ev.entry(i - 2, i)]
        )
        ev.implication(
            reports[ConditionId.P5], i,
            [ev.entry(i, i - 2)],
            [ev.entry(i + 2, i), ev.minor((i - 1, i + 1), (i - 1, i))]
        )
        ev.implication(
            reports[ConditionId.P6], i,
            [ev.entry(i, i + 2)],
            [ev.entry(i - 2, i), ev.minor((i - 1, i + 1), (i, i + 1))]
        )

    return list(reports.values())


def all_hold(reports) -> bool:
    return all(r.holds for r in reports)
