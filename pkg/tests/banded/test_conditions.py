import pytest

from src.matcore import RationalMatrix
from src.banded import ConditionId, check_condition_tri, check_conditions_penta, all_hold
from src.utils.errors import SizeTooSmallError


def diagonal_ten(n, entries):
    """Order-n matrix with 10 on the diagonal and the given (i, j) entries"""
    rows = [[10 if i == j else 0 for j in range(1, n + 1)] for i in range(1, n + 1)]
    for (i, j), value in entries.items():
        rows[i - 1][j - 1] = value
    return RationalMatrix.from_rows(rows)


def by_id(reports):
    return {r.condition_id: r for r in reports}


def test_condition_ids_carry_references():
    assert ConditionId.TRI_SUB.reference == "(3)-left"
    assert ConditionId.P1.reference == "(4)"
    assert ConditionId.P6.reference == "(9)"


def test_split_matrix_meets_condition(split_matrix):
    sub, sup = check_condition_tri(split_matrix)
    assert sub.holds and sup.holds


def test_coupled_matrix_fails_sub_diagonal(coupled_matrix):
    """a_21 and a_32 are consecutive sub-diagonal nonzeros"""
    sub, sup = check_condition_tri(coupled_matrix)
    assert sup.holds
    assert [v.index for v in sub.violations] == [2]
    violation = sub.violations[0]
    assert violation.antecedent == {"a[2,1]": -1}
    assert violation.consequent == {"a[3,2]": -1}


def test_bidiagonal_fails_super_diagonal():
    a = RationalMatrix.from_rows([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    sub, sup = check_condition_tri(a)
    assert sub.holds
    assert [v.index for v in sup.violations] == [2]


def test_tridiagonal_condition_needs_order_three():
    with pytest.raises(SizeTooSmallError):
        check_condition_tri(RationalMatrix.identity(2))


def test_pentadiagonal_conditions_need_order_four():
    with pytest.raises(SizeTooSmallError):
        check_conditions_penta(RationalMatrix.identity(3))


def test_alternating_tridiagonal_meets_all_six():
    a = diagonal_ten(5, {(2, 1): -1, (1, 2): -1, (4, 3): -1, (3, 4): -1})
    reports = check_conditions_penta(a)
    assert [r.condition_id for r in reports] == [
        ConditionId.P1, ConditionId.P2, ConditionId.P3,
        ConditionId.P4, ConditionId.P5, ConditionId.P6,
    ]
    assert all_hold(reports)


def test_chain_fails_first_order_conditions(chain_matrix):
    reports = by_id(check_conditions_penta(chain_matrix))
    p1 = reports[ConditionId.P1]
    assert [v.index for v in p1.violations] == [2]
    assert p1.violations[0].antecedent == {"a[2,1]": -1, "a[3,2]": -1}
    assert p1.violations[0].consequent == {"a[4,3]": -1}
    assert not reports[ConditionId.P2].holds
    # the second-order ranges are empty at n = 4
    assert all(reports[c].holds for c in (ConditionId.P3, ConditionId.P4, ConditionId.P5, ConditionId.P6))


def test_outer_diagonal_pair_fails_only_p5():
    """a_31 != 0 forces a_53 = 0"""
    a = diagonal_ten(5, {(3, 1): -1, (5, 3): -1})
    reports = by_id(check_conditions_penta(a))
    failing = [c for c, r in reports.items() if not r.holds]
    assert failing == [ConditionId.P5]
    violation = reports[ConditionId.P5].violations[0]
    assert violation.index == 3
    assert violation.consequent["a[5,3]"] == -1


def test_minor_antecedent_is_literal():
    """(6) reads det A[i-2, i | i-2, i-1] with those exact rows and columns"""
    a = diagonal_ten(5, {(3, 2): -1, (5, 3): -1})
    reports = by_id(check_conditions_penta(a))
    failing = [c for c, r in reports.items() if not r.holds]
    assert failing == [ConditionId.P3]
    violation = reports[ConditionId.P3].violations[0]
    assert violation.antecedent == {"det A[1,3|1,2]": -10}


def test_report_serializes(coupled_matrix):
    sub, _ = check_condition_tri(coupled_matrix)
    assert sub.to_dict() == {
        "condition": "TRI_SUB",
        "reference": "(3)-left",
        "holds": False,
        "violations": [{"i": 2, "antecedent": {"a[2,1]": "-1"}, "consequent": {"a[3,2]": "-1"}}],
    }
