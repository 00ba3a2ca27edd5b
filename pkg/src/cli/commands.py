import argparse
import asyncio
import json
import sys
from typing import Any, Dict

from .. import config
from ..matcore import RationalMatrix, inverse_direct
from ..mclass import classify, MClassReport
from ..digraph import build_digraph, to_dot
from ..maybee import inverse_maybee, inverse_entry_maybee, predict_sign_structure, SignPattern
from ..banded import (
    BandVerdict,
    verify_theorem_tridiag,
    verify_theorem_penta,
    verify_lemma_tridiag,
    verify_reducibility_remark,
)
from ..search import ConverseHunter, GeneratorSpec, PatternMode
from ..utils.errors import ExitCode, InternalInconsistencyError
from ..utils.metrics import Metrics
from .matrix_file import load_matrix, format_decimal


def emit_json(payload: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def say(message: str) -> None:
    print(message, file=sys.stderr)


def _path_cap(args: argparse.Namespace) -> int:
    return args.path_cap if args.path_cap is not None else config.default_path_cap()


def _summarize_classification(report: MClassReport) -> None:
    say(f"Z-matrix: {'yes' if report.is_z else 'no'}")
    say(f"M-matrix: {'yes' if report.is_m else 'no'}")
    for condition, verdict in report.method_verdicts.items():
        say(f"  {condition.value}: {verdict}")
    if report.witness_vector:
        say(f"  x with Ax > 0: ({', '.join(str(x) for x in report.witness_vector)})")
    if report.failing_minor:
        alpha, value = report.failing_minor
        say(f"  det A[{alpha.to_list()}] = {value}")


def cmd_classify(args: argparse.Namespace) -> ExitCode:
    a = load_matrix(args.input)
    report = classify(a)
    emit_json(report.to_dict())
    if args.verbose:
        _summarize_classification(report)
    return ExitCode.OK if report.is_m else ExitCode.NEGATIVE


def _matrix_payload(a: RationalMatrix, digits) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"exact": a.to_strings()}
    if digits is not None:
        payload["decimal"] = [[format_decimal(x, digits) for x in row] for row in a.rows]
    return payload


def cmd_invert(args: argparse.Namespace) -> ExitCode:
    a = load_matrix(args.input)
    cap = _path_cap(args)
    payload: Dict[str, Any] = {"method": args.method}
    status = ExitCode.OK

    direct = inverse_direct(a) if args.method in ("direct", "both") else None
    maybee = inverse_maybee(a, cap) if args.method in ("maybee", "both") else None
    payload["inverse"] = _matrix_payload(direct if direct is not None else maybee, args.decimal)
    if direct is not None and maybee is not None:
        payload["match"] = direct == maybee
        if not payload["match"]:
            payload["maybee_inverse"] = _matrix_payload(maybee, args.decimal)
            status = ExitCode.INCONSISTENCY

    if args.explain:
        i, j = args.explain
        value, terms = inverse_entry_maybee(a, i, j, cap)
        payload["explain"] = {
            "entry": [i, j],
            "value": str(value),
            "formula": "det A(i) / det A" if i == j else "sum over paths / det A",
            "terms": [t.to_dict() for t in terms],
        }
        if args.verbose:
            say(f"Entry ({i}, {j}) = {value} from {len(terms)} path terms")

    emit_json(payload)
    return status


def cmd_signs(args: argparse.Namespace) -> ExitCode:
    a = load_matrix(args.input)
    predicted = predict_sign_structure(a)
    if args.dot:
        sys.stdout.write(to_dot(build_digraph(a)))
        return ExitCode.OK

    payload: Dict[str, Any] = {"predicted": predicted.to_list()}
    status = ExitCode.OK
    if args.verify:
        actual = SignPattern.from_matrix(inverse_direct(a))
        mismatches = predicted.mismatches(actual)
        payload["actual"] = actual.to_list()
        payload["match"] = not mismatches
        payload["mismatches"] = [list(m) for m in mismatches]
        if mismatches:
            status = ExitCode.INCONSISTENCY
    emit_json(payload)
    if args.verbose:
        say(predicted.render())
    return status


def cmd_check(args: argparse.Namespace) -> ExitCode:
    a = load_matrix(args.input)
    try:
        if args.which == "tri":
            verdict = verify_theorem_tridiag(a)
        else:
            verdict = verify_theorem_penta(a)
    except InternalInconsistencyError as e:
        if isinstance(e.details, BandVerdict):
            emit_json(e.details.to_dict())
        raise

    payload = verdict.to_dict()
    if args.which == "tri":
        lemma = verify_lemma_tridiag(a) if a.is_tridiagonal() else None
        payload["lemma"] = (
            {"holds": lemma.holds, "clause": lemma.clause,
             "counterexample": list(lemma.counterexample) if lemma.counterexample else None}
            if lemma else None
        )
        payload["reducibility_remark_holds"] = verify_reducibility_remark(a)
        if (lemma and not lemma.holds) or not payload["reducibility_remark_holds"]:
            emit_json(payload)
            return ExitCode.INCONSISTENCY
    emit_json(payload)
    if args.verbose:
        for report in verdict.condition_reports:
            state = "holds" if report.holds else f"fails at i={[v.index for v in report.violations]}"
            say(f"condition {report.condition_id.reference}: {state}")
    return ExitCode.OK


def _progress(index: int, metrics: Metrics) -> None:
    counters = metrics.counters
    say(f"[hunt] {index} candidates, {counters.get('filtered_in', 0)} satisfy (4)-(9)")


def cmd_hunt(args: argparse.Namespace) -> ExitCode:
    mode = PatternMode(args.mode)
    spec = GeneratorSpec(order=args.order, sign_pattern_mode=mode, seed=args.seed)
    hunter = ConverseHunter(
        args.order,
        args.budget,
        mode,
        spec=spec,
        checkpoint_path=args.checkpoint,
        progress=_progress,
    )
    if args.workers > 1:
        outcome = asyncio.run(hunter.run_async(args.workers))
    else:
        outcome = hunter.run()
    emit_json(outcome.to_dict())
    if args.verbose:
        say(f"[hunt] {outcome.status.value} after {outcome.examined} candidates")
        say(f"[hunt] metrics: {hunter.metrics.get_metrics()}")
    return ExitCode.OK


def cmd_dot(args: argparse.Namespace) -> ExitCode:
    a = load_matrix(args.input)
    sys.stdout.write(to_dot(build_digraph(a)))
    return ExitCode.OK
