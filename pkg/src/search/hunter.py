"""Search for M-matrices that satisfy the pentadiagonal necessary conditions
yet have an inverse that is not pentadiagonal.

Candidates are indexed 0, 1, 2, ...; the budget bounds the indices examined
over the whole hunt, across resumes, so an interrupted and resumed hunt
reports exactly what an uninterrupted one does.
"""
import asyncio
import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path as FilePath
from typing import Any, Callable, Dict, NamedTuple, Optional, Tuple, Union

from .. import config
from ..matcore import RationalMatrix, inverse_direct
from ..mclass import classify, check_principal_minors
from ..digraph import Path, build_digraph, shortest_path, reachable
from ..banded import check_conditions_penta, all_hold
from ..utils.errors import SizeLimitError, InternalInconsistencyError, InvalidPathError, CheckpointMismatchError
from ..utils.logging_config import get_logger, DebugCategory
from ..utils.metrics import Metrics
from .checkpoint import HuntCheckpoint
from .generator import GeneratorSpec, PatternMode, random_m_matrix, RANDOM_MAX_ORDER, EXHAUSTIVE_MAX_ORDER
from .patterns import pattern_count, pattern_at, pattern_to_matrix

logger = get_logger(__name__)

PENTA_BAND = (2, 2)
MIN_HUNT_ORDER = 4

ProgressCallback = Callable[[int, Metrics], None]


class SearchStatus(Enum):
    COUNTEREXAMPLE_FOUND = "COUNTEREXAMPLE_FOUND"
    EXHAUSTED = "EXHAUSTED"
    BUDGET_REACHED = "BUDGET_REACHED"


@dataclass(frozen=True)
class Certificate:
    entry: Tuple[int, int]
    value: Fraction
    path: Path

    def to_dict(self) -> Dict[str, Any]:
        return {"entry": list(self.entry), "value": str(self.value), "path": list(self.path.vertices)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        i, j = data["entry"]
        return cls((int(i), int(j)), Fraction(data["value"]), Path(tuple(int(v) for v in data["path"])))


@dataclass
class SearchOutcome:
    status: SearchStatus
    examined: int
    slice: Dict[str, Any] = field(default_factory=dict)
    candidate: Optional[RationalMatrix] = None
    candidate_index: Optional[int] = None
    certificate: Optional[Certificate] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "examined": self.examined,
            "slice": dict(self.slice),
            "candidate": self.candidate.to_strings() if self.candidate else None,
            "candidate_index": self.candidate_index,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SearchOutcome":
        return cls(
            status=SearchStatus(data["status"]),
            examined=int(data["examined"]),
            slice=dict(data.get("slice") or {}),
            candidate=RationalMatrix.from_rows(data["candidate"]) if data.get("candidate") else None,
            candidate_index=data.get("candidate_index"),
            certificate=Certificate.from_dict(data["certificate"]) if data.get("certificate") else None,
        )


class Evaluation(NamedTuple):
    index: int
    filtered_in: bool
    candidate: RationalMatrix
    certificate: Optional[Certificate] = None


def find_violation(a: RationalMatrix) -> Evaluation:
    """Filter by conditions (4)-(9); certify an inverse entry with |i-j| > 2"""
    if not all_hold(check_conditions_penta(a)):
        return Evaluation(-1, False, a)
    inverse = inverse_direct(a)
    n = a.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if abs(i - j) > 2 and inverse.entry(i, j) != 0:
                path = shortest_path(build_digraph(a), i, j)
                if path is None:
                    raise InternalInconsistencyError(
                        f"Nonzero inverse entry ({i}, {j}) without a path v{i} -> v{j}", details=a
                    )
                return Evaluation(-1, True, a, Certificate((i, j), inverse.entry(i, j), path))
    return Evaluation(-1, True, a)


def verify_certificate(outcome: SearchOutcome) -> None:
    """Re-verify a reported counterexample from scratch"""
    a, cert = outcome.candidate, outcome.certificate
    problems = []
    if a is None or cert is None:
        raise InternalInconsistencyError("Counterexample outcome without candidate or certificate")
    if not classify(a).is_m or not check_principal_minors(a).holds:
        problems.append("candidate is not an M-matrix")
    if not a.is_pentadiagonal():
        problems.append("candidate is not pentadiagonal")
    if not all_hold(check_conditions_penta(a)):
        problems.append("candidate violates a pentadiagonal condition")
    i, j = cert.entry
    if abs(i - j) <= 2:
        problems.append(f"certified entry ({i}, {j}) lies inside the band")
    value = inverse_direct(a).entry(i, j)
    if value == 0 or value != cert.value:
        problems.append(f"inverse entry ({i}, {j}) is {value}, certificate says {cert.value}")
    graph = build_digraph(a)
    try:
        cert.path.validate(graph)
    except InvalidPathError as e:
        problems.append(str(e))
    if (cert.path.source, cert.path.target) != (i, j) or not reachable(graph, i, j):
        problems.append(f"certificate path does not join v{i} to v{j}")
    if problems:
        raise InternalInconsistencyError(f"Certificate failed: {'; '.join(problems)}", details=outcome)


class ConverseHunter:
    def __init__(
        self,
        order: int,
        budget: int,
        mode: PatternMode = PatternMode.EXHAUSTIVE,
        spec: Optional[GeneratorSpec] = None,
        checkpoint_path: Optional[Union[str, FilePath]] = None,
        checkpoint_every: Optional[int] = None,
        progress: Optional[ProgressCallback] = None
    ):
        cap = EXHAUSTIVE_MAX_ORDER if mode is PatternMode.EXHAUSTIVE else RANDOM_MAX_ORDER
        if not MIN_HUNT_ORDER <= order <= cap:
            raise SizeLimitError(f"{mode.value} hunts need order in {MIN_HUNT_ORDER}..{cap}, got {order}")
        if budget < 0:
            raise SizeLimitError("Budget must be non-negative")
        self.logger = get_logger(__name__)
        self.order = order
        self.budget = budget
        self.mode = mode
        base = spec or GeneratorSpec(order=order, sign_pattern_mode=mode)
        self.spec = dataclasses.replace(
            base,
            order=order,
            band=PENTA_BAND,
            sign_pattern_mode=mode,
            magnitude_range=(1, 1) if mode is PatternMode.EXHAUSTIVE else base.magnitude_range,
        )
        self.checkpoint_path = FilePath(checkpoint_path) if checkpoint_path else None
        self.checkpoint_every = checkpoint_every or config.CHECKPOINT_EVERY
        self.progress = progress
        self.metrics = Metrics()
        self.total = pattern_count(order, PENTA_BAND) if mode is PatternMode.EXHAUSTIVE else None

    @property
    def search_slice(self) -> Dict[str, Any]:
        described = {
            "order": self.order,
            "mode": self.mode.value,
            "band": list(PENTA_BAND),
            "magnitudes": list(self.spec.magnitude_range),
            "dominance_slack": str(self.spec.dominance_slack),
        }
        if self.mode is PatternMode.RANDOM:
            described["seed"] = self.spec.seed
            described["zero_probability"] = self.spec.zero_probability
        else:
            described["patterns"] = self.total
        return described

    def candidate_at(self, index: int) -> RationalMatrix:
        if self.mode is PatternMode.EXHAUSTIVE:
            pattern = pattern_at(self.order, PENTA_BAND, index)
            return pattern_to_matrix(self.order, pattern, 1, self.spec.dominance_slack)
        seed = (self.spec.seed + index) % 2 ** 64
        return random_m_matrix(dataclasses.replace(self.spec, seed=seed))

    def evaluate(self, index: int) -> Evaluation:
        return find_violation(self.candidate_at(index))._replace(index=index)

    def _stop_status(self, index: int) -> Optional[SearchStatus]:
        if self.total is not None and index >= self.total:
            return SearchStatus.EXHAUSTED
        if index >= self.budget:
            return SearchStatus.BUDGET_REACHED
        return None

    def _resume(self) -> Tuple[int, Optional[SearchOutcome]]:
        if self.checkpoint_path is None:
            return 0, None
        checkpoint = HuntCheckpoint.load(self.checkpoint_path)
        if checkpoint is None:
            return 0, None
        checkpoint.ensure_matches(self.order, self.mode.value, self.spec.seed)
        try:
            prior = SearchOutcome.from_dict(checkpoint.outcome) if checkpoint.outcome else None
        except (KeyError, TypeError, ValueError) as e:
            raise CheckpointMismatchError(f"Checkpoint outcome is malformed: {e}") from e
        self.logger.info(
            f"Resuming hunt at index {checkpoint.next_index}",
            extra={"category": DebugCategory.SEARCH.value}
        )
        return checkpoint.next_index, prior

    def _save(self, next_index: int, outcome: Optional[SearchOutcome]) -> None:
        if self.checkpoint_path is None:
            return
        HuntCheckpoint(
            order=self.order,
            mode=self.mode.value,
            seed=self.spec.seed,
            last_completed=next_index - 1,
            outcome=outcome.to_dict() if outcome else None,
        ).save(self.checkpoint_path)

    def _record(self, evaluation: Evaluation) -> None:
        self.metrics.increment("examined")
        if evaluation.filtered_in:
            self.metrics.increment("filtered_in")
            self.metrics.increment("inverses")
        if evaluation.certificate is not None:
            self.metrics.increment("counterexamples")

    def _report(self, index: int) -> None:
        self.logger.info(
            f"Hunt progress: {index} candidates, {self.metrics.counters.get('filtered_in', 0)} filtered in",
            extra={"category": DebugCategory.SEARCH.value}
        )
        if self.progress is not None:
            self.progress(index, self.metrics)

    def _found(self, evaluation: Evaluation) -> SearchOutcome:
        outcome = SearchOutcome(
            status=SearchStatus.COUNTEREXAMPLE_FOUND,
            examined=evaluation.index + 1,
            slice=self.search_slice,
            candidate=evaluation.candidate,
            candidate_index=evaluation.index,
            certificate=evaluation.certificate,
        )
        verify_certificate(outcome)
        self.logger.warning(
            f"Counterexample at candidate {evaluation.index}: entry {evaluation.certificate.entry}",
            extra={"category": DebugCategory.SEARCH.value}
        )
        return outcome

    def _prior_result(self, prior: Optional[SearchOutcome]) -> Optional[SearchOutcome]:
        if prior is not None and prior.status is SearchStatus.COUNTEREXAMPLE_FOUND:
            verify_certificate(prior)
            return prior
        return None

    def run(self) -> SearchOutcome:
        index, prior = self._resume()
        found = self._prior_result(prior)
        if found is not None:
            return found
        outcome: Optional[SearchOutcome] = None
        self.metrics.start_phase("hunt")
        try:
            while outcome is None:
                status = self._stop_status(index)
                if status is not None:
                    outcome = SearchOutcome(status, index, self.search_slice)
                    break
                evaluation = self.evaluate(index)
                self._record(evaluation)
                if evaluation.certificate is not None:
                    outcome = self._found(evaluation)
                index += 1
                if index % self.checkpoint_every == 0:
                    self._save(index, None)
                    self._report(index)
        finally:
            self.metrics.end_phase("hunt")
            self._save(index, outcome)
        return outcome

    async def run_async(self, workers: int = 4) -> SearchOutcome:
        """Evaluate candidates in batches of `workers` threads.

        Within a batch the lowest index with a certificate wins, so the result
        equals the sequential one.
        """
        index, prior = self._resume()
        found = self._prior_result(prior)
        if found is not None:
            return found
        outcome: Optional[SearchOutcome] = None
        self.metrics.start_phase("hunt")
        try:
            while outcome is None:
                status = self._stop_status(index)
                if status is not None:
                    outcome = SearchOutcome(status, index, self.search_slice)
                    break
                limit = min(x for x in (self.total, self.budget, index + max(workers, 1)) if x is not None)
                evaluations = await asyncio.gather(
                    *(asyncio.to_thread(self.evaluate, k) for k in range(index, limit))
                )
                for evaluation in evaluations:
                    self._record(evaluation)
                    if evaluation.certificate is not None:
                        outcome = self._found(evaluation)
                        index = evaluation.index
                        break
                    index = evaluation.index
                index += 1
                if index // self.checkpoint_every != (index - len(evaluations)) // self.checkpoint_every:
                    self._save(index, None)
                    self._report(index)
        finally:
            self.metrics.end_phase("hunt")
            self._save(index, outcome)
        return outcome


def hunt_converse_penta(
    order: int,
    budget: int,
    mode: PatternMode = PatternMode.EXHAUSTIVE,
    spec: Optional[GeneratorSpec] = None,
    checkpoint_path: Optional[Union[str, FilePath]] = None
) -> SearchOutcome:
    return ConverseHunter(order, budget, mode, spec, checkpoint_path).run()
