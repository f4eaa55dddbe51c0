import json
import logging
import os
import threading
from datetime import datetime
from enum import Enum, auto
from functools import cmp_to_key
from typing import Any, Dict, List, Optional

import reference_data
from decision_dataclasses import (
    DecisionMatrix,
    DecisionProblem,
    IntervalLinguisticMatrix,
    LinguisticScale,
    RankedAlternative,
    RankingReport,
    ReferenceDataset,
)
from ivtrnn_config import OUTPUT_DIR
from ivtrnn_errors import LengthMismatch
from ivtrnn_numbers import IVTrNN, TrNN
from score_and_aggregate import (
    Ordering,
    ScoreAccuracy,
    WeightMode,
    WeightVector,
    compare_values,
    ivtrnwaa,
    score_accuracy,
)

logger = logging.getLogger(__name__)


# --- Stages ---
class Stage(Enum):
    AGGREGATE = "aggregate"
    SCORE = "score"
    RANK = "rank"


class PipelineState(Enum):
    IDLE = auto()
    RUNNING = auto()
    SUCCESS = auto()
    ERROR = auto()
    WRITING_FILE = auto()


def build_decision_matrix(lm: IntervalLinguisticMatrix, scale: LinguisticScale) -> DecisionMatrix:
    """Cell (L, U) becomes IVTrNN(lower=scale[L], upper=scale[U])."""
    rows = []
    for alternative in lm.alternatives:
        row = []
        for criterion in lm.criteria:
            lower_term, upper_term = lm.cell(alternative, criterion)
            row.append(IVTrNN(scale.resolve(lower_term), scale.resolve(upper_term)))
        rows.append(row)
    return DecisionMatrix(list(lm.alternatives), list(lm.criteria), rows)


# --- Pipeline ---
class StagedRankingPipeline:
    """Runs AGGREGATE -> SCORE -> RANK over a decision problem, one stage at a time.

    Each stage stores its result (or error string) so callers can inspect
    intermediate values, the way the CLI does for --log-level DEBUG.
    """

    def __init__(self, problem: DecisionProblem, output_dir: str = OUTPUT_DIR):
        self.problem = problem
        self.output_dir = output_dir
        self.state = PipelineState.IDLE
        self.stages = [Stage.AGGREGATE, Stage.SCORE, Stage.RANK]
        self.current_stage_idx = 0
        self.stage_results: Dict[Stage, Any] = {stage: None for stage in self.stages}
        self.stage_errors: Dict[Stage, Optional[str]] = {stage: None for stage in self.stages}
        self.lock = threading.Lock()
        self.report: Optional[RankingReport] = None

    def get_current_stage(self) -> str:
        return self.stages[self.current_stage_idx].value

    def get_stage_result(self, stage: Optional[Stage] = None) -> Any:
        return self.stage_results[stage or self.stages[self.current_stage_idx]]

    def get_stage_error(self, stage: Optional[Stage] = None) -> Optional[str]:
        return self.stage_errors[stage or self.stages[self.current_stage_idx]]

    def run_stage(self) -> str:
        """Run the current stage. Errors are recorded on the stage and re-raised."""
        with self.lock:
            stage = self.stages[self.current_stage_idx]
            self.state = PipelineState.RUNNING
            logger.info(f"Stage {stage.value} started for {self.problem.name}")
            try:
                self.stage_results[stage] = self._run(stage)
            except Exception as e:
                self.stage_errors[stage] = str(e)
                self.state = PipelineState.ERROR
                logger.error(f"Stage {stage.value} failed: {e}")
                raise
            self.stage_errors[stage] = None
            self.state = PipelineState.SUCCESS
            logger.info(f"Stage {stage.value} finished")
            return stage.value

    def next_stage(self) -> Optional[str]:
        with self.lock:
            if self.current_stage_idx < len(self.stages) - 1:
                self.current_stage_idx += 1
                self.state = PipelineState.IDLE
                return self.stages[self.current_stage_idx].value
            return None

    def run_all(self) -> RankingReport:
        while True:
            self.run_stage()
            if self.next_stage() is None:
                break
        return self.report

    def _run(self, stage: Stage) -> Any:
        if stage == Stage.AGGREGATE:
            return self._aggregate()
        if stage == Stage.SCORE:
            return self._score()
        return self._rank()

    def _aggregate(self) -> Dict[str, IVTrNN]:
        matrix, weights = self.problem.matrix, self.problem.weights
        if len(weights) != len(matrix.criteria):
            raise LengthMismatch(f"{len(weights)} weights for {len(matrix.criteria)} criteria")
        if weights.mode is WeightMode.RELAXED:
            logger.warning(f"Relaxed weights in use (sum={weights.total:g}); aggregates are not averages")
        aggregated = {}
        for name, row in zip(matrix.alternatives, matrix.rows):
            aggregated[name] = ivtrnwaa(row, weights)
            logger.debug(f"{name} aggregate: {aggregated[name].to_array()}")
        return aggregated

    def _score(self) -> Dict[str, ScoreAccuracy]:
        aggregated = self.stage_results[Stage.AGGREGATE]
        scores = {name: score_accuracy(n) for name, n in aggregated.items()}
        for name, sa in scores.items():
            logger.debug(f"{name}: S={sa.score:.6f} H={sa.accuracy:.6f}")
        return scores

    def _rank(self) -> RankingReport:
        aggregated = self.stage_results[Stage.AGGREGATE]
        scores: Dict[str, ScoreAccuracy] = self.stage_results[Stage.SCORE]
        names = list(self.problem.matrix.alternatives)
        # sorted() is stable, so full ties keep input order.
        ordered = sorted(names, key=cmp_to_key(lambda x, y: compare_values(scores[y], scores[x]).value))
        ranked = []
        for position, name in enumerate(ordered, start=1):
            tied = [
                other for other in ordered
                if other != name and compare_values(scores[name], scores[other]) is Ordering.EQUAL
            ]
            sa = scores[name]
            ranked.append(RankedAlternative(name, position, sa.score, sa.accuracy, aggregated[name], tied))
        self.report = RankingReport(
            problem=self.problem.name,
            weights=self.problem.weights.weights,
            weight_mode=self.problem.weights.mode,
            ranked=ranked,
        )
        return self.report

    def write_results_to_file(self, path: Optional[str] = None) -> str:
        """Dump the ranking report as JSON; default name is timestamped under output_dir."""
        if self.report is None:
            raise RuntimeError("Run all stages before writing results")
        self.state = PipelineState.WRITING_FILE
        if path is None:
            os.makedirs(self.output_dir, exist_ok=True)
            stamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            path = os.path.join(self.output_dir, f"{self.problem.name}_{stamp}.json")
        else:
            parent = os.path.dirname(path)
            if parent:
                os.makedirs(parent, exist_ok=True)
        with open(path, "w") as f:
            json.dump(self.report.to_dict(), f, indent=2)
        self.state = PipelineState.SUCCESS
        logger.info(f"Ranking report written to {path}")
        return path


def rank_alternatives(dm: DecisionMatrix, w: WeightVector, name: str = "problem") -> RankingReport:
    return StagedRankingPipeline(DecisionProblem(name, dm, w)).run_all()


def reference_scale() -> LinguisticScale:
    return LinguisticScale({term: TrNN.from_tuples(*tif) for term, tif in reference_data.SCALE_TERMS.items()})


def _published_numbers() -> Dict[str, IVTrNN]:
    return {
        name: IVTrNN(TrNN.from_tuples(*lower), TrNN.from_tuples(*upper))
        for name, (lower, upper) in reference_data.PUBLISHED_COMBINED.items()
    }


def reference_dataset() -> ReferenceDataset:
    return ReferenceDataset(
        scale=reference_scale(),
        linguistic=IntervalLinguisticMatrix.from_rows(reference_data.CRITERIA, reference_data.INTERVAL_MATRIX),
        weights=WeightVector(reference_data.STATED_WEIGHTS, WeightMode.STRICT),
        published_combined=_published_numbers(),
        published_scores=dict(reference_data.PUBLISHED_SCORES),
        published_order=list(reference_data.PUBLISHED_ORDER),
        garbled=dict(reference_data.GARBLED_ROWS),
    )


def reference_problem(uniform: bool = False) -> DecisionProblem:
    """The example as a DecisionProblem, with stated or uniform 0.25 weights."""
    data = reference_dataset()
    weights = (
        WeightVector.uniform(len(data.linguistic.criteria), reference_data.UNIFORM_WEIGHT)
        if uniform else data.weights
    )
    return DecisionProblem(
        name="nfr_authentication_uniform" if uniform else "nfr_authentication",
        matrix=build_decision_matrix(data.linguistic, data.scale),
        weights=weights,
        linguistic=data.linguistic,
        scale=data.scale,
        labels=dict(reference_data.ALTERNATIVE_LABELS),
    )


def rank_published_numbers(numbers: Dict[str, IVTrNN]) -> List[str]:
    """Order alternatives by the comparison rule applied directly to given combined numbers."""
    scores = {name: score_accuracy(n) for name, n in numbers.items()}
    return sorted(numbers, key=cmp_to_key(lambda x, y: compare_values(scores[y], scores[x]).value))


__all__ = [
    "Stage",
    "PipelineState",
    "StagedRankingPipeline",
    "build_decision_matrix",
    "rank_alternatives",
    "reference_scale",
    "reference_dataset",
    "reference_problem",
    "rank_published_numbers",
]
