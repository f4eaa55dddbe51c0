"""Problem, number and numbers files (JSON, or YAML by extension).

Shape problems (unreadable file, wrong keys, wrong types) raise ParseError.
Files that parse but describe an invalid problem raise ValidationError.
"""
import json
import logging
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as SchemaError

from decision_dataclasses import DecisionMatrix, DecisionProblem, IntervalLinguisticMatrix, LinguisticScale
from ivtrnn_config import MAX_PRECISION, MIN_PRECISION
from ivtrnn_errors import IvtrnnError, ParseError, ValidationError
from ivtrnn_numbers import IVTrNN, TrNN
from rank_in_stages import build_decision_matrix
from score_and_aggregate import WeightMode, WeightVector

logger = logging.getLogger(__name__)

PROBLEM_SCHEMA = "ivtrnn-problem/1"

Quad = Annotated[List[float], Field(min_length=4, max_length=4)]
TermPair = Annotated[List[str], Field(min_length=2, max_length=2)]


# --- Schema models ---
class TrnnLiteral(BaseModel):
    model_config = ConfigDict(extra="forbid")

    truth: Quad
    indet: Quad
    falsity: Quad
    heights: Annotated[List[float], Field(min_length=3, max_length=3)] = [1.0, 0.0, 0.0]

    def to_trnn(self) -> TrNN:
        return TrNN.from_tuples(self.truth, self.indet, self.falsity, self.heights)


class IvtrnnLiteral(BaseModel):
    model_config = ConfigDict(extra="forbid")

    lower: TrnnLiteral
    upper: TrnnLiteral

    def to_ivtrnn(self) -> IVTrNN:
        return IVTrNN(self.lower.to_trnn(), self.upper.to_trnn())


class CriterionModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    weight: float


class OptionsModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    weight_mode: Literal["strict", "relaxed"] = "strict"
    display_precision: Optional[int] = Field(default=None, ge=MIN_PRECISION, le=MAX_PRECISION)


class ProblemFileModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    schema_id: Literal[PROBLEM_SCHEMA] = Field(alias="schema")
    name: str = "problem"
    description: str = ""
    criteria: List[CriterionModel] = Field(min_length=1)
    alternatives: List[str] = Field(min_length=1)
    scale: Dict[str, TrnnLiteral] = Field(default_factory=dict)
    matrix: Dict[str, Dict[str, Union[TermPair, IvtrnnLiteral]]]
    options: OptionsModel = Field(default_factory=OptionsModel)


class NumbersFileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    numbers: List[IvtrnnLiteral] = Field(min_length=1)
    weights: Optional[List[float]] = None
    weight_mode: Literal["strict", "relaxed"] = "strict"


# --- Reading ---
def read_document(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        with open(path, "r") as f:
            if path.suffix.lower() in (".yaml", ".yml"):
                return yaml.safe_load(f)
            return json.load(f)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ParseError(f"{path} is not valid {path.suffix.lstrip('.') or 'JSON'}: {e}") from e


def _parse(model: type, data: Any, path: Union[str, Path]):
    try:
        return model.model_validate(data)
    except SchemaError as e:
        raise ParseError(f"{path} does not match the expected shape:\n{e}") from e


def parse_weights(text: str) -> List[float]:
    """Parse a --weights value like '0.2,0.25,0.25,0.1,0.2'."""
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise ParseError(f"invalid weight list {text!r}: {e}") from e


def _as_validation_error(e: IvtrnnError, path: Union[str, Path]) -> ValidationError:
    return ValidationError(f"{path}: {type(e).__name__}: {e}")


def _check_names(kind: str, names: Sequence[str]) -> None:
    duplicates = sorted({n for n in names if list(names).count(n) > 1})
    if duplicates:
        raise ValidationError(f"duplicate {kind}: {', '.join(duplicates)}")


def _build_problem(doc: ProblemFileModel, weights_override: Optional[Sequence[float]],
                   allow_unnormalized: bool) -> DecisionProblem:
    criteria = [c.name for c in doc.criteria]
    _check_names("criteria", criteria)
    _check_names("alternatives", doc.alternatives)

    missing_rows = [a for a in doc.alternatives if a not in doc.matrix]
    extra_rows = [a for a in doc.matrix if a not in doc.alternatives]
    if missing_rows or extra_rows:
        raise ValidationError(f"matrix rows do not match alternatives (missing={missing_rows}, extra={extra_rows})")
    for alternative in doc.alternatives:
        row = doc.matrix[alternative]
        missing = [c for c in criteria if c not in row]
        extra = [c for c in row if c not in criteria]
        if missing or extra:
            raise ValidationError(f"row {alternative} does not match criteria (missing={missing}, extra={extra})")

    scale = LinguisticScale({term: literal.to_trnn() for term, literal in doc.scale.items()})
    all_terms = all(
        isinstance(doc.matrix[a][c], list) for a in doc.alternatives for c in criteria
    )
    linguistic = None
    if all_terms:
        linguistic = IntervalLinguisticMatrix(
            list(doc.alternatives),
            criteria,
            {(a, c): tuple(doc.matrix[a][c]) for a in doc.alternatives for c in criteria},
        )
        matrix = build_decision_matrix(linguistic, scale)
    else:
        rows = []
        for alternative in doc.alternatives:
            row = []
            for criterion in criteria:
                cell = doc.matrix[alternative][criterion]
                if isinstance(cell, IvtrnnLiteral):
                    row.append(cell.to_ivtrnn())
                else:
                    lower_term, upper_term = cell
                    row.append(IVTrNN(scale.resolve(lower_term), scale.resolve(upper_term)))
            rows.append(row)
        matrix = DecisionMatrix(list(doc.alternatives), criteria, rows)

    mode = WeightMode.RELAXED if allow_unnormalized else WeightMode(doc.options.weight_mode)
    raw_weights = list(weights_override) if weights_override is not None else [c.weight for c in doc.criteria]
    if len(raw_weights) != len(criteria):
        raise ValidationError(f"{len(raw_weights)} weights for {len(criteria)} criteria")
    return DecisionProblem(
        name=doc.name,
        matrix=matrix,
        weights=WeightVector(tuple(raw_weights), mode),
        description=doc.description,
        linguistic=linguistic,
        scale=scale,
        display_precision=doc.options.display_precision,
    )


def load_problem_file(path: Union[str, Path], weights_override: Optional[Sequence[float]] = None,
                      allow_unnormalized: bool = False) -> DecisionProblem:
    doc = _parse(ProblemFileModel, read_document(path), path)
    try:
        problem = _build_problem(doc, weights_override, allow_unnormalized)
    except ValidationError:
        raise
    except IvtrnnError as e:
        raise _as_validation_error(e, path) from e
    logger.info(
        f"Loaded problem {problem.name}: {len(problem.matrix.alternatives)} alternatives, "
        f"{len(problem.matrix.criteria)} criteria, {problem.weights.mode.value} weights"
    )
    return problem


def load_number_file(path: Union[str, Path]) -> IVTrNN:
    literal = _parse(IvtrnnLiteral, read_document(path), path)
    try:
        return literal.to_ivtrnn()
    except IvtrnnError as e:
        raise _as_validation_error(e, path) from e


def load_numbers_file(path: Union[str, Path], weights_override: Optional[Sequence[float]] = None,
                      allow_unnormalized: bool = False) -> Tuple[List[IVTrNN], WeightVector]:
    doc = _parse(NumbersFileModel, read_document(path), path)
    try:
        numbers = [literal.to_ivtrnn() for literal in doc.numbers]
        raw = weights_override if weights_override is not None else doc.weights
        if raw is None:
            raise ValidationError(f"{path}: no weights in the file and none given with --weights")
        if len(raw) != len(numbers):
            raise ValidationError(f"{path}: {len(raw)} weights for {len(numbers)} numbers")
        mode = WeightMode.RELAXED if allow_unnormalized else WeightMode(doc.weight_mode)
        return numbers, WeightVector(tuple(raw), mode)
    except ValidationError:
        raise
    except IvtrnnError as e:
        raise _as_validation_error(e, path) from e


def check_problem(problem: DecisionProblem) -> Tuple[bool, List[str]]:
    """Advisory diagnostics for a loaded problem; never fatal."""
    advisories = problem.matrix.inclusion_advisories()
    if problem.weights.mode is WeightMode.RELAXED:
        advisories.append(f"weights are relaxed (sum={problem.weights.total:g})")
    if problem.scale is not None and problem.linguistic is not None:
        used = {t for pair in problem.linguistic.cells.values() for t in pair}
        unused = [t for t in problem.scale.terms if t not in used]
        if unused:
            advisories.append(f"scale terms never used: {', '.join(unused)}")
    return not advisories, advisories


__all__ = [
    "PROBLEM_SCHEMA",
    "TrnnLiteral",
    "IvtrnnLiteral",
    "ProblemFileModel",
    "NumbersFileModel",
    "read_document",
    "parse_weights",
    "load_problem_file",
    "load_number_file",
    "load_numbers_file",
    "check_problem",
]
