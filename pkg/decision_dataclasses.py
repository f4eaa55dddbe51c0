from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ivtrnn_errors import UnknownTerm, ValidationError
from ivtrnn_numbers import IVTrNN, TrNN
from score_and_aggregate import WeightMode, WeightVector


# --- Linguistic inputs ---
@dataclass
class LinguisticScale:
    """Named evaluation terms, each mapped to a TrNN."""
    terms: Dict[str, TrNN] = field(default_factory=dict)

    def resolve(self, term: str) -> TrNN:
        try:
            return self.terms[term]
        except KeyError:
            raise UnknownTerm(f"term {term!r} is not in the scale (known: {', '.join(self.terms)})") from None

    def __contains__(self, term: str) -> bool:
        return term in self.terms

    def to_dict(self) -> Dict[str, Any]:
        return {name: trnn.to_dict() for name, trnn in self.terms.items()}


@dataclass
class IntervalLinguisticMatrix:
    """Alternatives x criteria, each cell a (lower term, upper term) pair."""
    alternatives: List[str]
    criteria: List[str]
    cells: Dict[Tuple[str, str], Tuple[str, str]] = field(default_factory=dict)

    def __post_init__(self):
        missing = [(a, c) for a in self.alternatives for c in self.criteria if (a, c) not in self.cells]
        if missing:
            raise ValidationError(f"interval matrix is missing cells: {missing}")

    @classmethod
    def from_rows(cls, criteria: List[str], rows: Dict[str, List[Tuple[str, str]]]) -> "IntervalLinguisticMatrix":
        cells = {}
        for alternative, row in rows.items():
            if len(row) != len(criteria):
                raise ValidationError(f"row {alternative} has {len(row)} cells for {len(criteria)} criteria")
            for criterion, pair in zip(criteria, row):
                cells[(alternative, criterion)] = tuple(pair)
        return cls(list(rows), list(criteria), cells)

    def cell(self, alternative: str, criterion: str) -> Tuple[str, str]:
        return self.cells[(alternative, criterion)]


# --- Numeric decision model ---
@dataclass
class DecisionMatrix:
    """m x n grid of IVTrNN aligned to alternatives x criteria."""
    alternatives: List[str]
    criteria: List[str]
    rows: List[List[IVTrNN]] = field(default_factory=list)

    def __post_init__(self):
        if len(self.rows) != len(self.alternatives):
            raise ValidationError(f"{len(self.rows)} rows for {len(self.alternatives)} alternatives")
        for name, row in zip(self.alternatives, self.rows):
            if len(row) != len(self.criteria):
                raise ValidationError(f"row {name} has {len(row)} entries for {len(self.criteria)} criteria")

    def row(self, alternative: str) -> List[IVTrNN]:
        return self.rows[self.alternatives.index(alternative)]

    def entry(self, alternative: str, criterion: str) -> IVTrNN:
        return self.row(alternative)[self.criteria.index(criterion)]

    def inclusion_advisories(self) -> List[str]:
        messages = []
        for name, row in zip(self.alternatives, self.rows):
            for criterion, number in zip(self.criteria, row):
                messages.extend(f"{name}x{criterion}: {m}" for m in number.inclusion_violations())
        return messages


@dataclass
class DecisionProblem:
    name: str
    matrix: DecisionMatrix
    weights: WeightVector
    description: str = ""
    linguistic: Optional[IntervalLinguisticMatrix] = None
    scale: Optional[LinguisticScale] = None
    display_precision: Optional[int] = None
    labels: Dict[str, str] = field(default_factory=dict)


# --- Ranking output ---
@dataclass
class RankedAlternative:
    name: str
    rank: int
    score: float
    accuracy: float
    aggregate: IVTrNN
    tied_with: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alternative": self.name,
            "rank": self.rank,
            "score": self.score,
            "accuracy": self.accuracy,
            "tied_with": list(self.tied_with),
            "aggregate": self.aggregate.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RankedAlternative":
        return cls(
            name=data["alternative"],
            rank=int(data["rank"]),
            score=float(data["score"]),
            accuracy=float(data["accuracy"]),
            aggregate=IVTrNN.from_dict(data["aggregate"]),
            tied_with=list(data.get("tied_with", [])),
        )


@dataclass
class RankingReport:
    """Alternatives in rank order (best first)."""
    problem: str
    weights: Tuple[float, ...]
    weight_mode: WeightMode
    ranked: List[RankedAlternative] = field(default_factory=list)

    @property
    def ordering(self) -> List[str]:
        return [r.name for r in self.ranked]

    @property
    def best(self) -> Optional[str]:
        return self.ranked[0].name if self.ranked else None

    @property
    def ties(self) -> List[List[str]]:
        groups, seen = [], set()
        for r in self.ranked:
            if r.tied_with and r.name not in seen:
                group = [r.name] + list(r.tied_with)
                seen.update(group)
                groups.append(group)
        return groups

    def to_dict(self) -> Dict[str, Any]:
        return {
            "problem": self.problem,
            "weights": list(self.weights),
            "weight_mode": self.weight_mode.value,
            "best": self.best,
            "ordering": self.ordering,
            "ranking": [r.to_dict() for r in self.ranked],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RankingReport":
        return cls(
            problem=data["problem"],
            weights=tuple(float(w) for w in data["weights"]),
            weight_mode=WeightMode(data["weight_mode"]),
            ranked=[RankedAlternative.from_dict(r) for r in data["ranking"]],
        )

    def to_template_context(self) -> Dict[str, Any]:
        """Return a dict shaped for ranking_report.txt.jinja2 rendering."""
        return {
            "problem": self.problem,
            "weights": list(self.weights),
            "weight_mode": self.weight_mode.value,
            "best": self.best,
            "ordering": self.ordering,
            "ties": self.ties,
            "rows": [
                {
                    "rank": r.rank,
                    "alternative": r.name,
                    "score": r.score,
                    "accuracy": r.accuracy,
                    "tied_with": r.tied_with,
                }
                for r in self.ranked
            ],
        }


# --- Reference dataset and reconciliation ---
@dataclass
class ReferenceDataset:
    scale: LinguisticScale
    linguistic: IntervalLinguisticMatrix
    weights: WeightVector
    published_combined: Dict[str, IVTrNN]
    published_scores: Dict[str, float]
    published_order: List[str]
    garbled: Dict[str, str] = field(default_factory=dict)


@dataclass
class CombinedRowCheck:
    """One alternative's recomputed combined number against the published one."""
    alternative: str
    computed: IVTrNN
    published: IVTrNN
    # |round(computed, 4) - published| per [level][channel][component]
    deltas: List[List[List[float]]]
    checked_delta: float
    matches: bool
    note: str = ""

    @property
    def verdict(self) -> str:
        return "MATCH" if self.matches else "MISMATCH"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alternative": self.alternative,
            "verdict": self.verdict,
            "checked_delta": self.checked_delta,
            "computed": self.computed.to_array(),
            "published": self.published.to_array(),
            "deltas": self.deltas,
            "note": self.note,
        }


@dataclass
class ScoreRowCheck:
    alternative: str
    recomputed: float
    published: float
    delta: float
    flagged: bool
    within_bound: bool
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alternative": self.alternative,
            "recomputed": self.recomputed,
            "published": self.published,
            "delta": self.delta,
            "flagged": self.flagged,
            "within_bound": self.within_bound,
            "note": self.note,
        }


@dataclass
class ReconciliationReport:
    regime: str
    weights: Tuple[float, ...]
    combined_rows: List[CombinedRowCheck] = field(default_factory=list)
    score_rows: List[ScoreRowCheck] = field(default_factory=list)
    # order from scoring the published combined numbers
    computed_order: List[str] = field(default_factory=list)
    published_order: List[str] = field(default_factory=list)
    # order from ranking the interval matrix under this regime's weights
    matrix_order: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def matching_rows(self) -> List[str]:
        return [r.alternative for r in self.combined_rows if r.matches]

    @property
    def mismatching_rows(self) -> List[str]:
        return [r.alternative for r in self.combined_rows if not r.matches]

    @property
    def order_matches(self) -> bool:
        return self.computed_order == self.published_order

    def to_dict(self) -> Dict[str, Any]:
        return {
            "regime": self.regime,
            "weights": list(self.weights),
            "matching_rows": self.matching_rows,
            "mismatching_rows": self.mismatching_rows,
            "combined_rows": [r.to_dict() for r in self.combined_rows],
            "score_rows": [r.to_dict() for r in self.score_rows],
            "computed_order": self.computed_order,
            "published_order": self.published_order,
            "order_matches": self.order_matches,
            "matrix_order": self.matrix_order,
            "notes": self.notes,
        }

    def to_template_context(self) -> Dict[str, Any]:
        return {
            **self.to_dict(),
            "combined_rows": self.combined_rows,
            "score_rows": self.score_rows,
        }


__all__ = [
    "LinguisticScale",
    "IntervalLinguisticMatrix",
    "DecisionMatrix",
    "DecisionProblem",
    "RankedAlternative",
    "RankingReport",
    "ReferenceDataset",
    "CombinedRowCheck",
    "ScoreRowCheck",
    "ReconciliationReport",
]
