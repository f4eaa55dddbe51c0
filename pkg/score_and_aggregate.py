"""Score, accuracy, the two-stage comparison rule and the IVTrNWAA operator."""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import List, Sequence, Tuple

import numpy as np

from ivtrnn_arithmetic import ivtrnn_add, ivtrnn_scale
from ivtrnn_errors import InvalidWeights, LengthMismatch, NotTriangular
from ivtrnn_numbers import TOLERANCE, IVTrNN, Trapezoid, TrNN, is_triangular

logger = logging.getLogger(__name__)

WEIGHT_SUM_TOLERANCE = 1e-9
SCORE_TIE_TOLERANCE = 1e-9


class WeightMode(Enum):
    STRICT = "strict"
    RELAXED = "relaxed"


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class WeightVector:
    """Per-criterion weights.

    strict: every weight in [0, 1] and the sum is 1 within 1e-9.
    relaxed: every weight > 0, no constraint on the sum.
    """
    weights: Tuple[float, ...]
    mode: WeightMode = WeightMode.STRICT

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        mode = WeightMode(self.mode)
        if not weights:
            raise InvalidWeights("weight vector is empty")
        if mode is WeightMode.STRICT:
            bad = [w for w in weights if not 0.0 <= w <= 1.0]
            if bad:
                raise InvalidWeights(f"strict weights must lie in [0, 1], got {bad}")
            total = sum(weights)
            if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
                raise InvalidWeights(f"strict weights must sum to 1, got {total}")
        else:
            bad = [w for w in weights if not w > 0.0]
            if bad:
                raise InvalidWeights(f"relaxed weights must be > 0, got {bad}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "mode", mode)

    @classmethod
    def uniform(cls, n: int, value: float, mode: WeightMode = WeightMode.RELAXED) -> "WeightVector":
        return cls(tuple([value] * n), mode)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    @property
    def total(self) -> float:
        return sum(self.weights)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)


@dataclass(frozen=True)
class ScoreAccuracy:
    score: float
    accuracy: float


# --- Score and accuracy ---

def _means(n: IVTrNN, channel: str) -> Tuple[float, float]:
    return getattr(n.lower, channel).mean, getattr(n.upper, channel).mean


def _triangular_mean(t: Trapezoid) -> float:
    # (a + 2b + d) / 4, summed in the same order as the general mean so b == c agrees bit for bit
    return (t.a + t.b + t.b + t.d) / 4


def _triangular_means(n: IVTrNN, channel: str) -> Tuple[float, float]:
    return _triangular_mean(getattr(n.lower, channel)), _triangular_mean(getattr(n.upper, channel))


def _require_triangular(n: IVTrNN) -> None:
    if not is_triangular(n):
        raise NotTriangular("triangular reduction needs b == c in every trapezoid at both levels")


def _absorb_noise(value: float, lo: float, hi: float) -> float:
    # only float noise is clamped; anything further out is returned as is
    if lo - TOLERANCE <= value < lo:
        return lo
    if hi < value <= hi + TOLERANCE:
        return hi
    return value


def _score_from_means(t: Tuple[float, float], i: Tuple[float, float], f: Tuple[float, float]) -> float:
    return _absorb_noise((4 + t[0] + t[1] - i[0] - i[1] - f[0] - f[1]) / 6, 0.0, 1.0)


def _accuracy_from_means(t: Tuple[float, float], f: Tuple[float, float]) -> float:
    return _absorb_noise((t[0] + t[1] - f[0] - f[1]) / 2, -1.0, 1.0)


def score(n: IVTrNN) -> float:
    return _score_from_means(_means(n, "truth"), _means(n, "indet"), _means(n, "falsity"))


def score_triangular(n: IVTrNN) -> float:
    _require_triangular(n)
    return _score_from_means(
        _triangular_means(n, "truth"), _triangular_means(n, "indet"), _triangular_means(n, "falsity")
    )


def accuracy(n: IVTrNN) -> float:
    """Indeterminacy does not enter the accuracy."""
    return _accuracy_from_means(_means(n, "truth"), _means(n, "falsity"))


def accuracy_triangular(n: IVTrNN) -> float:
    _require_triangular(n)
    return _accuracy_from_means(_triangular_means(n, "truth"), _triangular_means(n, "falsity"))


def score_accuracy(n: IVTrNN) -> ScoreAccuracy:
    return ScoreAccuracy(score(n), accuracy(n))


def compare_values(x: ScoreAccuracy, y: ScoreAccuracy) -> Ordering:
    """Score first; accuracy breaks score ties; equal on both means Equal."""
    for left, right in ((x.score, y.score), (x.accuracy, y.accuracy)):
        if abs(left - right) > SCORE_TIE_TOLERANCE:
            return Ordering.GREATER if left > right else Ordering.LESS
    return Ordering.EQUAL


def compare(x: IVTrNN, y: IVTrNN) -> Ordering:
    return compare_values(score_accuracy(x), score_accuracy(y))


def dominates(x: IVTrNN, y: IVTrNN) -> bool:
    """x has every truth component >= y's and every indet/falsity component <= y's, strictly somewhere."""
    xa = np.asarray(x.to_array())
    ya = np.asarray(y.to_array())
    # Flip indet and falsity so that "larger is better" holds for every channel.
    sign = np.array([1.0, -1.0, -1.0]).reshape(1, 3, 1)
    diff = (xa - ya) * sign
    return bool(np.all(diff >= 0) and np.any(diff > 0))


# --- IVTrNWAA ---

def _check_lengths(numbers: Sequence[IVTrNN], w: WeightVector) -> None:
    if not numbers:
        raise LengthMismatch("IVTrNWAA needs at least one number")
    if len(numbers) != len(w):
        raise LengthMismatch(f"{len(numbers)} numbers but {len(w)} weights")


def _merged_level_heights(levels: Sequence[TrNN]) -> Tuple[float, float, float]:
    return (
        min(t.height_t for t in levels),
        max(t.height_i for t in levels),
        max(t.height_f for t in levels),
    )


def ivtrnwaa(numbers: Sequence[IVTrNN], w: WeightVector) -> IVTrNN:
    """Closed form: truth 1 - prod (1 - u)^w, indet and falsity prod u^w, at both levels."""
    _check_lengths(numbers, w)
    # (n, level, channel, component)
    values = np.asarray([n.to_array() for n in numbers], dtype=float)
    weights = w.as_array().reshape(-1, 1, 1)
    # numpy gives 0.0 ** 0.0 == 1.0, so a zero weight contributes a neutral factor.
    truth = 1.0 - np.prod((1.0 - values[:, :, 0, :]) ** weights, axis=0)
    indet = np.prod(values[:, :, 1, :] ** weights, axis=0)
    falsity = np.prod(values[:, :, 2, :] ** weights, axis=0)
    combined = np.stack([truth, indet, falsity], axis=1)
    result = IVTrNN.from_array(
        combined.tolist(),
        _merged_level_heights([n.lower for n in numbers]),
        _merged_level_heights([n.upper for n in numbers]),
    )
    logger.debug(f"IVTrNWAA over {len(numbers)} numbers with weights {w.weights}")
    return result


def _weighted_term(weight: float, n: IVTrNN) -> IVTrNN:
    if weight > 0:
        return ivtrnn_scale(weight, n)
    # Limit of the scalar multiple as the weight goes to 0: the additive zero, heights kept.
    return IVTrNN(*(
        TrNN.from_tuples((0, 0, 0, 0), (1, 1, 1, 1), (1, 1, 1, 1), level.heights)
        for level in (n.lower, n.upper)
    ))


def ivtrnwaa_pairwise_oracle(numbers: Sequence[IVTrNN], w: WeightVector) -> IVTrNN:
    """Same result as ivtrnwaa, computed by scaling each number and folding with addition."""
    _check_lengths(numbers, w)
    terms: List[IVTrNN] = [_weighted_term(weight, n) for weight, n in zip(w, numbers)]
    return reduce(ivtrnn_add, terms)


__all__ = [
    "WEIGHT_SUM_TOLERANCE",
    "SCORE_TIE_TOLERANCE",
    "WeightMode",
    "Ordering",
    "WeightVector",
    "ScoreAccuracy",
    "score",
    "score_triangular",
    "accuracy",
    "accuracy_triangular",
    "score_accuracy",
    "compare",
    "compare_values",
    "dominates",
    "ivtrnwaa",
    "ivtrnwaa_pairwise_oracle",
]
