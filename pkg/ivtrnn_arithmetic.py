"""Operational laws for TrNN and IVTrNN: addition, multiplication,
scalar multiple and power.

Every law works componentwise on the four abscissae of each trapezoid;
the IVTrNN versions apply the TrNN law to the lower and upper level
independently.
"""
from typing import Callable

from ivtrnn_errors import NonPositiveLambda
from ivtrnn_numbers import IVTrNN, Trapezoid, TrNN

ComponentLaw = Callable[[float, float], float]


def probabilistic_sum(u: float, v: float) -> float:
    return u + v - u * v


def product(u: float, v: float) -> float:
    return u * v


def _combine(x: Trapezoid, y: Trapezoid, law: ComponentLaw) -> Trapezoid:
    return Trapezoid(*(law(u, v) for u, v in zip(x, y)))


def _map(x: Trapezoid, law: Callable[[float], float]) -> Trapezoid:
    return Trapezoid(*(law(u) for u in x))


def _check_lambda(lam: float) -> float:
    if not lam > 0:
        raise NonPositiveLambda(f"lambda must be > 0, got {lam}")
    return float(lam)


def _merged_heights(x: TrNN, y: TrNN):
    return dict(
        height_t=min(x.height_t, y.height_t),
        height_i=max(x.height_i, y.height_i),
        height_f=max(x.height_f, y.height_f),
    )


# --- TrNN laws ---

def trnn_add(x: TrNN, y: TrNN) -> TrNN:
    return TrNN(
        _combine(x.truth, y.truth, probabilistic_sum),
        _combine(x.indet, y.indet, product),
        _combine(x.falsity, y.falsity, product),
        **_merged_heights(x, y),
    )


def trnn_mul(x: TrNN, y: TrNN) -> TrNN:
    return TrNN(
        _combine(x.truth, y.truth, product),
        _combine(x.indet, y.indet, probabilistic_sum),
        _combine(x.falsity, y.falsity, probabilistic_sum),
        **_merged_heights(x, y),
    )


def trnn_scale(lam: float, x: TrNN) -> TrNN:
    lam = _check_lambda(lam)
    return TrNN(
        _map(x.truth, lambda u: 1 - (1 - u) ** lam),
        _map(x.indet, lambda u: u ** lam),
        _map(x.falsity, lambda u: u ** lam),
        x.height_t, x.height_i, x.height_f,
    )


def trnn_pow(x: TrNN, lam: float) -> TrNN:
    lam = _check_lambda(lam)
    return TrNN(
        _map(x.truth, lambda u: u ** lam),
        _map(x.indet, lambda u: 1 - (1 - u) ** lam),
        _map(x.falsity, lambda u: 1 - (1 - u) ** lam),
        x.height_t, x.height_i, x.height_f,
    )


# --- IVTrNN laws ---

def ivtrnn_add(x: IVTrNN, y: IVTrNN) -> IVTrNN:
    return IVTrNN(trnn_add(x.lower, y.lower), trnn_add(x.upper, y.upper))


def ivtrnn_mul(x: IVTrNN, y: IVTrNN) -> IVTrNN:
    return IVTrNN(trnn_mul(x.lower, y.lower), trnn_mul(x.upper, y.upper))


def ivtrnn_scale(lam: float, x: IVTrNN) -> IVTrNN:
    return IVTrNN(trnn_scale(lam, x.lower), trnn_scale(lam, x.upper))


def ivtrnn_pow(x: IVTrNN, lam: float) -> IVTrNN:
    return IVTrNN(trnn_pow(x.lower, lam), trnn_pow(x.upper, lam))


ZERO_TRNN = TrNN.from_tuples((0, 0, 0, 0), (1, 1, 1, 1), (1, 1, 1, 1))
ONE_TRNN = TrNN.from_tuples((1, 1, 1, 1), (0, 0, 0, 0), (0, 0, 0, 0))

__all__ = [
    "probabilistic_sum",
    "product",
    "trnn_add",
    "trnn_mul",
    "trnn_scale",
    "trnn_pow",
    "ivtrnn_add",
    "ivtrnn_mul",
    "ivtrnn_scale",
    "ivtrnn_pow",
    "ZERO_TRNN",
    "ONE_TRNN",
]
