"""Discrete single-valued and interval-valued neutrosophic sets.

A set is an ordered universe of element names with one (T, I, F) value per
name. SVNS values are scalars; IVNS values are unit intervals and every law is
applied endpoint by endpoint.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Sequence, Tuple, Union

from ivtrnn_arithmetic import probabilistic_sum, product
from ivtrnn_errors import OutOfRange, UniverseMismatch
from ivtrnn_numbers import UnitInterval
import reference_data


ScalarLaw = Callable[[float, float], float]


@dataclass(frozen=True)
class SvnsElement:
    t: float
    i: float
    f: float

    def __post_init__(self):
        for name in ("t", "i", "f"):
            value = float(getattr(self, name))
            if not 0.0 <= value <= 1.0:
                raise OutOfRange(f"SVNS {name}={value} is outside [0, 1]")
            object.__setattr__(self, name, value)

    def combine(self, other: "SvnsElement", t_law: ScalarLaw, i_law: ScalarLaw, f_law: ScalarLaw) -> "SvnsElement":
        return SvnsElement(t_law(self.t, other.t), i_law(self.i, other.i), f_law(self.f, other.f))

    def complement(self) -> "SvnsElement":
        return SvnsElement(self.f, 1 - self.i, self.t)

    def included_in(self, other: "SvnsElement") -> bool:
        return self.t <= other.t and self.i >= other.i and self.f >= other.f

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.t, self.i, self.f)


@dataclass(frozen=True)
class IvnsElement:
    t: UnitInterval
    i: UnitInterval
    f: UnitInterval

    @classmethod
    def from_pairs(cls, t: Sequence[float], i: Sequence[float], f: Sequence[float]) -> "IvnsElement":
        return cls(UnitInterval(*t), UnitInterval(*i), UnitInterval(*f))

    @staticmethod
    def _endpointwise(x: UnitInterval, y: UnitInterval, law: ScalarLaw) -> UnitInterval:
        return UnitInterval(law(x.lo, y.lo), law(x.hi, y.hi))

    def combine(self, other: "IvnsElement", t_law: ScalarLaw, i_law: ScalarLaw, f_law: ScalarLaw) -> "IvnsElement":
        return IvnsElement(
            self._endpointwise(self.t, other.t, t_law),
            self._endpointwise(self.i, other.i, i_law),
            self._endpointwise(self.f, other.f, f_law),
        )

    def complement(self) -> "IvnsElement":
        # 1 - [lo, hi] = [1 - hi, 1 - lo]
        return IvnsElement(self.f, UnitInterval(1 - self.i.hi, 1 - self.i.lo), self.t)

    def included_in(self, other: "IvnsElement") -> bool:
        return (
            self.t.lo <= other.t.lo and self.t.hi <= other.t.hi
            and self.i.lo >= other.i.lo and self.i.hi >= other.i.hi
            and self.f.lo >= other.f.lo and self.f.hi >= other.f.hi
        )

    def as_tuple(self):
        return (self.t.as_tuple(), self.i.as_tuple(), self.f.as_tuple())


Element = Union[SvnsElement, IvnsElement]


@dataclass(frozen=True)
class DiscreteNeutroSet:
    universe: Tuple[str, ...]
    values: Mapping[str, Element] = field(default_factory=dict)

    def __post_init__(self):
        universe = tuple(self.universe)
        if len(set(universe)) != len(universe):
            raise UniverseMismatch(f"duplicate names in universe {universe}")
        missing = [name for name in universe if name not in self.values]
        extra = [name for name in self.values if name not in universe]
        if missing or extra:
            raise UniverseMismatch(f"values do not cover the universe (missing={missing}, extra={extra})")
        kinds = {type(v) for v in self.values.values()}
        if len(kinds) > 1:
            raise UniverseMismatch("a set cannot mix SVNS and IVNS values")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "values", {name: self.values[name] for name in universe})

    def __getitem__(self, name: str) -> Element:
        return self.values[name]

    @classmethod
    def from_svns(cls, data: Mapping[str, Sequence[float]]) -> "DiscreteNeutroSet":
        return cls(tuple(data), {name: SvnsElement(*tif) for name, tif in data.items()})

    @classmethod
    def from_ivns(cls, data: Mapping[str, Sequence[Sequence[float]]]) -> "DiscreteNeutroSet":
        return cls(tuple(data), {name: IvnsElement.from_pairs(*tif) for name, tif in data.items()})

    def map(self, fn: Callable[[Element], Element]) -> "DiscreteNeutroSet":
        return DiscreteNeutroSet(self.universe, {name: fn(v) for name, v in self.values.items()})


def _check_universes(a: DiscreteNeutroSet, b: DiscreteNeutroSet) -> None:
    if a.universe != b.universe:
        raise UniverseMismatch(f"universes differ: {a.universe} vs {b.universe}")
    if a.universe and type(a[a.universe[0]]) is not type(b[b.universe[0]]):
        raise UniverseMismatch("cannot combine an SVNS with an IVNS")


def _pointwise(a: DiscreteNeutroSet, b: DiscreteNeutroSet, t_law: ScalarLaw, i_law: ScalarLaw,
               f_law: ScalarLaw) -> DiscreteNeutroSet:
    _check_universes(a, b)
    return DiscreteNeutroSet(
        a.universe, {name: a[name].combine(b[name], t_law, i_law, f_law) for name in a.universe}
    )


def svns_add(a: DiscreteNeutroSet, b: DiscreteNeutroSet) -> DiscreteNeutroSet:
    return _pointwise(a, b, probabilistic_sum, product, product)


def svns_mul(a: DiscreteNeutroSet, b: DiscreteNeutroSet) -> DiscreteNeutroSet:
    return _pointwise(a, b, product, probabilistic_sum, probabilistic_sum)


def svns_union(a: DiscreteNeutroSet, b: DiscreteNeutroSet) -> DiscreteNeutroSet:
    return _pointwise(a, b, max, min, min)


def svns_intersection(a: DiscreteNeutroSet, b: DiscreteNeutroSet) -> DiscreteNeutroSet:
    return _pointwise(a, b, min, max, max)


def svns_complement(a: DiscreteNeutroSet) -> DiscreteNeutroSet:
    return a.map(lambda v: v.complement())


def svns_includes(a: DiscreteNeutroSet, b: DiscreteNeutroSet) -> bool:
    """True iff a is contained in b."""
    _check_universes(a, b)
    return all(a[name].included_in(b[name]) for name in a.universe)


def svns_equals(a: DiscreteNeutroSet, b: DiscreteNeutroSet) -> bool:
    return svns_includes(a, b) and svns_includes(b, a)


def build_reference_sets() -> Dict[str, DiscreteNeutroSet]:
    """The requirement-engineering example sets, keyed by a descriptive name."""
    return {
        "reliability_svns": DiscreteNeutroSet.from_svns(reference_data.RELIABILITY_SVNS),
        "recoverability_svns": DiscreteNeutroSet.from_svns(reference_data.RECOVERABILITY_SVNS),
        "reliability_ivns": DiscreteNeutroSet.from_ivns(reference_data.RELIABILITY_IVNS),
        "recoverability_ivns": DiscreteNeutroSet.from_ivns(reference_data.RECOVERABILITY_IVNS),
    }


__all__ = [
    "SvnsElement",
    "IvnsElement",
    "DiscreteNeutroSet",
    "svns_add",
    "svns_mul",
    "svns_union",
    "svns_intersection",
    "svns_complement",
    "svns_includes",
    "svns_equals",
    "build_reference_sets",
]
