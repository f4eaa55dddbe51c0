"""Value types for interval-valued trapezoidal neutrosophic numbers.

Trapezoid -> TrNN (truth/indeterminacy/falsity trapezoids plus heights)
-> IVTrNN (a lower and an upper TrNN). All values are frozen dataclasses;
constructors validate and reject, operations return new values.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

from ivtrnn_errors import DegenerateSupport, OutOfOrder, OutOfRange


# Slack for floating noise produced by the operational laws.
TOLERANCE = 1e-12


class Channel(Enum):
    T = "truth"
    I = "indet"
    F = "falsity"


class Level(Enum):
    LOWER = "lower"
    UPPER = "upper"


def _check_unit(value: float, what: str) -> float:
    value = float(value)
    if not (-TOLERANCE <= value <= 1.0 + TOLERANCE):
        raise OutOfRange(f"{what}={value} is outside [0, 1]")
    return min(max(value, 0.0), 1.0)


@dataclass(frozen=True)
class UnitInterval:
    lo: float
    hi: float

    def __post_init__(self):
        object.__setattr__(self, "lo", _check_unit(self.lo, "lo"))
        object.__setattr__(self, "hi", _check_unit(self.hi, "hi"))
        if self.lo > self.hi + TOLERANCE:
            raise OutOfOrder(f"interval [{self.lo}, {self.hi}] has lo > hi")

    def as_tuple(self) -> Tuple[float, float]:
        return (self.lo, self.hi)


@dataclass(frozen=True)
class Trapezoid:
    """Four ordered abscissae in [0, 1]; triangular when b == c."""
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _check_unit(getattr(self, name), name))
        pairs = (("a", "b"), ("b", "c"), ("c", "d"))
        for left, right in pairs:
            if getattr(self, left) > getattr(self, right) + TOLERANCE:
                raise OutOfOrder(
                    f"{left}={getattr(self, left)} > {right}={getattr(self, right)} in {self.as_tuple()}"
                )

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    def __iter__(self):
        return iter(self.as_tuple())

    @property
    def mean(self) -> float:
        return (self.a + self.b + self.c + self.d) / 4

    @property
    def is_triangular(self) -> bool:
        return self.b == self.c


def validate_trapezoid(a: float, b: float, c: float, d: float) -> Trapezoid:
    return Trapezoid(a, b, c, d)


@dataclass(frozen=True)
class TrNN:
    """Trapezoidal neutrosophic number with per-channel heights."""
    truth: Trapezoid
    indet: Trapezoid
    falsity: Trapezoid
    height_t: float = 1.0
    height_i: float = 0.0
    height_f: float = 0.0

    def __post_init__(self):
        for name in ("height_t", "height_i", "height_f"):
            object.__setattr__(self, name, _check_unit(getattr(self, name), name))
        if self.truth.d + self.indet.d + self.falsity.d > 3 + TOLERANCE:
            raise OutOfRange("truth.d + indet.d + falsity.d exceeds 3")
        if self.height_t + self.height_i + self.height_f > 3 + TOLERANCE:
            raise OutOfRange("heights sum exceeds 3")

    @classmethod
    def from_tuples(cls, truth: Sequence[float], indet: Sequence[float], falsity: Sequence[float],
                    heights: Sequence[float] = (1.0, 0.0, 0.0)) -> "TrNN":
        h_t, h_i, h_f = heights
        return cls(Trapezoid(*truth), Trapezoid(*indet), Trapezoid(*falsity), h_t, h_i, h_f)

    def channel(self, channel: Channel) -> Trapezoid:
        return {Channel.T: self.truth, Channel.I: self.indet, Channel.F: self.falsity}[channel]

    def height(self, channel: Channel) -> float:
        return {Channel.T: self.height_t, Channel.I: self.height_i, Channel.F: self.height_f}[channel]

    @property
    def heights(self) -> Tuple[float, float, float]:
        return (self.height_t, self.height_i, self.height_f)

    @property
    def is_triangular(self) -> bool:
        return self.truth.is_triangular and self.indet.is_triangular and self.falsity.is_triangular

    def to_dict(self) -> Dict[str, Any]:
        return {
            "truth": list(self.truth.as_tuple()),
            "indet": list(self.indet.as_tuple()),
            "falsity": list(self.falsity.as_tuple()),
            "heights": list(self.heights),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TrNN":
        return cls.from_tuples(
            data["truth"], data["indet"], data["falsity"], data.get("heights", (1.0, 0.0, 0.0))
        )


@dataclass(frozen=True)
class IVTrNN:
    """Lower and upper TrNN. Lower-within-upper is advisory only."""
    lower: TrNN
    upper: TrNN

    def level(self, level: Level) -> TrNN:
        return self.lower if level is Level.LOWER else self.upper

    def inclusion_violations(self) -> List[str]:
        """Componentwise check of lower within upper: T rises, I and F fall."""
        messages = []
        for channel, lower_must_be in ((Channel.T, "<="), (Channel.I, ">="), (Channel.F, ">=")):
            low = self.lower.channel(channel).as_tuple()
            up = self.upper.channel(channel).as_tuple()
            for idx, (lv, uv) in enumerate(zip(low, up)):
                ok = lv <= uv + TOLERANCE if lower_must_be == "<=" else lv + TOLERANCE >= uv
                if not ok:
                    messages.append(
                        f"{channel.value}[{idx}]: lower {lv} should be {lower_must_be} upper {uv}"
                    )
        return messages

    def to_array(self) -> List[List[List[float]]]:
        """Nested [level][channel][component] lists (lower first, T/I/F order)."""
        return [
            [list(trnn.truth.as_tuple()), list(trnn.indet.as_tuple()), list(trnn.falsity.as_tuple())]
            for trnn in (self.lower, self.upper)
        ]

    @classmethod
    def from_array(cls, values, lower_heights: Sequence[float] = (1.0, 0.0, 0.0),
                   upper_heights: Sequence[float] = (1.0, 0.0, 0.0)) -> "IVTrNN":
        levels = []
        for level_values, heights in zip(values, (lower_heights, upper_heights)):
            truth, indet, falsity = ([float(v) for v in channel] for channel in level_values)
            levels.append(TrNN.from_tuples(truth, indet, falsity, [float(h) for h in heights]))
        return cls(levels[0], levels[1])

    @classmethod
    def degenerate(cls, trnn: TrNN) -> "IVTrNN":
        return cls(trnn, trnn)

    def to_dict(self) -> Dict[str, Any]:
        return {"lower": self.lower.to_dict(), "upper": self.upper.to_dict()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "IVTrNN":
        return cls(TrNN.from_dict(data["lower"]), TrNN.from_dict(data["upper"]))


LARGEST_IVTRNN = IVTrNN.degenerate(TrNN.from_tuples((1, 1, 1, 1), (0, 0, 0, 0), (0, 0, 0, 0)))
SMALLEST_IVTRNN = IVTrNN.degenerate(TrNN.from_tuples((0, 0, 0, 0), (1, 1, 1, 1), (1, 1, 1, 1)))


# --- Membership functions ---

def eval_triangular(x: float, a: float, m: float, c: float) -> float:
    if not (a < m < c):
        raise DegenerateSupport(f"triangular support needs a < m < c, got ({a}, {m}, {c})")
    if x <= a or x >= c:
        return 0.0
    if x == m:
        return 1.0
    if x < m:
        return (x - a) / (m - a)
    return (c - x) / (c - m)


def eval_trapezoid(x: float, a: float, b: float, c: float, d: float) -> float:
    """Plain trapezoidal fuzzy membership with plateau height 1."""
    return _rising_membership(x, Trapezoid(a, b, c, d), 1.0)


def _rising_membership(x: float, trap: Trapezoid, height: float) -> float:
    # Half-open ramps: a zero-width ramp is never entered, so its knot takes the plateau value.
    if trap.b <= x <= trap.c:
        return height
    if trap.a <= x < trap.b:
        return (x - trap.a) / (trap.b - trap.a) * height
    if trap.c < x <= trap.d:
        return (trap.d - x) / (trap.d - trap.c) * height
    return 0.0


def _falling_membership(x: float, trap: Trapezoid, height: float) -> float:
    if trap.b <= x <= trap.c:
        return height
    if trap.a <= x < trap.b:
        return (trap.b - x + height * (x - trap.a)) / (trap.b - trap.a)
    if trap.c < x <= trap.d:
        return (x - trap.c + height * (trap.d - x)) / (trap.d - trap.c)
    return 1.0


def eval_trnn_membership(n: TrNN, x: float, channel: Channel) -> float:
    trap = n.channel(channel)
    if channel is Channel.T:
        return _rising_membership(x, trap, n.height_t)
    return _falling_membership(x, trap, n.height(channel))


def eval_ivtrnn_membership(n: IVTrNN, x: float, channel: Channel) -> Tuple[float, float]:
    """(lower-level value, upper-level value); not reordered, so lo may exceed hi."""
    return tuple(eval_trnn_membership(n.level(level), x, channel) for level in Level)


def is_triangular(n: IVTrNN) -> bool:
    return n.lower.is_triangular and n.upper.is_triangular


__all__ = [
    "TOLERANCE",
    "Channel",
    "Level",
    "UnitInterval",
    "Trapezoid",
    "TrNN",
    "IVTrNN",
    "LARGEST_IVTRNN",
    "SMALLEST_IVTRNN",
    "validate_trapezoid",
    "eval_triangular",
    "eval_trapezoid",
    "eval_trnn_membership",
    "eval_ivtrnn_membership",
    "is_triangular",
]
