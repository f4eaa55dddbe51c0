import numpy as np
import pytest

from ivtrnn_errors import DegenerateSupport, OutOfOrder, OutOfRange
from ivtrnn_numbers import (
    LARGEST_IVTRNN,
    Channel,
    IVTrNN,
    Trapezoid,
    TrNN,
    eval_ivtrnn_membership,
    eval_trapezoid,
    eval_triangular,
    eval_trnn_membership,
    is_triangular,
    validate_trapezoid,
)


# --- Trapezoid construction ---
def test_validate_trapezoid_accepts_low_truth():
    t = validate_trapezoid(0.2, 0.3, 0.4, 0.5)
    assert t.as_tuple() == (0.2, 0.3, 0.4, 0.5)
    assert not t.is_triangular


def test_validate_trapezoid_accepts_degenerate_point():
    t = validate_trapezoid(0.1, 0.1, 0.1, 0.1)
    assert t.is_triangular
    assert t.mean == pytest.approx(0.1)


def test_validate_trapezoid_rejects_out_of_order():
    with pytest.raises(OutOfOrder):
        validate_trapezoid(0.5, 0.4, 0.6, 0.7)


@pytest.mark.parametrize("values", [(-0.1, 0.2, 0.3, 0.4), (0.1, 0.2, 0.3, 1.5)])
def test_validate_trapezoid_rejects_out_of_range(values):
    with pytest.raises(OutOfRange):
        validate_trapezoid(*values)


def test_trapezoid_tolerates_float_noise_only():
    t = Trapezoid(0.3, 0.3 - 1e-13, 0.4, 1.0 + 1e-13)
    assert t.d == 1.0
    with pytest.raises(OutOfOrder):
        Trapezoid(0.3, 0.3 - 1e-6, 0.4, 0.5)


def test_trnn_defaults_heights():
    n = TrNN.from_tuples((0.2, 0.3, 0.4, 0.5), (0, 0.1, 0.2, 0.3), (0, 0.1, 0.2, 0.2))
    assert n.heights == (1.0, 0.0, 0.0)


# --- Triangular membership ---
def test_eval_triangular_peak_and_outside():
    assert eval_triangular(0.5, 0.0, 0.5, 1.0) == 1.0
    assert eval_triangular(0.0, 0.0, 0.5, 1.0) == 0.0
    assert eval_triangular(-0.2, 0.0, 0.5, 1.0) == 0.0
    assert eval_triangular(1.0, 0.0, 0.5, 1.0) == 0.0


def test_eval_triangular_interpolates():
    assert eval_triangular(0.25, 0.0, 0.5, 1.0) == pytest.approx(0.5)
    assert eval_triangular(0.75, 0.0, 0.5, 1.0) == pytest.approx(0.5)


@pytest.mark.parametrize("a,m,c", [(0.2, 0.2, 0.5), (0.2, 0.5, 0.5)])
def test_eval_triangular_rejects_degenerate_support(a, m, c):
    with pytest.raises(DegenerateSupport):
        eval_triangular(0.3, a, m, c)


def test_eval_trapezoid_plateau_and_ramps():
    assert eval_trapezoid(0.35, 0.2, 0.3, 0.4, 0.5) == 1.0
    assert eval_trapezoid(0.45, 0.2, 0.3, 0.4, 0.5) == pytest.approx(0.5)
    assert eval_trapezoid(0.6, 0.2, 0.3, 0.4, 0.5) == 0.0


# --- TrNN membership ---
def test_truth_plateau_returns_height(low):
    assert eval_trnn_membership(low, 0.35, Channel.T) == 1.0


def test_indet_outside_support_is_one(low):
    assert eval_trnn_membership(low, 0.9, Channel.I) == 1.0


def test_truth_rising_ramp(low):
    assert eval_trnn_membership(low, 0.25, Channel.T) == pytest.approx(0.5)


def test_truth_ramp_scaled_by_height():
    n = TrNN.from_tuples((0.2, 0.3, 0.4, 0.5), (0, 0.1, 0.2, 0.3), (0, 0.1, 0.2, 0.2), (0.8, 0.0, 0.0))
    assert eval_trnn_membership(n, 0.25, Channel.T) == pytest.approx(0.4)
    assert eval_trnn_membership(n, 0.35, Channel.T) == pytest.approx(0.8)


def test_falsity_ramp_uses_falsity_height():
    n = TrNN.from_tuples((0.2, 0.3, 0.4, 0.5), (0.2, 0.3, 0.4, 0.5), (0.2, 0.3, 0.4, 0.5), (1.0, 0.0, 0.4))
    # halfway down a ramp: midpoint between 1 and the channel height
    assert eval_trnn_membership(n, 0.25, Channel.F) == pytest.approx(0.7)
    assert eval_trnn_membership(n, 0.25, Channel.I) == pytest.approx(0.5)


def test_degenerate_ramp_knot_takes_plateau_value(very_high):
    assert eval_trnn_membership(very_high, 0.7, Channel.T) == 1.0
    assert eval_trnn_membership(very_high, 0.7 + 1e-9, Channel.T) == 0.0
    assert eval_trnn_membership(very_high, 0.1, Channel.F) == 0.0
    assert eval_trnn_membership(very_high, 0.3, Channel.F) == 1.0


def test_truth_plus_indet_is_one_on_ramps():
    trap = (0.1, 0.3, 0.6, 0.9)
    n = TrNN.from_tuples(trap, trap, trap)
    for lo, hi in ((0.1, 0.3), (0.6, 0.9)):
        for x in np.linspace(lo, hi, 12)[1:-1]:
            assert eval_trnn_membership(n, x, Channel.T) + eval_trnn_membership(n, x, Channel.I) == pytest.approx(1.0)


def test_membership_bounds_on_random_numbers(rng):
    for _ in range(200):
        channels = [np.sort(rng.uniform(0, 1, 4)) for _ in range(3)]
        heights = rng.uniform(0, 1, 3)
        n = TrNN.from_tuples(*channels, heights)
        for x in rng.uniform(0, 1, 10):
            t = eval_trnn_membership(n, x, Channel.T)
            assert 0.0 <= t <= n.height_t + 1e-12
            if not n.truth.a <= x <= n.truth.d:
                assert t == 0.0
            for channel in (Channel.I, Channel.F):
                v = eval_trnn_membership(n, x, channel)
                trap = n.channel(channel)
                if trap.a <= x <= trap.d:
                    assert min(n.height(channel), 1.0) - 1e-12 <= v <= 1.0 + 1e-12
                else:
                    assert v == 1.0


# --- IVTrNN membership ---
def test_degenerate_ivtrnn_membership_levels_agree(low):
    n = IVTrNN.degenerate(low)
    for channel in Channel:
        lo, hi = eval_ivtrnn_membership(n, 0.27, channel)
        assert lo == hi == eval_trnn_membership(low, 0.27, channel)


def test_ivtrnn_membership_outside_both_supports(interval):
    assert eval_ivtrnn_membership(interval("Low", "High"), 0.95, Channel.T) == (0.0, 0.0)


def test_ivtrnn_membership_low_high_pair(interval):
    n = interval("Low", "High")
    # Low falls on its right ramp at 0.45; High rises on its left ramp.
    assert eval_ivtrnn_membership(n, 0.45, Channel.T) == pytest.approx((0.5, 0.5))
    # Low is outside its support at 0.55; High is on its plateau.
    assert eval_ivtrnn_membership(n, 0.55, Channel.T) == (0.0, 1.0)


def test_ivtrnn_membership_is_not_reordered(interval):
    lo, hi = eval_ivtrnn_membership(interval("High", "Low"), 0.55, Channel.T)
    assert (lo, hi) == (1.0, 0.0)


# --- Triangularity and advisories ---
def test_is_triangular(interval, very_high, low):
    point_indet = TrNN.from_tuples((0.7,) * 4, (0.1,) * 4, (0.1,) * 4)
    assert is_triangular(IVTrNN.degenerate(point_indet))
    assert is_triangular(LARGEST_IVTRNN)
    # Very High carries indeterminacy (0, 0.1, 0.2, 0.3), so it is not triangular
    assert not is_triangular(interval("Very High", "Very High"))
    assert not is_triangular(interval("Low", "Low"))
    assert not is_triangular(IVTrNN(very_high, low))


def test_inclusion_advisory_flags_low_high_falsity(interval):
    messages = interval("Low", "High").inclusion_violations()
    assert any(m.startswith("falsity[0]") for m in messages)
    assert not any(m.startswith("truth") for m in messages)


def test_inclusion_advisory_clean_for_identical_levels(interval):
    assert interval("High", "High").inclusion_violations() == []


def test_ivtrnn_dict_round_trip(interval):
    n = interval("Very Low", "Very High")
    assert IVTrNN.from_dict(n.to_dict()) == n
    assert IVTrNN.from_array(n.to_array()) == n


def test_largest_ivtrnn_shape():
    assert LARGEST_IVTRNN.lower.truth.as_tuple() == (1.0, 1.0, 1.0, 1.0)
    assert LARGEST_IVTRNN.upper.falsity.as_tuple() == (0.0, 0.0, 0.0, 0.0)
