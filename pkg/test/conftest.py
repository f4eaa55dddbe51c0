import json

import numpy as np
import pytest

from ivtrnn_config import PROBLEM_SPEC_DIR
from ivtrnn_numbers import IVTrNN, TrNN
import reference_data


def term(name: str) -> TrNN:
    return TrNN.from_tuples(*reference_data.SCALE_TERMS[name])


def pair(lower: str, upper: str) -> IVTrNN:
    return IVTrNN(term(lower), term(upper))


def random_trnn(rng: np.random.Generator, triangular: bool = False) -> TrNN:
    channels = []
    for _ in range(3):
        # below 0.95: as u nears 1, (1 - u) ** lam loses the absolute precision the 1e-12 checks need
        a, b, c, d = np.sort(rng.uniform(0.0, 0.95, 4))
        if triangular:
            c = b
        channels.append((a, b, c, d))
    return TrNN.from_tuples(*channels)


def random_ivtrnn(rng: np.random.Generator, triangular: bool = False) -> IVTrNN:
    return IVTrNN(random_trnn(rng, triangular), random_trnn(rng, triangular))


def random_strict_weights(rng: np.random.Generator, n: int):
    raw = rng.uniform(0.05, 1.0, n)
    weights = raw / raw.sum()
    # absorb the rounding residue in the last weight so the sum is 1 within 1e-9
    weights[-1] = 1.0 - weights[:-1].sum()
    return tuple(float(w) for w in weights)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def low():
    return term(reference_data.LOW)


@pytest.fixture
def high():
    return term(reference_data.HIGH)


@pytest.fixture
def very_low():
    return term(reference_data.VERY_LOW)


@pytest.fixture
def very_high():
    return term(reference_data.VERY_HIGH)


@pytest.fixture
def nfr_problem_path():
    return PROBLEM_SPEC_DIR / "nfr_authentication.json"


@pytest.fixture
def nfr_uniform_problem_path():
    return PROBLEM_SPEC_DIR / "nfr_authentication_uniform.json"


@pytest.fixture
def write_json(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return path
    return _write


@pytest.fixture
def nfr_problem_dict(nfr_problem_path):
    return json.loads(nfr_problem_path.read_text())


@pytest.fixture
def interval():
    """interval("Low", "High") -> IVTrNN with those scale terms as lower and upper level."""
    return pair


@pytest.fixture
def random_number(rng):
    return lambda triangular=False: random_ivtrnn(rng, triangular)


@pytest.fixture
def strict_weights(rng):
    return lambda n: random_strict_weights(rng, n)
