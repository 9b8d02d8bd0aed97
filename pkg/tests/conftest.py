import json
import os
import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from twocenter.geometry import angular_order

# derandomized so two runs of the suite see identical examples
settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repro"))

DATA = Path(__file__).parent / "data"


def load_cases(name):
    return json.loads((DATA / name).read_text())


@pytest.fixture(scope="session")
def restricted_cases():
    return load_cases("restricted_cases.json")


@pytest.fixture(scope="session")
def decision_cases():
    return load_cases("decision_cases.json")


@pytest.fixture(scope="session")
def convex_cases():
    return load_cases("convex_cases.json")


def random_cloud(rng: random.Random, n: int, lo=-1.0, hi=1.0):
    return [(rng.uniform(lo, hi), rng.uniform(lo, hi)) for _ in range(n)]


def upper_sorted(rng: random.Random, n: int):
    """``n`` points above the x-axis, counterclockwise about the origin."""
    pts = [(rng.uniform(-1, 1), rng.uniform(0.01, 1)) for _ in range(n)]
    return [pts[k] for k in angular_order((0.0, 0.0), pts)]
