import math
import random

import pytest

from twocenter.geometry import InputError, smallest_enclosing_disk
from twocenter.oracle import brute_contiguous, brute_emptiness, brute_restricted, brute_two_center

from conftest import random_cloud

CORNERS = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
HEXAGON = [(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)) for k in range(6)]


def test_two_center_examples():
    assert brute_two_center([(3, 4)]).radius == 0.0
    assert brute_two_center(CORNERS).radius == pytest.approx(1.0, rel=1e-12)
    assert brute_two_center(HEXAGON).radius == pytest.approx(math.sqrt(3) / 2, rel=1e-12)


def test_restricted_examples():
    assert brute_restricted(CORNERS, (0, 0)).radius == pytest.approx(1.0, rel=1e-12)
    # a lone point and o must share a disk
    assert brute_restricted([(3, 4)], (0, 0)).radius == pytest.approx(2.5, rel=1e-12)
    with pytest.raises(InputError):
        brute_restricted([(0, 0)], (0, 0))


def test_contiguous_hexagon():
    assert brute_contiguous(HEXAGON).radius == pytest.approx(math.sqrt(3) / 2, rel=1e-12)


def test_emptiness_examples():
    assert not brute_emptiness([(0, 0)], 0.1)
    assert not brute_emptiness([(0, 0), (2, 0)], 1.0)
    assert brute_emptiness([(0, 0), (2, 0)], 0.99)


def test_permutation_invariance():
    rng = random.Random(3)
    for _ in range(15):
        S = random_cloud(rng, rng.randint(2, 12))
        o = (rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2))
        P = S[:]
        rng.shuffle(P)
        assert brute_restricted(S, o).radius == brute_restricted(P, o).radius
        assert brute_two_center(S).radius == pytest.approx(brute_two_center(P).radius, rel=1e-12)


def test_restricted_between_two_center_and_med():
    rng = random.Random(4)
    for _ in range(30):
        S = random_cloud(rng, rng.randint(1, 12))
        o = (rng.uniform(-1, 1), rng.uniform(-1, 1))
        tc = brute_two_center(S).radius
        assert tc <= smallest_enclosing_disk(S).radius * (1 + 1e-12)
        assert brute_restricted(S, o).radius >= tc * (1 - 1e-12)


def test_partition_achieves_radius():
    rng = random.Random(5)
    for _ in range(20):
        S = random_cloud(rng, rng.randint(2, 10))
        res = brute_two_center(S)
        sides = [[p for p, l in zip(S, res.partition) if l == k] for k in (0, 1)]
        assert max(smallest_enclosing_disk(s).radius for s in sides) == pytest.approx(res.radius, rel=1e-12)
        assert res.enumeration_count >= 1
