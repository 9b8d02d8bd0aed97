import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twocenter.geometry import (
    DEFAULT_TOL,
    InputError,
    Point,
    Tolerance,
    angular_order,
    as_point,
    circle_circle_points,
    circumcircle,
    convex_hull,
    dist,
    in_convex_position,
    smallest_enclosing_disk,
    Disk,
)

coord = st.floats(-100, 100, allow_nan=False, allow_infinity=False)
points = st.lists(st.tuples(coord, coord), min_size=1, max_size=25)


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


# smallest enclosing disk


def test_med_empty_is_degenerate():
    d = smallest_enclosing_disk([])
    assert d.radius == 0 and d.degenerate


def test_med_diametral_pair():
    d = smallest_enclosing_disk([(0, 0), (2, 0)])
    assert d.center == (1, 0) and d.radius == 1


def test_med_pair_covers_third():
    d = smallest_enclosing_disk([(0, 0), (2, 0), (1, 1)])
    assert close(d.center[0], 1) and close(d.center[1], 0) and close(d.radius, 1)


def test_med_rejects_non_finite():
    with pytest.raises(InputError):
        smallest_enclosing_disk([(0, 0), (math.nan, 1)])
    with pytest.raises(InputError):
        smallest_enclosing_disk([(math.inf, 0)])


def test_med_duplicates():
    d = smallest_enclosing_disk([(1, 1)] * 5)
    assert d.radius == 0 and d.center == (1, 1)


def test_med_collinear():
    d = smallest_enclosing_disk([(0, 0), (1, 0), (3, 0), (2, 0)])
    assert close(d.radius, 1.5) and close(d.center[0], 1.5)


@given(points)
def test_med_contains_all_and_has_small_support(pts):
    d = smallest_enclosing_disk(pts)
    tol = Tolerance.for_points(pts)
    assert all(tol.le(dist(d.center, p), d.radius) for p in pts)
    assert 1 <= len(d.support) <= 3
    for s in d.support:
        assert tol.close(dist(d.center, s), d.radius)


@given(points, st.randoms(use_true_random=False))
def test_med_permutation_invariant(pts, rnd):
    a = smallest_enclosing_disk(pts)
    q = list(pts)
    rnd.shuffle(q)
    b = smallest_enclosing_disk(q)
    assert close(a.radius, b.radius, 1e-9)


@given(points, st.tuples(coord, coord))
def test_med_monotone_under_insertion(pts, p):
    assert smallest_enclosing_disk(pts).radius <= smallest_enclosing_disk(pts + [p]).radius * (1 + 1e-12)


def test_med_is_minimal_against_pairs_and_triples():
    # the optimum is a pair or triple disk that covers everything
    rng = random.Random(11)
    for _ in range(100):
        pts = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(rng.randint(2, 9))]
        best = math.inf
        n = len(pts)
        cands = []
        for i in range(n):
            for j in range(i + 1, n):
                c = ((pts[i][0] + pts[j][0]) / 2, (pts[i][1] + pts[j][1]) / 2)
                cands.append((c, dist(pts[i], pts[j]) / 2))
                for k in range(j + 1, n):
                    try:
                        d = circumcircle(pts[i], pts[j], pts[k])
                    except InputError:
                        continue
                    cands.append((d.center, d.radius))
        for c, r in cands:
            if all(dist(c, p) <= r * (1 + 1e-12) for p in pts):
                best = min(best, r)
        assert close(smallest_enclosing_disk(pts).radius, best, 1e-10)


def test_med_not_above_circumradius_on_random_triples():
    rng = random.Random(5)
    for _ in range(1000):
        a, b, c = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        try:
            cc = circumcircle(a, b, c)
        except InputError:
            continue
        assert smallest_enclosing_disk([a, b, c]).radius <= cc.radius * (1 + 1e-12)


# circumcircle


def test_circumcircle_right_triangle():
    d = circumcircle((0, 0), (2, 0), (0, 2))
    assert close(d.center[0], 1) and close(d.center[1], 1) and close(d.radius, math.sqrt(2))


def test_circumcircle_collinear_rejected():
    with pytest.raises(InputError):
        circumcircle((0, 0), (1, 0), (2, 0))


def test_circumcircle_equilateral():
    h = math.sqrt(3) / 2
    d = circumcircle((1, 0), (-0.5, h), (-0.5, -h))
    assert abs(d.center[0]) < 1e-15 and abs(d.center[1]) < 1e-15 and close(d.radius, 1)


@given(st.tuples(coord, coord), st.tuples(coord, coord), st.tuples(coord, coord))
def test_circumcircle_permutation_invariant(a, b, c):
    try:
        d1 = circumcircle(a, b, c)
    except InputError:
        return
    d2 = circumcircle(c, a, b)
    d3 = circumcircle(b, a, c)
    for d in (d2, d3):
        assert close(d.radius, d1.radius, 1e-6)


# circle-circle


def test_circles_tangent():
    pts = circle_circle_points(Disk((0, 0), 1), Disk((2, 0), 1))
    assert len(pts) == 1 and close(pts[0][0], 1) and abs(pts[0][1]) < 1e-12


def test_circles_lens():
    pts = circle_circle_points(Disk((0, 0), 1), Disk((1, 0), 1))
    assert len(pts) == 2
    ys = sorted(p[1] for p in pts)
    assert close(ys[0], -math.sqrt(3) / 2) and close(ys[1], math.sqrt(3) / 2)
    assert all(close(p[0], 0.5) for p in pts)


def test_circles_disjoint_and_nested():
    assert circle_circle_points(Disk((0, 0), 1), Disk((3, 0), 1)) == []
    assert circle_circle_points(Disk((0, 0), 3), Disk((0.5, 0), 1)) == []


def test_circles_reject_zero_radius():
    with pytest.raises(InputError):
        circle_circle_points(Disk((0, 0), 0), Disk((1, 0), 1))


@given(st.floats(0.1, 3), st.floats(0.05, 5.9), st.floats(-math.pi, math.pi))
def test_circle_points_on_both(r2, d, phi):
    c2 = (d * math.cos(phi), d * math.sin(phi))
    for p in circle_circle_points(Disk((0, 0), 3.0), Disk(c2, r2)):
        assert abs(dist(p, (0, 0)) - 3.0) < 1e-6
        assert abs(dist(p, c2) - r2) < 1e-6


# angular order


def test_angular_order_examples():
    o = (0, 0)
    assert angular_order(o, [(1, 0), (0, 1), (-1, 0)]) == [0, 1, 2]
    assert angular_order(o, [(0, 1), (1, 0)]) == [1, 0]
    assert angular_order(o, [(2, 0), (1, 0)]) == [1, 0]


def test_angular_order_rejects_o():
    with pytest.raises(InputError, match="1"):
        angular_order((0, 0), [(1, 1), (0, 0)])


@given(st.lists(st.tuples(coord, coord), min_size=1, max_size=30))
def test_angular_order_sorted_by_angle(pts):
    pts = [p for p in pts if p != (0.0, 0.0)]
    order = angular_order((0, 0), pts)
    assert sorted(order) == list(range(len(pts)))
    ang = [math.atan2(pts[k][1], pts[k][0]) % (2 * math.pi) for k in order]
    for a, b in zip(ang, ang[1:]):
        assert a <= b + 1e-12


# misc


def test_as_point_validation():
    assert as_point([1, 2]) == Point(1.0, 2.0)
    for bad in [(1,), "xy", (math.nan, 0), None]:
        with pytest.raises(InputError):
            as_point(bad)


def test_tolerance_for_points_scales_absolute_slack():
    t = Tolerance.for_points([(0, 0), (3, 4)])
    assert t.eps_abs == pytest.approx(5e-12) and t.eps_rel == DEFAULT_TOL.eps_rel
    assert t.le(1.0, 1.0 + 1e-10) and not t.lt(1.0, 1.0 + 1e-10)


def test_convex_position():
    sq = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert in_convex_position(sq)
    assert not in_convex_position(sq + [(0.5, 0.5)])
    assert len(convex_hull(sq + [(0.5, 0.5)])) == 4
