import math
import random

import pytest

from twocenter.decision import (
    Decider,
    build_global_trees,
    build_group_table,
    decide,
    decide_restricted,
    emptiness_query,
    group_context,
    group_preprocess,
    mirror,
    r_ij,
    radius_A,
    radius_B,
    split_instance,
)
from twocenter.geometry import ContractError, InputError, smallest_enclosing_disk
from twocenter.hulls import PLANE, REGION, separated_intersect
from twocenter.oracle import min_rij

CORNERS = [(1, 1), (-1, 1), (-1, -1), (1, -1)]


def random_instance(rng, n, axis="x"):
    S = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
    o = (rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2))
    return split_instance(S, o, axis)


def A_direct(inst, i, j):
    return smallest_enclosing_disk(list(inst.splus[i:]) + list(inst.sminus[:j])).radius


# split instances


def test_split_sides_and_order():
    inst = split_instance(CORNERS, (0, 0), "x")
    assert inst.n_plus == 2 and inst.n_minus == 2
    assert inst.splus == ((1, 1), (-1, 1)) and inst.sminus == ((-1, -1), (1, -1))


def test_split_rejects_point_on_o():
    with pytest.raises(InputError):
        split_instance([(0, 0), (1, 1)], (0, 0))


def test_mirror_maps_B_to_A():
    inst = random_instance(random.Random(2), 15)
    mir = mirror(inst)
    for i in range(inst.n_plus + 1):
        for j in range(inst.n_minus + 1):
            assert radius_B(inst, i, j) == pytest.approx(radius_A(mir, inst.n_plus - i, inst.n_minus - j), rel=1e-12)


# radius matrices


def test_radius_A_examples():
    rng = random.Random(20)
    inst = random_instance(rng, 20)
    assert radius_A(inst, inst.n_plus, 0) == 0.0
    all_pts = list(inst.splus) + list(inst.sminus)
    assert radius_A(inst, 0, inst.n_minus) == pytest.approx(smallest_enclosing_disk(all_pts).radius, rel=1e-12)
    for _ in range(20):
        i, j = rng.randint(0, inst.n_plus), rng.randint(0, inst.n_minus)
        assert radius_A(inst, i, j) == A_direct(inst, i, j)


def test_radius_B_examples():
    rng = random.Random(21)
    inst = random_instance(rng, 20)
    assert radius_B(inst, 0, inst.n_minus) == 0.0
    all_pts = list(inst.splus) + list(inst.sminus)
    assert radius_B(inst, inst.n_plus, 0) == pytest.approx(smallest_enclosing_disk(all_pts).radius, rel=1e-12)


def test_A_predicate_is_prefix_in_j():
    rng = random.Random(22)
    for _ in range(30):
        inst = random_instance(rng, rng.randint(3, 30))
        r = min_rij(inst) * rng.uniform(0.8, 1.3)
        for i in range(inst.n_plus + 1):
            row = [radius_A(inst, i, j) <= r for j in range(inst.n_minus + 1)]
            assert row == sorted(row, reverse=True)


def argmin_interval(inst, i, rel=1e-12):
    row = [r_ij(inst, i, j) for j in range(inst.n_minus + 1)]
    best = min(row)
    js = [j for j, v in enumerate(row) if v <= best * (1 + rel)]
    return js[0], js[-1], js


def test_argmin_column_nondecreasing_in_i():
    # rows often have a flat minimum, so the claim is that a nondecreasing
    # choice of minimizers exists, and that the A/B crossover is monotone
    rng = random.Random(23)
    for _ in range(100):
        inst = random_instance(rng, rng.randint(3, 20))
        cur, prev_cross = 0, -1
        for i in range(inst.n_plus + 1):
            lo, hi, js = argmin_interval(inst, i)
            assert js == list(range(lo, hi + 1))
            cur = max(cur, lo)
            assert cur <= hi
            cross = max(j for j in range(-1, inst.n_minus + 1) if j < 0 or radius_A(inst, i, j) <= radius_B(inst, i, j))
            assert cross >= prev_cross
            prev_cross = cross


# group table


def linear_i_breaks(inst, table):
    out = []
    for jt in table.j_breaks[1:-1]:
        ok = [i for i in range(inst.n_plus + 1) if radius_A(inst, i, jt) >= radius_B(inst, i, jt)]
        out.append(max(ok) if ok else -1)
    return out


def test_group_table_small():
    inst = split_instance([(math.cos(a), math.sin(a)) for a in [0.3, 1.1, 2.0, 2.9, 3.5, 4.1, 5.0, 5.9]], (0.0, 0.0))
    t = build_group_table(inst, 8)
    assert t.m == 1 and len(t.groups) <= 2
    with pytest.raises(InputError):
        build_group_table(inst, 0)


def test_group_table_64_points():
    rng = random.Random(64)
    S = [(rng.uniform(-1, 1), rng.uniform(0.01, 1)) for _ in range(64)]
    S += [(x, -y) for x, y in S]
    inst = split_instance(S, (0.0, 0.0))
    t = build_group_table(inst, 8)
    assert len(t.j_breaks) == 9
    assert list(t.i_breaks) == sorted(t.i_breaks)
    assert list(t.i_breaks) == linear_i_breaks(inst, t)


@pytest.mark.parametrize("g", [1, 2, 3, 5])
def test_group_table_matches_linear_scan(g):
    rng = random.Random(100 + g)
    for _ in range(25):
        inst = random_instance(rng, rng.randint(3, 40))
        t = build_group_table(inst, g)
        assert list(t.i_breaks) == linear_i_breaks(inst, t)
        rows = sorted(i for gr in t.groups for i in range(gr.a, gr.b + 1))
        assert rows == list(range(inst.n_plus + 1))
        assert all(gr.b - gr.a + 1 <= g for gr in t.groups)
        assert len(t.groups) <= 2 * t.m + (inst.n_plus + 1) // g + 1


# contexts and emptiness


def test_context_conventions():
    rng = random.Random(30)
    inst = random_instance(rng, 24)
    r = min_rij(inst)
    trees = build_global_trees(inst, r)
    last = group_context(inst, trees, inst.n_plus, inst.n_plus, 0, 2, r)
    assert last.I2.kind == PLANE and last.I3.kind == PLANE
    ctx = group_context(inst, trees, inst.n_plus - 1, inst.n_plus - 1, 0, 2, r)
    assert ctx.I2.kind == REGION and len(ctx.I2.centers) == 1


def test_emptiness_against_med():
    rng = random.Random(31)
    checked = 0
    for _ in range(60):
        inst = random_instance(rng, rng.randint(3, 24))
        r = min_rij(inst) * rng.uniform(0.7, 1.5)
        g = rng.choice([1, 2, 4, 16])
        table = build_group_table(inst, g)
        for gr, ctx in zip(table.groups, group_preprocess(inst, table, r)):
            for q in range(gr.a + 1, gr.b + 2):
                for j in range(gr.jlo, gr.jhi + 1):
                    a = A_direct(inst, q - 1, j)
                    if abs(a - r) <= 1e-7 * r:
                        continue
                    assert emptiness_query(ctx, q, j) == (a > r)
                    checked += 1
    assert checked > 500


def test_emptiness_trivial_radii():
    rng = random.Random(32)
    inst = random_instance(rng, 16)
    table = build_group_table(inst, 4)
    big = group_preprocess(inst, table, 20.0)
    for gr, ctx in zip(table.groups, big):
        assert not emptiness_query(ctx, gr.a + 1, gr.jhi)
    tiny = 1e-3
    for gr, ctx in zip(table.groups, group_preprocess(inst, table, tiny)):
        if inst.n_plus - gr.a + gr.jhi >= 2:
            assert emptiness_query(ctx, gr.a + 1, gr.jhi)


def test_emptiness_outside_group_raises():
    inst = random_instance(random.Random(33), 16)
    table = build_group_table(inst, 4)
    gr = table.groups[0]
    ctx = group_preprocess(inst, table, 1.0)[0]
    with pytest.raises(ContractError):
        emptiness_query(ctx, gr.b + 3, gr.jlo)


def test_d_structures_per_node():
    rng = random.Random(40)
    inst = random_instance(rng, 40)
    r = min_rij(inst) * 1.1
    trees = build_global_trees(inst, r)
    table = build_group_table(inst, 4)
    for gr in table.groups:
        ctx = group_context(inst, trees, gr.a + 1, gr.b + 1, gr.jlo, gr.jhi, r, lazy=False)
        for d, other in ((ctx.d_plus_2, ctx.I2), (ctx.d_plus_3, ctx.I3), (ctx.d_minus_2, ctx.I2), (ctx.d_minus_3, ctx.I3)):
            for nd in d.base.nodes:
                got = d.part(nd.id)
                ref = separated_intersect(nd.chain, other)
                assert got.relation == ref.relation and got.s == ref.s and got.e == ref.e


# decisions


def test_corners():
    assert decide_restricted(CORNERS, (0, 0), 1.0)
    assert not decide_restricted(CORNERS, (0, 0), 0.9)


def test_single_point_always_yes():
    inst = split_instance([(0.3, 0.4)], (0, 0))
    for r in (1e-6, 1.0, 100.0):
        assert decide(inst, r)


def test_radius_must_be_positive():
    with pytest.raises(InputError):
        decide(split_instance(CORNERS, (0, 0)), 0.0)


def test_witness_is_feasible():
    rng = random.Random(50)
    for _ in range(40):
        inst = random_instance(rng, rng.randint(3, 25))
        r = min_rij(inst) * 1.05
        d = decide(inst, r, g=rng.choice([1, 3, 16]))
        assert d and r_ij(inst, d.i, d.j) <= r * (1 + 1e-12)


@pytest.mark.parametrize("g", [1, 2, 5, 16, 64])
def test_decide_agrees_with_oracle(decision_cases, g):
    rng = random.Random(g)
    for case in decision_cases[:40]:
        for ax in ("x", "y"):
            inst = split_instance(case["points"], case["o"], ax)
            rs = min_rij(inst)
            D = Decider(inst, g)
            grid = sorted(rs * rng.uniform(0.5, 1.5) for _ in range(8))
            ans = []
            for r in grid:
                if abs(r - rs) <= 1e-7 * rs:
                    continue
                a = bool(D(r))
                assert a == (r >= rs)
                ans.append(a)
            assert ans == sorted(ans)
