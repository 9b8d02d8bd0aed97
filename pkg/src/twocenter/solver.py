"""Optimizers built on the decision procedure.

The optimum of a split objective is the enclosing radius of some side, hence
a half pairwise distance or a triangle circumradius.  The optimizers sort
those candidates and binary-search them with the decision procedure.  Each
probe sits halfway between two consecutive candidates, so the decision is
never asked about a radius at which some hull is exactly tangent.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple, Sequence

import numpy as np

from .decision import Decider, Decision, side_sets, split_instance
from .geometry import (
    Disk,
    InputError,
    Point,
    Tolerance,
    as_point,
    as_points,
    dist,
    in_convex_position,
    smallest_enclosing_disk,
)


class TwoCenterSolution(NamedTuple):
    radius: float
    d1: Disk
    d2: Disk
    partition: tuple  # 0 -> d1, 1 -> d2, per input point
    meta: dict


def critical_radii(S: Sequence, eps_rel: float = 1e-9) -> np.ndarray:
    """Sorted half pairwise distances and circumradii of non-collinear triples,
    with values closer than ``eps_rel`` (relative) merged."""
    P = np.asarray([(p[0], p[1]) for p in S], dtype=float).reshape(-1, 2)
    n = len(P)
    vals = [np.zeros(0)]
    if n >= 2:
        a, b = np.triu_indices(n, 1)
        vals.append(np.hypot(*(P[a] - P[b]).T) / 2.0)
    for a in range(n - 2):
        # triples (a, b, c) with a < b < c, one first index at a time
        b, c = np.triu_indices(n - a - 1, 1)
        A, B, C = P[a], P[a + 1 + b], P[a + 1 + c]
        ab = np.hypot(*(B - A).T)
        bc = np.hypot(*(C - B).T)
        ca = np.hypot(*(A - C).T)
        cr = (B[:, 0] - A[0]) * (C[:, 1] - A[1]) - (B[:, 1] - A[1]) * (C[:, 0] - A[0])
        scale = np.maximum(np.maximum(ab, bc), ca) ** 2
        ok = np.abs(cr) > 1e-14 * scale
        vals.append(ab[ok] * bc[ok] * ca[ok] / (2.0 * np.abs(cr[ok])))
    v = np.sort(np.concatenate(vals))
    v = v[v > 0]
    if len(v) == 0:
        return v
    keep = [v[0]]
    for x in v[1:]:
        if x > keep[-1] * (1.0 + eps_rel):
            keep.append(x)
    return np.asarray(keep)


class SplitOptimum(NamedTuple):
    radius: float
    decision: Decision
    inst: object
    probes: int


def _distinct(S) -> int:
    return len(set((p[0], p[1]) for p in S))


def optimize_splits(
    deciders: Sequence[Decider], S: Sequence, bisect: bool = False, rel: float = 1e-12, threads: int = 1
) -> SplitOptimum:
    """Smallest radius accepted by any of ``deciders``.

    Returns the radius together with an accepting decision (its witness) and
    the instance it refers to.  With ``threads > 1`` the deciders of one probe
    run concurrently; the first accepting one in list order still wins, so
    results do not depend on ``threads``.
    """
    probes = 0
    pool = ThreadPoolExecutor(threads) if threads > 1 and len(deciders) > 1 else None

    def accept(r):
        nonlocal probes
        if pool is not None:
            outs = list(pool.map(lambda D: D(r), deciders))
        for k, D in enumerate(deciders):
            probes += 1
            d = outs[k] if pool is not None else D(r)
            if d:
                return d, D.inst
        return None

    try:
        return _search(accept, S, bisect, rel, lambda: probes)
    finally:
        if pool is not None:
            pool.shutdown()


CANDIDATE_LIMIT = 400


def _search(accept, S, bisect, rel, probes) -> SplitOptimum:
    # the candidate list has ~n^3/6 entries; past the limit bisect instead
    bisect = bisect or len(S) > CANDIDATE_LIMIT

    top = smallest_enclosing_disk(S).radius
    if top == 0.0:
        res = accept(1.0)
        return SplitOptimum(0.0, res[0], res[1], probes())
    if bisect:
        lo, hi = 0.0, top
        best = accept(hi * (1 + 1e-9))
        while hi - lo > rel * hi:
            mid = (lo + hi) / 2.0
            got = accept(mid)
            if got:
                hi, best = mid, got
            else:
                lo = mid
        return SplitOptimum(hi, best[0], best[1], probes())
    # 0 first: sides made of single locations need no radius at all
    cand = np.concatenate(([0.0], critical_radii(S)))
    cand = cand[cand <= top * (1 + 1e-9)]
    K = len(cand)
    lo, hi = 0, K - 1  # answer index in [lo, hi]; cand[K-1] always feasible
    best = None
    while lo < hi:
        k = (lo + hi) // 2
        got = accept((cand[k] + cand[k + 1]) / 2.0)
        if got:
            hi, best = k, got
        else:
            lo = k + 1
    if best is None or hi == K - 1:
        best = accept(cand[K - 1] * 2.0 if K else 1.0)
    return SplitOptimum(float(cand[hi]), best[0], best[1], probes())


def _reconstruct(S, inst, d: Decision, radius: float, o=None, tol: Tolerance | None = None):
    """Disks and partition from an accepting decision's witness split."""
    tol = tol or Tolerance.for_points(S)
    side_a, side_b = side_sets(inst, d.i, d.j)
    pa = [S[k] for k in side_a]
    pb = [S[k] for k in side_b]
    da, db = smallest_enclosing_disk(pa), smallest_enclosing_disk(pb)
    R = max(da.radius, db.radius, radius)
    flag = False
    disks = []
    for side, dk in ((pa, da), (pb, db)):
        center = dk.center if side else (Point(*o) if o is not None else dk.center)
        if o is not None and not tol.le(dist(center, o), R):
            dd = smallest_enclosing_disk(side + [o])
            if tol.le(dd.radius, R):
                center = dd.center
            else:
                flag = True
                center = dd.center
                R = max(R, dd.radius)
        disks.append(center)
    part = [0] * len(S)
    for k in side_b:
        part[k] = 1
    return Disk(disks[0], R), Disk(disks[1], R), tuple(part), flag


def solve_restricted(
    S: Sequence, o, g: int = 16, bisect: bool = False, tol: Tolerance | None = None, threads: int = 1
) -> TwoCenterSolution:
    """Two congruent disks covering ``S``, both meant to contain ``o``.

    Minimizes over splits by two rays from ``o`` (either coordinate axis
    through ``o`` separates the rays).  When the premise that ``o`` lies in
    the optimal overlap fails, a disk is moved or enlarged to contain ``o``
    and ``meta["o_enlarged"]`` is set.
    """
    S = as_points(S)
    o = as_point(o)
    for k, p in enumerate(S):
        if p == o:
            raise InputError(f"point {k} coincides with o")
    if not S:
        z = Disk(o, 0.0, (), True)
        return TwoCenterSolution(0.0, z, z, (), {"axis": "", "i": -1, "j": -1, "o_enlarged": False, "probes": 0})
    tol = tol or Tolerance.for_points(list(S) + [o])
    deciders = [Decider(split_instance(S, o, ax), g, tol) for ax in ("x", "y")]
    opt = optimize_splits(deciders, S, bisect, threads=threads)
    d1, d2, part, flag = _reconstruct(S, opt.inst, opt.decision, opt.radius, o, tol)
    meta = {
        "axis": opt.inst.axis,
        "i": opt.decision.i,
        "j": opt.decision.j,
        "radius_star": opt.radius,
        "o_enlarged": flag,
        "probes": opt.probes,
    }
    return TwoCenterSolution(d1.radius, d1, d2, part, meta)


def _hull_order(S: Sequence) -> list[int]:
    cx = sum(p[0] for p in S) / len(S)
    cy = sum(p[1] for p in S) / len(S)
    return sorted(range(len(S)), key=lambda k: (math.atan2(S[k][1] - cy, S[k][0] - cx), k))


def _fixed_cut(P: Sequence, c: int) -> tuple[float, int, int]:
    """Best contiguous split with one cut fixed before ``P[c]``.

    The run starting at ``P[c]`` grows with ``L`` while its complement
    shrinks, so the crossover is found by binary search.
    """
    n = len(P)

    def radii(L):
        a = [P[(c + t) % n] for t in range(L)]
        b = [P[(c + L + t) % n] for t in range(n - L)]
        return smallest_enclosing_disk(a).radius, smallest_enclosing_disk(b).radius

    lo, hi, Ls = 1, n - 1, 1
    while lo <= hi:
        mid = (lo + hi) // 2
        ra, rb = radii(mid)
        if ra <= rb:
            Ls, lo = mid, mid + 1
        else:
            hi = mid - 1
    best = (math.inf, c, 1)
    for L in (Ls, Ls + 1):
        if 1 <= L <= n - 1:
            best = min(best, (max(radii(L)), c, L))
    return best


def solve_convex(S: Sequence, g: int = 16, bisect: bool = False, tol: Tolerance | None = None) -> TwoCenterSolution:
    """Two-center of points in convex position.

    Fix ``p1``; binary-search ``p*``, the end of the best run starting at
    ``p1``.  Cuts next to ``p1``, ``p*`` or a neighbor of ``p*`` are solved
    by one-dimensional crossover searches.  Otherwise the line through
    ``p1`` and ``p*`` separates the two cuts and the split optimizer runs on
    that line with ``o`` at the midpoint.  The minimum over the cases wins.
    """
    S = as_points(S)
    n = len(S)
    if n < 2 or _distinct(S) <= 2:
        c1 = S[0] if S else Point(0.0, 0.0)
        c2 = next((p for p in S if p != c1), c1)
        part = tuple(0 if p == c1 else 1 for p in S)
        return TwoCenterSolution(
            0.0, Disk(c1, 0.0, (), True), Disk(c2, 0.0, (), True), part, {"case": "trivial", "probes": 0}
        )
    if not in_convex_position(S, tol):
        raise InputError("points are not in convex position")
    order = _hull_order(S)
    P = [S[k] for k in order]
    tol = tol or Tolerance.for_points(S)

    # p*: last index of the best run starting at p1
    def r1(k):
        return smallest_enclosing_disk(P[: k + 1]).radius

    def r2(k):
        return smallest_enclosing_disk(P[k + 1 :]).radius

    lo, hi, ps = 0, n - 2, 0
    while lo <= hi:
        mid = (lo + hi) // 2
        if r1(mid) <= r2(mid):
            ps, lo = mid, mid + 1
        else:
            hi = mid - 1
    cuts = set()
    for k in (0, ps - 1, ps, ps + 1):
        cuts.add(k % n)
        cuts.add((k + 1) % n)
    best = min(_fixed_cut(P, c) for c in sorted(cuts))
    radius, c, L = best
    side_a = {order[(c + t) % n] for t in range(L)}
    case = "fixed-cut"
    probes = 0
    q1, q2 = P[0], P[ps]
    if ps > 0 and q1 != q2:
        o = Point((q1[0] + q2[0]) / 2.0, (q1[1] + q2[1]) / 2.0)
        if o not in S:
            direction = (q2[0] - q1[0], q2[1] - q1[1])
            dec = Decider(split_instance(S, o, direction), g, tol)
            opt = optimize_splits([dec], S, bisect)
            probes = opt.probes
            if opt.radius < radius:
                a, _ = side_sets(opt.inst, opt.decision.i, opt.decision.j)
                radius, side_a, case = opt.radius, set(a), "separated"
    pa = [S[k] for k in range(n) if k in side_a]
    pb = [S[k] for k in range(n) if k not in side_a]
    da, db = smallest_enclosing_disk(pa), smallest_enclosing_disk(pb)
    R = max(da.radius, db.radius)
    part = tuple(0 if k in side_a else 1 for k in range(n))
    return TwoCenterSolution(R, Disk(da.center, R), Disk(db.center, R), part, {"case": case, "p_star": ps, "probes": probes})
