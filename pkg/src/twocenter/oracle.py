"""Brute-force reference answers.

These deliberately share nothing with the hull machinery beyond the
enclosing-disk primitive and the angular sort.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .geometry import InputError, angular_order, as_points, orient, smallest_enclosing_disk


class OracleResult(NamedTuple):
    radius: float
    partition: tuple  # 0/1 label per input point
    enumeration_count: int


def _split_cost(S, labels) -> float:
    a = [p for p, l in zip(S, labels) if l == 0]
    b = [p for p, l in zip(S, labels) if l == 1]
    return max(smallest_enclosing_disk(a).radius, smallest_enclosing_disk(b).radius)


def brute_two_center(S: Sequence) -> OracleResult:
    """Optimal two-disk cover over every line-separable bipartition.

    Each pair ``p, q`` defines the line through them; points strictly left go
    to one side, strictly right to the other, and ``p``, ``q`` are assigned in
    all four ways.  Together with the trivial split this covers every
    bipartition realizable by a line when no three points are collinear.
    """
    S = as_points(S)
    n = len(S)
    if n == 0:
        return OracleResult(0.0, (), 0)
    best = smallest_enclosing_disk(S).radius
    best_lab = (0,) * n
    count = 1
    seen = {best_lab}
    for a in range(n):
        for b in range(a + 1, n):
            p, q = S[a], S[b]
            base = []
            for k, s in enumerate(S):
                o = orient(p, q, s)
                base.append(0 if o > 0 else 1)
            for la in (0, 1):
                for lb in (0, 1):
                    lab = list(base)
                    lab[a], lab[b] = la, lb
                    lab = tuple(lab)
                    key = lab if lab[0] == 0 else tuple(1 - x for x in lab)
                    if key in seen:
                        continue
                    seen.add(key)
                    count += 1
                    c = _split_cost(S, lab)
                    if c < best:
                        best, best_lab = c, key
    return OracleResult(best, best_lab, count)


def brute_restricted(S: Sequence, o) -> OracleResult:
    """Optimal cover by two congruent disks that both contain ``o``.

    Enumerates every cut of the circular order about ``o`` into two arcs;
    each side costs the enclosing radius of the side plus ``o``.
    """
    S = as_points(S)
    n = len(S)
    o = (float(o[0]), float(o[1]))
    for k, p in enumerate(S):
        if p[0] == o[0] and p[1] == o[1]:
            raise InputError(f"point {k} coincides with o")
    if n == 0:
        return OracleResult(0.0, (), 0)
    order = angular_order(o, S)
    seq = [S[k] for k in order]
    # window costs: cost[a][L] = MED of o plus seq[a .. a+L-1] (cyclic)
    best = smallest_enclosing_disk(seq + [o]).radius
    best_cut = (0, n)
    count = 1
    win: dict = {}

    def cost(a: int, L: int) -> float:
        key = (a, L)
        v = win.get(key)
        if v is None:
            pts = [seq[(a + t) % n] for t in range(L)]
            v = smallest_enclosing_disk(pts + [o]).radius
            win[key] = v
        return v

    for a in range(n):
        for L in range(1, n):
            count += 1
            c = max(cost(a, L), cost((a + L) % n, n - L))
            if c < best:
                best, best_cut = c, (a, L)
    a, L = best_cut
    lab = [1] * n
    for t in range(L):
        lab[order[(a + t) % n]] = 0
    if L == n:
        lab = [0] * n
    return OracleResult(best, tuple(lab), count)


def brute_emptiness(X: Sequence, r: float) -> bool:
    """``I_r(X)`` is empty exactly when no radius-r disk covers ``X``."""
    if len(X) == 0:
        return False
    return smallest_enclosing_disk(X).radius > r


def brute_contiguous(S: Sequence) -> OracleResult:
    """Best split of points in convex position into two runs that are
    contiguous along the hull.  Labels refer to the input order."""
    pts = as_points(S)
    n = len(pts)
    if n <= 1:
        return OracleResult(0.0, (0,) * n, 1)
    cx = sum(p[0] for p in pts) / n
    cy = sum(p[1] for p in pts) / n
    order = sorted(range(n), key=lambda k: (math.atan2(pts[k][1] - cy, pts[k][0] - cx), k))
    seq = [pts[k] for k in order]
    best = smallest_enclosing_disk(seq).radius
    best_cut = (0, n)
    count = 1
    for a in range(n):
        for L in range(1, n):
            side1 = [seq[(a + t) % n] for t in range(L)]
            side2 = [seq[(a + L + t) % n] for t in range(n - L)]
            count += 1
            c = max(smallest_enclosing_disk(side1).radius, smallest_enclosing_disk(side2).radius)
            if c < best:
                best, best_cut = c, (a, L)
    a, L = best_cut
    lab = [1] * n if L < n else [0] * n
    for t in range(L if L < n else 0):
        lab[order[(a + t) % n]] = 0
    return OracleResult(best, tuple(lab), count)


def min_rij(inst) -> float:
    """Exhaustive minimum of the radius matrix of a split instance."""
    best = math.inf
    for i in range(inst.n_plus + 1):
        for j in range(inst.n_minus + 1):
            a = smallest_enclosing_disk(inst.splus[i:] + inst.sminus[:j]).radius
            b = smallest_enclosing_disk(inst.splus[:i] + inst.sminus[j:]).radius
            best = min(best, max(a, b))
    return best
