"""Regenerate the oracle fixtures used by the test suite.

Every expected radius here comes from the brute-force oracles, never from the
solvers under test.  Run from the repository root:

    python tests/data/make_fixtures.py
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from twocenter.geometry import smallest_enclosing_disk
from twocenter.oracle import brute_contiguous, brute_restricted, brute_two_center

HERE = Path(__file__).parent


def random_points(rng, n):
    if rng.random() < 0.5:
        return rng.uniform(-1.0, 1.0, size=(n, 2))
    # two blobs with a random gap
    gap = rng.uniform(0.0, 1.5)
    lab = rng.integers(0, 2, size=n)
    ang = rng.uniform(0, 2 * math.pi, size=n)
    rad = np.sqrt(rng.uniform(0, 1, size=n)) * rng.uniform(0.3, 1.0)
    return np.column_stack((np.where(lab == 1, gap, -gap) + rad * np.cos(ang), rad * np.sin(ang)))


def lens_point(rng, c1, c2, R, margin=1e-6):
    """Uniform point strictly inside both radius-R disks, or None."""
    lo = np.maximum(np.array(c1) - R, np.array(c2) - R)
    hi = np.minimum(np.array(c1) + R, np.array(c2) + R)
    if np.any(hi <= lo):
        return None
    lim = R * (1 - margin)
    for _ in range(2000):
        p = rng.uniform(lo, hi)
        if math.dist(p, c1) < lim and math.dist(p, c2) < lim:
            return p
    return None


def restricted_cases(seed, count, nmin, nmax):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(nmin, nmax + 1))
        P = [tuple(map(float, p)) for p in random_points(rng, n)]
        best = brute_two_center(P)
        a = [p for p, l in zip(P, best.partition) if l == 0]
        b = [p for p, l in zip(P, best.partition) if l == 1]
        if not a or not b:
            continue
        c1, c2 = smallest_enclosing_disk(a).center, smallest_enclosing_disk(b).center
        o = lens_point(rng, c1, c2, best.radius)
        if o is None:
            continue
        o = (float(o[0]), float(o[1]))
        ref = brute_restricted(P, o)
        out.append({"points": P, "o": list(o), "radius": ref.radius, "two_center": best.radius})
    return out


def convex_cases(seed, count, nmin, nmax):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(nmin, nmax + 1))
        t = np.sort(rng.uniform(0, 2 * math.pi, size=n))
        a, b = rng.uniform(0.4, 1.6, size=2)
        phi = rng.uniform(0, math.pi)
        x, y = a * np.cos(t), b * np.sin(t)
        P = [(float(math.cos(phi) * u - math.sin(phi) * v), float(math.sin(phi) * u + math.cos(phi) * v)) for u, v in zip(x, y)]
        perm = rng.permutation(n)
        P = [P[k] for k in perm]
        out.append({"points": P, "radius": brute_contiguous(P).radius})
    return out


def main():
    sets = {
        "restricted_cases.json": restricted_cases(20261018, 500, 3, 40),
        "decision_cases.json": restricted_cases(777, 300, 3, 30),
        "convex_cases.json": convex_cases(4242, 200, 3, 40),
    }
    for name, data in sets.items():
        (HERE / name).write_text(json.dumps(data) + "\n")
        print(name, len(data))


if __name__ == "__main__":
    main()
