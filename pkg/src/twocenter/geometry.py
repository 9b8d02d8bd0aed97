"""Planar primitives shared by every other module.

Points are plain ``(x, y)`` float pairs (:class:`Point` is a ``NamedTuple`` so
bare tuples work everywhere).  All approximate comparisons go through
:class:`Tolerance`.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels


class InputError(ValueError):
    """Bad user input: non-finite coordinates, coincident points, etc."""


class ContractError(RuntimeError):
    """An internal precondition or invariant was violated."""


class Point(NamedTuple):
    x: float
    y: float


class Disk(NamedTuple):
    center: Point
    radius: float
    support: tuple = ()
    degenerate: bool = False

    def contains(self, p, tol: "Tolerance | None" = None) -> bool:
        tol = tol or DEFAULT_TOL
        return tol.le(dist(self.center, p), self.radius)


class Tolerance(NamedTuple):
    """Relative and absolute comparison slack.

    ``eps_abs`` is a length; :meth:`for_points` scales it by the bounding-box
    diagonal of the input.
    """

    eps_rel: float = 1e-9
    eps_abs: float = 1e-12

    def slack(self, a: float, b: float) -> float:
        return self.eps_abs + self.eps_rel * max(abs(a), abs(b))

    def le(self, a: float, b: float) -> bool:
        return a <= b + self.slack(a, b)

    def lt(self, a: float, b: float) -> bool:
        return a < b - self.slack(a, b)

    def close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.slack(a, b)

    def same_point(self, p, q, scale: float = 1.0) -> bool:
        return dist(p, q) <= self.eps_abs + self.eps_rel * scale

    def angle_slack(self, r: float) -> float:
        # angular slack on a circle of radius r; never looser than 1e-12 rad
        return max(self.eps_abs / r, 1e-12) if r > 0 else 1e-12

    @classmethod
    def for_points(cls, pts: Iterable, eps_rel: float = 1e-9, eps_abs: float = 1e-12) -> "Tolerance":
        diag = bbox_diagonal(pts)
        return cls(eps_rel, eps_abs * (diag if diag > 0 else 1.0))


DEFAULT_TOL = Tolerance()


def as_point(p) -> Point:
    try:
        x, y = float(p[0]), float(p[1])
    except (TypeError, IndexError, ValueError) as exc:
        raise InputError(f"not a planar point: {p!r}") from exc
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InputError(f"non-finite coordinate in {p!r}")
    return Point(x, y)


def as_points(pts: Iterable) -> list[Point]:
    return [as_point(p) for p in pts]


def bbox_diagonal(pts: Iterable) -> float:
    xs, ys = [], []
    for p in pts:
        xs.append(p[0])
        ys.append(p[1])
    if not xs:
        return 0.0
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def orient(a, b, c) -> float:
    """Twice the signed area of triangle abc (> 0 for a left turn)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def cross(u, v) -> float:
    return u[0] * v[1] - u[1] * v[0]


def circumcircle(a, b, c, tol: Tolerance | None = None) -> Disk:
    """Circle through three pairwise distinct, non-collinear points.

    Raises :class:`InputError` for a collinear triple (no finite circle).
    """
    tol = tol or DEFAULT_TOL
    bx, by = b[0] - a[0], b[1] - a[1]
    cx, cy = c[0] - a[0], c[1] - a[1]
    d = 2.0 * (bx * cy - by * cx)
    scale = max(bx * bx + by * by, cx * cx + cy * cy)
    if scale == 0.0 or abs(d) <= 1e-14 * scale:
        raise InputError("collinear triple has no finite circumcircle")
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = Point(a[0] + ux, a[1] + uy)
    radius = max(dist(center, a), dist(center, b), dist(center, c))
    return Disk(center, radius, (Point(*a), Point(*b), Point(*c)))


# containment slack used inside the enclosing-disk loop; far tighter than the
# user-facing tolerance so critical radii stay exact to a few ulps
_MED_SLACK = 1e-12


def smallest_enclosing_disk(pts: Sequence, tol: Tolerance | None = None) -> Disk:
    """Minimum enclosing disk by randomized incremental construction.

    Expected O(n).  The shuffle uses a fixed seed, so the result is a pure
    function of the input sequence.  ``support`` holds the (at most three)
    boundary points that determine the disk.
    """
    if isinstance(pts, np.ndarray):
        P = np.ascontiguousarray(pts, dtype=np.float64).reshape(-1, 2)
    else:
        P = np.array([(p[0], p[1]) for p in pts], dtype=np.float64).reshape(-1, 2)
    if not np.isfinite(P).all():
        raise InputError("non-finite coordinate in point set")
    if len(P) == 0:
        return Disk(Point(0.0, 0.0), 0.0, (), True)
    eps_abs = tol.eps_abs if tol is not None else 0.0
    cx, cy, rr, sup = _kernels.med(P, _MED_SLACK, eps_abs)
    support = tuple(Point(float(P[k, 0]), float(P[k, 1])) for k in sup if k >= 0)
    return Disk(Point(float(cx), float(cy)), float(rr), support, False)


def med_radius(pts: Sequence) -> float:
    return smallest_enclosing_disk(pts).radius


def circle_circle_points(d1: Disk, d2: Disk, tol: Tolerance | None = None) -> list[Point]:
    """Intersection points of two circles (0, 1 or 2 of them).

    Tangency within the tolerance band yields a single point.  Two points are
    returned in counterclockwise order as seen walking along ``d1``'s circle:
    first the point where the walk enters ``d2``, then where it leaves.
    """
    tol = tol or DEFAULT_TOL
    (x1, y1), r1 = d1.center, d1.radius
    (x2, y2), r2 = d2.center, d2.radius
    if r1 <= 0 or r2 <= 0:
        raise InputError("circle radii must be positive")
    dx, dy = x2 - x1, y2 - y1
    d = math.hypot(dx, dy)
    if d == 0.0:
        return []
    band = 10 * tol.eps_abs + tol.eps_rel * max(r1, r2) * 1e-3
    if d > r1 + r2 + band or d < abs(r1 - r2) - band:
        return []
    a = (r1 * r1 - r2 * r2 + d * d) / (2 * d)
    h2 = r1 * r1 - a * a
    mx, my = x1 + a * dx / d, y1 + a * dy / d
    if h2 <= (band * max(r1, r2)) or abs(d - (r1 + r2)) <= band or abs(d - abs(r1 - r2)) <= band:
        return [Point(mx, my)]
    h = math.sqrt(h2)
    nx, ny = -dy / d, dx / d
    return [Point(mx - h * nx, my - h * ny), Point(mx + h * nx, my + h * ny)]


def _angle_key(o, p):
    """Sort key for the counterclockwise angle of ``p`` about ``o`` in [0, 2pi).

    Half-plane index plus a cross-product comparison, no inverse trig.
    """
    return 0 if (p[1] > o[1] or (p[1] == o[1] and p[0] > o[0])) else 1


def angular_order(o, pts: Sequence) -> list[int]:
    """Permutation sorting ``pts`` counterclockwise about ``o``.

    Angles are measured in [0, 2pi) from the positive x direction; ties go
    nearest first.  A point equal to ``o`` is an :class:`InputError`.
    """
    import functools

    ox, oy = o[0], o[1]
    for k, p in enumerate(pts):
        if p[0] == ox and p[1] == oy:
            raise InputError(f"point {k} coincides with the center {tuple(o)!r}")

    def cmp(i, j):
        p, q = pts[i], pts[j]
        hp, hq = _angle_key(o, p), _angle_key(o, q)
        if hp != hq:
            return hp - hq
        c = orient(o, p, q)
        if c > 0:
            return -1
        if c < 0:
            return 1
        dp = (p[0] - ox) ** 2 + (p[1] - oy) ** 2
        dq = (q[0] - ox) ** 2 + (q[1] - oy) ** 2
        return (dp > dq) - (dp < dq) or (i > j) - (i < j)

    return sorted(range(len(pts)), key=functools.cmp_to_key(cmp))


def convex_hull(pts: Sequence) -> list[Point]:
    """Strict convex hull, counterclockwise, starting at the lowest-x point."""
    uniq = sorted(set((float(p[0]), float(p[1])) for p in pts))
    if len(uniq) <= 2:
        return [Point(*p) for p in uniq]
    lower: list = []
    for p in uniq:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(uniq):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return [Point(*p) for p in hull]


def in_convex_position(pts: Sequence, tol: Tolerance | None = None) -> bool:
    """True when no point lies strictly inside the hull of the others."""
    tol = tol or Tolerance.for_points(pts)
    hull = convex_hull(pts)
    if len(hull) < 3:
        return True
    scale = bbox_diagonal(pts)
    m = len(hull)
    for p in pts:
        inside = True
        for k in range(m):
            a, b = hull[k], hull[(k + 1) % m]
            if orient(a, b, p) <= tol.eps_abs * scale + tol.eps_rel * scale * scale:
                inside = False
                break
        if inside:
            return False
    return True
