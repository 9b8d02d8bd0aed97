"""Radius-r intersection hulls, circular hulls and boundary-part algebra.

An :class:`ArcChain` for ``I_r(X)`` is fully determined by the cyclic
counterclockwise sequence of its arc centers (the vertices of the circular
hull ``alpha_r(X)``).  Vertex ``k`` of a chain is the start of arc ``k`` and
the end of arc ``k - 1``.

Kinds:

* ``"plane"``  generated by the empty set (no constraint at all),
* ``"empty"``  no point within ``r`` of every generator,
* ``"point"``  the hull degenerates to one point (tangency band),
* ``"region"`` a proper convex region (a full circle when one center).
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import NamedTuple, Sequence

import numpy as np

from .geometry import (
    DEFAULT_TOL,
    ContractError,
    InputError,
    Point,
    Tolerance,
    cross,
    orient,
)
from ._kernels import cap_extents, hull_indices

PLANE, EMPTY, POINT, REGION = "plane", "empty", "point", "region"

# angular width (radians) under which a hull is reported as a single point;
# acos near 1 loses about sqrt(ulp) so the floor cannot be much tighter
ANGLE_BAND = 1e-9


class CircleArc(NamedTuple):
    center: Point
    start: Point
    end: Point
    ccw: bool = True


class ArcChain:
    """Chain of radius-``r`` arcs, stored as its ccw arc-center sequence.

    Vertices are derived from consecutive centers and computed on first use.
    Chains are immutable; equality compares radius, kind and centers.
    """

    __slots__ = ("r", "centers", "kind", "_vertices")

    def __init__(self, r: float, centers: tuple, vertices: tuple | None, kind: str):
        self.r = r
        self.centers = centers
        self.kind = kind
        self._vertices = vertices

    @property
    def vertices(self) -> tuple:
        v = self._vertices
        if v is None:
            c, r = self.centers, self.r
            n = len(c)
            if n == 1:
                v = ((c[0][0] + r, c[0][1]),)
            else:
                v = tuple(_vertex_between(c[k - 1], c[k], r) for k in range(n))
            self._vertices = v
        return v

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArcChain):
            return NotImplemented
        return (self.r, self.kind, self.centers) == (other.r, other.kind, other.centers) and (
            self.kind != POINT or self.vertices == other.vertices
        )

    def __hash__(self) -> int:
        return hash((self.r, self.kind, self.centers))

    def __repr__(self) -> str:
        return f"ArcChain(r={self.r!r}, kind={self.kind!r}, centers={self.centers!r})"

    @property
    def arcs(self) -> list[CircleArc]:
        n = len(self.centers)
        vs = self.vertices
        return [CircleArc(Point(*self.centers[k]), Point(*vs[k]), Point(*vs[(k + 1) % n])) for k in range(n)]

    @property
    def is_full_circle(self) -> bool:
        return self.kind == REGION and len(self.centers) == 1

    def contains(self, p, slack: float = 0.0) -> bool:
        """Membership of ``p`` in the region bounded by the chain."""
        if self.kind == PLANE:
            return True
        if self.kind == EMPTY:
            return False
        if self.kind == POINT:
            v = self.vertices[0]
            return math.hypot(p[0] - v[0], p[1] - v[1]) <= slack
        lim = self.r + slack
        return all(math.hypot(p[0] - c[0], p[1] - c[1]) <= lim for c in self.centers)

    def interior_point(self) -> tuple:
        """A point strictly inside a region chain (or the point itself)."""
        if self.kind == POINT:
            return self.vertices[0]
        if self.kind != REGION:
            raise ContractError(f"{self.kind} chain has no interior point")
        if len(self.centers) == 1:
            return self.centers[0]
        vs = self.vertices
        n = len(vs)
        return (sum(v[0] for v in vs) / n, sum(v[1] for v in vs) / n)

    def dump(self) -> str:
        """One line per arc: ``center_x center_y start_x start_y end_x end_y``."""
        lines = []
        for a in self.arcs:
            lines.append(" ".join(format(v, ".17g") for v in (*a.center, *a.start, *a.end)))
        return "\n".join(lines) + ("\n" if lines else "")


def plane_chain(r: float) -> ArcChain:
    return ArcChain(r, (), (), PLANE)


def empty_chain(r: float) -> ArcChain:
    return ArcChain(r, (), (), EMPTY)


def _vertex_between(c, c2, r: float) -> tuple:
    """Common point of circles about ``c`` and ``c2`` that ends arc ``c``."""
    dx, dy = c2[0] - c[0], c2[1] - c[1]
    d = math.hypot(dx, dy)
    h = math.sqrt(max(r * r - d * d / 4.0, 0.0))
    return ((c[0] + c2[0]) / 2.0 - h * dy / d, (c[1] + c2[1]) / 2.0 + h * dx / d)


def _canonical_rotation(centers: Sequence) -> int:
    return min(range(len(centers)), key=lambda k: (centers[k][0], centers[k][1]))


def chain_from_centers(centers: Sequence, r: float, canonical: bool = True) -> ArcChain:
    """Region chain from its ccw arc-center sequence."""
    centers = [(c[0], c[1]) for c in centers]
    if not centers:
        raise ContractError("a region chain needs at least one center")
    if canonical and len(centers) > 1:
        k = _canonical_rotation(centers)
        centers = centers[k:] + centers[:k]
    return ArcChain(r, tuple(centers), None, REGION)


def point_chain(p, center, r: float) -> ArcChain:
    return ArcChain(r, ((center[0], center[1]),), ((p[0], p[1]),), POINT)


def _hull_tuples(X: Sequence) -> list[tuple]:
    """Strict ccw convex hull on raw tuples (monotone chain)."""
    pts = sorted(set((p[0], p[1]) for p in X))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _cap_extents(hull: Sequence, r: float, band: float) -> list[tuple[float, float, float]]:
    """For each hull vertex c: (extent, lo, hi) of the arc of its radius-r
    circle lying within distance r of every other hull vertex.

    ``lo``/``hi`` are absolute angles; a negative extent means no such arc.
    Scanning a vertex stops once its extent drops below ``-band``.
    """
    out = []
    two_r = 2.0 * r
    acos, atan2, hypot, sqrt = math.acos, math.atan2, math.hypot, math.sqrt
    pi, tau = math.pi, 2.0 * math.pi
    for c in hull:
        cx, cy = c
        ref = None
        lo, hi = -math.inf, math.inf
        for q in hull:
            if q is c:
                continue
            dx, dy = q[0] - cx, q[1] - cy
            x = hypot(dx, dy) / two_r
            beta = acos(x) if x <= 1.0 else -sqrt(2.0 * (x - 1.0))
            phi = atan2(dy, dx)
            if ref is None:
                ref = phi
                rel = 0.0
            else:
                rel = phi - ref
                if rel > pi:
                    rel -= tau
                elif rel <= -pi:
                    rel += tau
            if rel - beta > lo:
                lo = rel - beta
            if rel + beta < hi:
                hi = rel + beta
            if hi - lo < -band:
                break
        out.append((hi - lo, ref + lo, ref + hi))
    return out


def intersection_hull(X: Sequence, r: float, tol: Tolerance | None = None) -> ArcChain:
    """Boundary of the common intersection of the radius-r disks about ``X``."""
    if not r > 0:
        raise InputError("radius must be positive")
    if len(X) == 0:
        return plane_chain(r)
    X = list(X)
    P = np.fromiter(itertools.chain.from_iterable((p[0], p[1]) for p in X), np.float64, 2 * len(X)).reshape(-1, 2)
    hidx = hull_indices(P)
    if len(hidx) == 1:
        return chain_from_centers([X[hidx[0]]], r)
    band = ANGLE_BAND if tol is None else max(ANGLE_BAND, 10.0 * tol.eps_abs / r)
    caps = cap_extents(P, hidx, r, band)
    best = int(np.argmax(caps[:, 0]))
    ext, lo, hi = caps[best]
    if ext < -band:
        return empty_chain(r)
    kept = [X[k] for k, e in zip(hidx, caps[:, 0]) if e > band]
    if ext <= band or len(kept) < 2:
        mid = (lo + hi) / 2.0
        c = X[hidx[best]]
        return point_chain((c[0] + r * math.cos(mid), c[1] + r * math.sin(mid)), c, r)
    return chain_from_centers(kept, r)


def circular_hull(X: Sequence, r: float, tol: Tolerance | None = None) -> ArcChain:
    """Boundary of ``alpha_r(X)``, the intersection of all radius-r disks
    containing ``X``.

    Dual to :func:`intersection_hull`: its arcs are centered at the vertices
    of ``I_r(X)`` and its vertices are the arc centers of ``I_r(X)``.  Returned
    with ``kind="empty"`` when no radius-r disk contains ``X``.
    """
    tol = tol or DEFAULT_TOL
    ih = intersection_hull(X, r, tol)
    if ih.kind in (EMPTY, PLANE):
        return ArcChain(r, (), (), ih.kind)
    if ih.is_full_circle:
        c = ih.centers[0]
        return ArcChain(r, (c,), (c,), POINT)
    if ih.kind == POINT:
        # one circle about the tangency point, split at the generators on it
        v = ih.vertices[0]
        on = sorted(
            {Point(*p) for p in X if abs(math.hypot(p[0] - v[0], p[1] - v[1]) - r) <= 1e-7 * r},
            key=functools.cmp_to_key(lambda a, b: _ccw_cmp(v, a, b)),
        )
        n = len(on)
        return ArcChain(r, (v,) * n, tuple(on), REGION)
    n = len(ih.centers)
    return ArcChain(r, ih.vertices, tuple(ih.centers[k - 1] for k in range(n)), REGION)


# ---------------------------------------------------------------------------
# angular comparisons about a witness point (orientation tests only)


def _half(w, p) -> int:
    dx, dy = p[0] - w[0], p[1] - w[1]
    return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1


def _ccw_cmp(w, a, b) -> int:
    """Compare directions w->a and w->b by ccw angle in [0, 2pi)."""
    ha, hb = _half(w, a), _half(w, b)
    if ha != hb:
        return ha - hb
    o = orient(w, a, b)
    return -1 if o > 0 else (1 if o < 0 else 0)


def _arc_holds(c, s, e, p) -> bool:
    """Is direction c->p within the (< pi) ccw arc from c->s to c->e?"""
    u, v, x = (s[0] - c[0], s[1] - c[1]), (e[0] - c[0], e[1] - c[1]), (p[0] - c[0], p[1] - c[1])
    return cross(u, x) >= 0 and cross(x, v) >= 0


def locate_arc(chain: ArcChain, p) -> int:
    """Index of the arc of ``chain`` on which boundary point ``p`` lies."""
    n = len(chain.centers)
    if n == 1:
        return 0
    best, best_err = 0, math.inf
    for k in range(n):
        c = chain.centers[k]
        s, e = chain.vertices[k], chain.vertices[(k + 1) % n]
        if _arc_holds(c, s, e, p):
            err = abs(math.hypot(p[0] - c[0], p[1] - c[1]) - chain.r)
            if err < best_err:
                best, best_err = k, err
    if best_err == math.inf:
        # p sits numerically past an arc end: snap to the nearest vertex
        k = min(range(n), key=lambda k: math.hypot(p[0] - chain.vertices[k][0], p[1] - chain.vertices[k][1]))
        return k
    return best


# ---------------------------------------------------------------------------
# boundary parts and the two-chain intersection query


class BoundaryPart(NamedTuple):
    """Counterclockwise piece ``I(owner)[s, e]`` of a chain boundary.

    ``full`` marks the whole boundary, ``none`` marks an empty part.  ``s_arc``
    and ``e_arc`` index the owner's arcs containing ``s`` and ``e``.
    """

    owner: object
    s: Point | None
    e: Point | None
    full: bool = False
    none: bool = False
    s_arc: int = -1
    e_arc: int = -1

    @property
    def is_point(self) -> bool:
        return not self.full and not self.none and self.s == self.e


class SeparatedResult(NamedTuple):
    """Outcome of :func:`separated_intersect`.

    ``relation`` is one of ``disjoint``, ``a_in_b``, ``b_in_a``, ``crossing``.
    For ``crossing`` the chain ``A`` boundary from ``s`` to ``e`` (ccw) is
    ``f(A, B)`` and the ``B`` boundary from ``e`` to ``s`` is ``f(B, A)``.
    """

    relation: str
    s: Point | None = None
    e: Point | None = None
    f_ab: BoundaryPart | None = None
    f_ba: BoundaryPart | None = None


def _full(owner) -> BoundaryPart:
    return BoundaryPart(owner, None, None, full=True)


def _none(owner) -> BoundaryPart:
    return BoundaryPart(owner, None, None, none=True)


def separated_intersect(A: ArcChain, B: ArcChain, owners=("A", "B"), tol: Tolerance | None = None) -> SeparatedResult:
    """Two-chain intersection for line-separated generators.

    Computes the chain of ``I(A) & I(B)`` from the union of both center
    sequences and reads the answer off its runs of A-centers and B-centers.
    A separated pair yields at most one run of each; anything else raises
    :class:`ContractError`.
    """
    oa, ob = owners
    r = A.r
    if A.kind == EMPTY or B.kind == EMPTY:
        return SeparatedResult("disjoint", f_ab=_none(oa), f_ba=_none(ob))
    if B.kind == PLANE:
        return SeparatedResult("a_in_b", f_ab=_full(oa), f_ba=_none(ob))
    if A.kind == PLANE:
        return SeparatedResult("b_in_a", f_ab=_none(oa), f_ba=_full(ob))
    if A.kind == POINT or B.kind == POINT:
        return _point_case(A, B, oa, ob, tol)
    label: dict = {}
    for c in A.centers:
        label[c] = label.get(c, 0) | 1
    for c in B.centers:
        label[c] = label.get(c, 0) | 2
    C = intersection_hull(list(label), r, tol)
    if C.kind == EMPTY:
        return SeparatedResult("disjoint", f_ab=_none(oa), f_ba=_none(ob))
    if C.kind == POINT:
        p = C.vertices[0]
        ka, kb = locate_arc(A, p), locate_arc(B, p)
        return SeparatedResult(
            "crossing", p, p, BoundaryPart(oa, p, p, s_arc=ka, e_arc=ka), BoundaryPart(ob, p, p, s_arc=kb, e_arc=kb)
        )
    labs = [label[c] for c in C.centers]
    if all(x & 1 for x in labs):
        if all(x & 2 for x in labs):
            return SeparatedResult("a_in_b", f_ab=_full(oa), f_ba=_full(ob))
        return SeparatedResult("a_in_b", f_ab=_full(oa), f_ba=_none(ob))
    if all(x & 2 for x in labs):
        return SeparatedResult("b_in_a", f_ab=_none(oa), f_ba=_full(ob))
    n = len(labs)
    starts = [k for k in range(n) if labs[k] & 1 and not labs[k - 1] & 1]
    ends = [k for k in range(n) if labs[k] & 1 and not labs[(k + 1) % n] & 1]
    if len(starts) != 1 or len(ends) != 1:
        raise ContractError("generators are not line-separated: the merged chain alternates more than once")
    ks, ke = starts[0], (ends[0] + 1) % n
    cc = C.centers
    s, e = _vertex_between(cc[ks - 1], cc[ks], r), _vertex_between(cc[ke - 1], cc[ke], r)
    a_s = _index_of(A, C.centers[ks])
    a_e = _index_of(A, C.centers[ends[0]])
    b_s = _index_of(B, C.centers[ke])
    b_e = _index_of(B, C.centers[ks - 1])
    return SeparatedResult(
        "crossing",
        s,
        e,
        BoundaryPart(oa, s, e, s_arc=a_s, e_arc=a_e),
        BoundaryPart(ob, e, s, s_arc=b_s, e_arc=b_e),
    )


def _index_of(chain: ArcChain, c) -> int:
    try:
        return chain.centers.index(c)
    except ValueError as exc:
        raise ContractError("merged chain center missing from its source chain") from exc


def _point_case(A: ArcChain, B: ArcChain, oa, ob, tol) -> SeparatedResult:
    band = 1e-9 * A.r + (tol or DEFAULT_TOL).eps_abs
    if A.kind == POINT and B.kind == POINT:
        p, q = A.vertices[0], B.vertices[0]
        if math.hypot(p[0] - q[0], p[1] - q[1]) <= band:
            return SeparatedResult("a_in_b", f_ab=_full(oa), f_ba=_full(ob))
        return SeparatedResult("disjoint", f_ab=_none(oa), f_ba=_none(ob))
    if A.kind == POINT:
        if B.contains(A.vertices[0], band):
            return SeparatedResult("a_in_b", f_ab=_full(oa), f_ba=_none(ob))
        return SeparatedResult("disjoint", f_ab=_none(oa), f_ba=_none(ob))
    if A.contains(B.vertices[0], band):
        return SeparatedResult("b_in_a", f_ab=_none(oa), f_ba=_full(ob))
    return SeparatedResult("disjoint", f_ab=_none(oa), f_ba=_none(ob))


# ---------------------------------------------------------------------------
# clipping: intersect boundary parts of one chain


def _sweep(w, intervals: list[tuple]) -> list[tuple]:
    """Common intersection of closed ccw angular intervals about ``w``.

    Each interval is ``(s, e, s_arc, e_arc)`` with endpoints given as boundary
    points; ``s == e`` is a single direction.  Returns the connected
    components in the same form.  Directions are compared by orientation
    tests only.
    """
    k = len(intervals)
    if k == 0:
        return []
    cmp = functools.partial(_ccw_cmp, w)
    events = []
    cover = 0
    for s, e, sa, ea in intervals:
        if cmp(s, e) > 0:
            cover += 1  # runs through the reference direction
        events.append((s, 0, sa))
        events.append((e, 1, ea))
    # starts before ends at equal angles: intervals are closed
    events.sort(key=functools.cmp_to_key(lambda a, b: cmp(a[0], b[0]) or (a[1] - b[1])))
    wraps = cover == k
    comps = []
    open_at = None
    for p, typ, arc in events:
        if typ == 0:
            cover += 1
            if cover == k:
                open_at = (p, arc)
        else:
            if cover == k:
                comps.append((open_at, (p, arc)))
            cover -= 1
    if wraps:
        # the first component opened before the reference direction; its
        # opening is the last start seen, left unclosed by the sweep
        comps[0] = (open_at, comps[0][1])
    return [(a[0], b[0], a[1], b[1]) for a, b in comps]


def clip_boundary(
    chain: ArcChain,
    parts: Sequence[BoundaryPart],
    witness=None,
    split: int | None = None,
) -> list[BoundaryPart]:
    """Connected components of the intersection of boundary parts of ``chain``.

    Parts are treated as angular intervals about ``witness`` (an interior
    point; defaults to :meth:`ArcChain.interior_point`).  With ``split`` the
    family is processed as two subfamilies ``parts[:split]`` and
    ``parts[split:]`` whose own intersections are intersected last; for the
    canonical-node family of one range each subfamily is a single interval,
    so at most two components come out.
    """
    owner = parts[0].owner if parts else None
    if any(p.none for p in parts):
        return []
    if all(p.full for p in parts):
        return [BoundaryPart(owner, None, None, full=True)]
    if chain.kind == POINT:
        v = chain.vertices[0]
        return [BoundaryPart(owner, v, v, s_arc=0, e_arc=0)]
    w = witness if witness is not None else chain.interior_point()
    if not chain.contains(w, 1e-9 * chain.r):
        raise ContractError("clip witness lies outside the chain")

    def run(ps):
        return _sweep(w, [(p.s, p.e, p.s_arc, p.e_arc) for p in ps if not p.full])

    left = [p for p in parts[:split] if not p.full] if split else []
    right = [p for p in parts[split:] if not p.full] if split else []
    if left and right:
        comps = []
        for a in run(left):
            for b in run(right):
                comps.extend(_sweep(w, [a, b]))
    else:
        comps = run(parts)
    return [BoundaryPart(owner, s, e, s_arc=sa, e_arc=ea) for s, e, sa, ea in comps]


def piece_centers(chain: ArcChain, part: BoundaryPart) -> list[Point]:
    """Arc centers of ``chain`` met walking ccw over ``part``."""
    n = len(chain.centers)
    if part.full:
        return list(chain.centers)
    if part.none:
        return []
    sa, ea = part.s_arc, part.e_arc
    if sa == ea:
        c = chain.centers[sa]
        if part.s != part.e and cross((part.s[0] - c[0], part.s[1] - c[1]), (part.e[0] - c[0], part.e[1] - c[1])) < 0:
            return [chain.centers[(sa + k) % n] for k in range(n)] + ([c] if n > 1 else [])
        return [c]
    out = []
    k = sa
    while True:
        out.append(chain.centers[k])
        if k == ea:
            break
        k = (k + 1) % n
    return out


def check_boundary_order(chain: ArcChain, index_of) -> bool:
    """True iff arc-center ranks along the chain rise then fall at most once
    (cyclically)."""
    ranks = [index_of[c] for c in chain.centers]
    n = len(ranks)
    if n <= 2:
        return True
    peaks = sum(1 for k in range(n) if ranks[k - 1] < ranks[k] > ranks[(k + 1) % n])
    return peaks <= 1
