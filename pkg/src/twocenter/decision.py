"""Decision procedure: is the restricted optimum at most ``r``?

Conventions (all index ranges 1-based and inclusive, empty when lo > hi):

* ``A[i, j]`` is the enclosing radius of ``S+[i+1..n+] + S-[1..j]``,
* ``B[i, j]`` is the enclosing radius of ``S+[1..i] + S-[j+1..n-]``,
* ``emptiness_query(ctx, q, j)`` asks whether ``I_r(S+[q..n+] + S-[1..j])``
  is empty, which holds exactly when ``A[q - 1, j] > r``.

``B`` queries reuse the ``A`` machinery on the mirror image ``x -> -x``,
which reverses both sequences, so ``B[i, j] = A'[n+ - i, n- - j]``.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .geometry import (
    _MED_SLACK,
    DEFAULT_TOL,
    ContractError,
    InputError,
    Point,
    Tolerance,
    angular_order,
    smallest_enclosing_disk,
)
from .hulls import EMPTY, PLANE, ArcChain, clip_boundary, separated_intersect
from .rangetree import (
    CanonicalTree,
    DStructure,
    build_d_structure,
    build_tree,
    canonical_nodes,
    range_intersection,
)


class SplitInstance(NamedTuple):
    """Points split by a line through ``o`` (moved to the origin).

    ``splus`` holds the points strictly above the line, ``sminus`` the rest,
    each sorted counterclockwise; ``plus_idx``/``minus_idx`` map back to the
    caller's indices.  ``direction`` is the unit vector of the line.
    """

    o: Point
    splus: tuple
    sminus: tuple
    axis: str
    plus_idx: tuple
    minus_idx: tuple
    direction: tuple = (1.0, 0.0)

    @property
    def n_plus(self) -> int:
        return len(self.splus)

    @property
    def n_minus(self) -> int:
        return len(self.sminus)


AXES = {"x": (1.0, 0.0), "y": (0.0, 1.0)}


def split_instance(S: Sequence, o, axis="x") -> SplitInstance:
    """Translate ``o`` to the origin and rotate the separating line onto the
    x-axis.  ``axis`` is ``"x"``, ``"y"`` or an explicit direction vector."""
    if isinstance(axis, str):
        if axis not in AXES:
            raise InputError(f"unknown axis {axis!r}")
        ux, uy = AXES[axis]
        name = axis
    else:
        ux, uy = float(axis[0]), float(axis[1])
        norm = math.hypot(ux, uy)
        if norm == 0:
            raise InputError("zero separating direction")
        ux, uy = ux / norm, uy / norm
        name = "dir"
    ox, oy = float(o[0]), float(o[1])
    # rotate by -theta: the line direction becomes +x
    moved = [Point((p[0] - ox) * ux + (p[1] - oy) * uy, -(p[0] - ox) * uy + (p[1] - oy) * ux) for p in S]
    for k, (p, q) in enumerate(zip(moved, S)):
        if q[0] == ox and q[1] == oy:
            raise InputError(f"point {k} coincides with o")
    plus = [k for k, p in enumerate(moved) if p[1] > 0]
    minus = [k for k, p in enumerate(moved) if p[1] <= 0]
    origin = Point(0.0, 0.0)
    po = angular_order(origin, [moved[k] for k in plus])
    mo = angular_order(origin, [moved[k] for k in minus])
    # on the positive x-axis the angle is 2pi for S-, so those points go last
    first = [t for t in mo if not (moved[minus[t]][1] == 0 and moved[minus[t]][0] > 0)]
    last = [t for t in mo if moved[minus[t]][1] == 0 and moved[minus[t]][0] > 0]
    mo = first + last
    plus_idx = tuple(plus[t] for t in po)
    minus_idx = tuple(minus[t] for t in mo)
    return SplitInstance(
        Point(ox, oy),
        tuple(moved[k] for k in plus_idx),
        tuple(moved[k] for k in minus_idx),
        name,
        plus_idx,
        minus_idx,
        (ux, uy),
    )


def mirror(inst: SplitInstance) -> SplitInstance:
    """Reflection ``x -> -x``: both sequences come out reversed."""
    return inst._replace(
        splus=tuple(Point(-p[0], p[1]) for p in reversed(inst.splus)),
        sminus=tuple(Point(-p[0], p[1]) for p in reversed(inst.sminus)),
        plus_idx=tuple(reversed(inst.plus_idx)),
        minus_idx=tuple(reversed(inst.minus_idx)),
    )


def to_world(inst: SplitInstance, p) -> Point:
    ux, uy = inst.direction
    return Point(inst.o[0] + p[0] * ux - p[1] * uy, inst.o[1] + p[0] * uy + p[1] * ux)


def side_sets(inst: SplitInstance, i: int, j: int) -> tuple[list[int], list[int]]:
    """Caller indices of the ``A`` side and the ``B`` side of split ``(i, j)``."""
    a = list(inst.plus_idx[i:]) + list(inst.minus_idx[:j])
    b = list(inst.plus_idx[:i]) + list(inst.minus_idx[j:])
    return a, b


def radius_A(inst: SplitInstance, i: int, j: int) -> float:
    return smallest_enclosing_disk(inst.splus[i:] + inst.sminus[:j]).radius


def radius_B(inst: SplitInstance, i: int, j: int) -> float:
    return smallest_enclosing_disk(inst.splus[:i] + inst.sminus[j:]).radius


def r_ij(inst: SplitInstance, i: int, j: int) -> float:
    return max(radius_A(inst, i, j), radius_B(inst, i, j))


# ---------------------------------------------------------------------------
# search-space reduction


class Group(NamedTuple):
    t: int
    a: int  # rows a..b of the radius matrix
    b: int
    jlo: int  # columns jlo..jhi
    jhi: int


class GroupTable(NamedTuple):
    g: int
    m: int
    j_breaks: tuple  # j_0..j_m
    i_breaks: tuple  # i_1..i_{m-1}
    groups: tuple


def _rightmost_true(lo: int, hi: int, pred) -> int:
    """Largest x in [lo, hi] with pred(x), for a predicate true on a prefix;
    ``lo - 1`` when it is false everywhere."""
    ans = lo - 1
    while lo <= hi:
        mid = (lo + hi) // 2
        if pred(mid):
            ans, lo = mid, mid + 1
        else:
            hi = mid - 1
    return ans


def _gallop_true(lo: int, hi: int, pred) -> int:
    """Same answer as :func:`_rightmost_true`, probing ``lo, lo+1, lo+3, ...``
    first; costs O(log(answer - lo)) calls."""
    if lo > hi or not pred(lo):
        return lo - 1
    good, step = lo, 1
    while True:
        nxt = good + step
        if nxt > hi:
            return _rightmost_true(good + 1, hi, pred) if good < hi else good
        if not pred(nxt):
            return _rightmost_true(good + 1, nxt - 1, pred) if good + 1 <= nxt - 1 else good
        good, step = nxt, step * 2


def build_group_table(inst: SplitInstance, g: int = 16) -> GroupTable:
    """Column breakpoints every ``n-/m`` columns and, per breakpoint, the last
    row whose ``A`` value still dominates ``B``.  Row intervals between
    consecutive breakpoints are cut into groups of at most ``g`` rows."""
    if g < 1:
        raise InputError("group width must be at least 1")
    npl, nmi = inst.n_plus, inst.n_minus
    m = max(1, nmi // g)
    step = nmi // m
    jb = tuple([t * step for t in range(m)] + [nmi])
    # enclosing radii of index-range unions, evaluated on the hull vertices
    # of canonical ranges (the disk only depends on those)
    tp = _kernels.hull_tree(np.array(inst.splus, dtype=np.float64).reshape(-1, 2))
    tm = _kernels.hull_tree(np.array(inst.sminus, dtype=np.float64).reshape(-1, 2))

    def a_dominates(i, jt):
        ra = _kernels.union_med_radius(tp, i, npl, tm, 0, jt, _MED_SLACK)
        rb = _kernels.union_med_radius(tp, 0, i, tm, jt, nmi, _MED_SLACK)
        return ra >= rb

    ib = []
    for t in range(1, m):
        jt = jb[t]
        lo = ib[-1] if ib else -1  # i_t never decreases with t; -1 means no row
        ib.append(max(_gallop_true(max(lo, 0), npl, lambda i: a_dominates(i, jt)), lo))
    bounds = [-1] + ib + [npl]
    groups = []
    for t in range(m):
        lo, hi = bounds[t] + 1, bounds[t + 1]
        a = lo
        while a <= hi:
            b = min(hi, a + g - 1)
            groups.append(Group(t, a, b, jb[t], jb[t + 1]))
            a = b + 1
    return GroupTable(g, m, jb, tuple(ib), tuple(groups))


# ---------------------------------------------------------------------------
# per-group preprocessing and emptiness queries


class GlobalTrees(NamedTuple):
    plus: CanonicalTree
    minus: CanonicalTree


def build_global_trees(inst: SplitInstance, r: float, tol: Tolerance | None = None) -> GlobalTrees:
    return GlobalTrees(build_tree(inst.splus, r, tol), build_tree(inst.sminus, r, tol))


class GroupContext(NamedTuple):
    """Structures for emptiness queries with ``q`` in ``qlo..qhi`` and ``j``
    in ``jlo..jhi``.

    ``S2 = S+[qhi+1..n+]`` and ``S3 = S-[1..jlo]`` are fixed; the varying
    ``S1 = S+[q..qhi]`` and ``S4 = S-[jlo+1..j]`` are read from the local
    trees ``local_plus`` (over ``S+[qlo..qhi]``) and ``local_minus`` (over
    ``S-[jlo+1..jhi]``).
    """

    r: float
    qlo: int
    qhi: int
    jlo: int
    jhi: int
    I2: ArcChain
    I3: ArcChain
    f23: object
    local_plus: CanonicalTree
    local_minus: CanonicalTree
    d_plus_2: DStructure
    d_plus_3: DStructure
    d_minus_2: DStructure
    d_minus_3: DStructure


def group_context(
    inst: SplitInstance,
    trees: GlobalTrees,
    qlo: int,
    qhi: int,
    jlo: int,
    jhi: int,
    r: float,
    tol: Tolerance | None = None,
    lazy: bool = True,
) -> GroupContext:
    npl = inst.n_plus
    qhi = min(qhi, npl)
    I2 = range_intersection(trees.plus, qhi + 1, npl, tol)
    I3 = range_intersection(trees.minus, 1, jlo, tol)
    f23 = separated_intersect(I2, I3, ("S2", "S3"), tol)
    lp = build_tree(inst.splus[qlo - 1 : qhi], r, tol) if qlo <= qhi else build_tree((), r)
    lm = build_tree(inst.sminus[jlo:jhi], r, tol)
    return GroupContext(
        r,
        qlo,
        qhi,
        jlo,
        jhi,
        I2,
        I3,
        f23,
        lp,
        lm,
        build_d_structure(lp, I2, tol, "S2", lazy),
        build_d_structure(lp, I3, tol, "S3", lazy),
        build_d_structure(lm, I2, tol, "S2", lazy),
        build_d_structure(lm, I3, tol, "S3", lazy),
    )


def group_preprocess(inst: SplitInstance, table: GroupTable, r: float, tol: Tolerance | None = None) -> list[GroupContext]:
    """Contexts answering the ``A`` side of every group of ``table``."""
    trees = build_global_trees(inst, r, tol)
    return [group_context(inst, trees, gr.a + 1, gr.b + 1, gr.jlo, gr.jhi, r, tol, lazy=False) for gr in table.groups]


def emptiness_query(ctx: GroupContext, q: int, j: int, tol: Tolerance | None = None) -> bool:
    """Is ``I_r(S+[q..n+] + S-[1..j])`` empty?

    Members are the canonical nodes of ``S1`` and ``S4`` plus ``S2`` and
    ``S3``.  Parts of a node against ``S2``/``S3`` come from the stored
    D-structures, the ``S2``/``S3`` pair from the context, and node-node
    pairs are computed on demand.  The set is nonempty iff some member's
    boundary keeps a piece after clipping by all others.
    """
    if not (ctx.qlo <= q <= ctx.qhi + 1 and ctx.jlo <= j <= ctx.jhi):
        raise ContractError(f"query ({q},{j}) outside its group")
    # member: (key, chain, kind-of-source, node id)
    members = []
    for nd in canonical_nodes(ctx.local_plus, q - ctx.qlo + 1, ctx.qhi - ctx.qlo + 1):
        members.append((("P", nd.id), nd.chain))
    for nd in canonical_nodes(ctx.local_minus, 1, j - ctx.jlo):
        members.append((("M", nd.id), nd.chain))
    if ctx.I2.kind != PLANE:
        members.append(("S2", ctx.I2))
    if ctx.I3.kind != PLANE:
        members.append(("S3", ctx.I3))
    if not members:
        return False
    if any(c.kind == EMPTY for _, c in members):
        return True
    if len(members) == 1:
        return False
    pair: dict = {}

    def parts_of(x, y):
        """(f(x, y), f(y, x)) or None when disjoint."""
        key = (x[0], y[0])
        if key in pair:
            return pair[key]
        kx, ky = x[0], y[0]
        res = None
        if kx == "S2" and ky == "S3":
            res = ctx.f23
        elif kx == "S3" and ky == "S2":
            r0 = ctx.f23
            res = r0._replace(f_ab=r0.f_ba, f_ba=r0.f_ab)
        elif ky in ("S2", "S3") and kx not in ("S2", "S3"):
            res = _stored(ctx, kx, ky)
        elif kx in ("S2", "S3") and ky not in ("S2", "S3"):
            r0 = _stored(ctx, ky, kx)
            res = r0._replace(f_ab=r0.f_ba, f_ba=r0.f_ab)
        else:
            res = separated_intersect(x[1], y[1], (kx, ky), tol)
        out = None if res.relation == "disjoint" else (res.f_ab, res.f_ba)
        pair[key] = out
        pair[(ky, kx)] = None if out is None else (out[1], out[0])
        return out

    for x in members:
        parts = []
        for y in members:
            if y is x:
                continue
            pr = parts_of(x, y)
            if pr is None:
                return True
            parts.append(pr[0])
        if clip_boundary(x[1], parts):
            return False
    return True


def _stored(ctx: GroupContext, node_key, other: str):
    side, nid = node_key
    if side == "P":
        d = ctx.d_plus_2 if other == "S2" else ctx.d_plus_3
    else:
        d = ctx.d_minus_2 if other == "S2" else ctx.d_minus_3
    return d.part(nid)


# ---------------------------------------------------------------------------
# the decision procedure


class Decision(NamedTuple):
    yes: bool
    i: int = -1
    j: int = -1
    axis: str = ""

    def __bool__(self) -> bool:
        return self.yes


class Decider:
    """Reusable decision oracle for one split instance.

    The group table depends only on the instance, so it is built once; trees
    and contexts are rebuilt per radius.  A call answers whether the optimum
    is at most ``r * (1 + tol.eps_rel)``.
    """

    def __init__(self, inst: SplitInstance, g: int = 16, tol: Tolerance | None = None):
        self.inst = inst
        self.mirror = mirror(inst)
        self.g = g
        self.tol = tol or DEFAULT_TOL
        self.table = build_group_table(inst, g)

    def __call__(self, r: float) -> Decision:
        if not r > 0:
            raise InputError("decision radius must be positive")
        inst, mir, tol = self.inst, self.mirror, self.tol
        # ties within eps_rel count as yes, the same way for every support type
        r = r * (1.0 + tol.eps_rel)
        npl, nmi = inst.n_plus, inst.n_minus
        trees = mtrees = None
        for gr in self.table.groups:
            ctx = mctx = None
            jfloor = gr.jlo
            for i in range(gr.a, gr.b + 1):
                if ctx is None:
                    trees = trees or build_global_trees(inst, r, tol)
                    ctx = group_context(inst, trees, gr.a + 1, gr.b + 1, gr.jlo, gr.jhi, r, tol)
                # A[i, j_t] > r rules the row out
                if emptiness_query(ctx, i + 1, gr.jlo, tol):
                    continue
                # largest j with A[i, j] <= r; it never decreases with i
                j = _rightmost_true(jfloor + 1, gr.jhi, lambda jj: not emptiness_query(ctx, i + 1, jj, tol))
                j = max(j, jfloor)
                jfloor = j
                if mctx is None:
                    mtrees = mtrees or build_global_trees(mir, r, tol)
                    mctx = group_context(mir, mtrees, npl - gr.b + 1, npl - gr.a + 1, nmi - gr.jhi, nmi - gr.jlo, r, tol)
                if not emptiness_query(mctx, npl - i + 1, nmi - j, tol):
                    return Decision(True, i, j, inst.axis)
        return Decision(False, axis=inst.axis)


def decide(inst: SplitInstance, r: float, g: int = 16, tol: Tolerance | None = None) -> Decision:
    return Decider(inst, g, tol)(r)


def decide_restricted(S: Sequence, o, r: float, g: int = 16, tol: Tolerance | None = None) -> Decision:
    """Either separating axis admits a split into two radius-r coverable parts."""
    for axis in ("x", "y"):
        d = decide(split_instance(S, o, axis), r, g, tol)
        if d:
            return d
    return Decision(False)
