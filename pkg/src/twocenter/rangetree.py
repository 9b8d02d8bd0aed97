"""Balanced range tree over an angularly ordered point sequence.

Every node stores the chain of ``I_r`` over its contiguous range.  Ranges are
1-based and inclusive throughout this module.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .geometry import ContractError, InputError, Point, Tolerance
from .hulls import (
    ANGLE_BAND,
    EMPTY,
    POINT,
    ArcChain,
    BoundaryPart,
    SeparatedResult,
    chain_from_centers,
    clip_boundary,
    empty_chain,
    piece_centers,
    plane_chain,
    point_chain,
    separated_intersect,
)


class Node(NamedTuple):
    id: int
    lo: int
    hi: int
    left: int  # child ids, -1 at leaves
    right: int
    chain: ArcChain


class CanonicalTree(NamedTuple):
    order: tuple
    nodes: tuple
    r: float
    root: int

    @property
    def n(self) -> int:
        return len(self.order)

    def points(self, i: int, j: int) -> list[Point]:
        return list(self.order[i - 1 : j])


class _Nodes:
    """Node table of a compiled tree; chains are materialized on first use."""

    __slots__ = ("order", "r", "arr", "_cache", "ranges")

    def __init__(self, order, r, arr):
        self.order, self.r, self.arr = order, r, arr
        self._cache: dict = {}
        self.ranges: dict = {}  # memo of range_intersection results

    def __len__(self) -> int:
        return len(self.arr[0])

    def __iter__(self):
        return (self[k] for k in range(len(self)))

    def __getitem__(self, nid: int) -> Node:
        nd = self._cache.get(nid)
        if nd is None:
            lo, hi, left, right, kind, cstart, ccnt, cbuf, pang = self.arr
            k, s0, r = kind[nid], cstart[nid], self.r
            if k == _kernels.KIND_EMPTY:
                chain = empty_chain(r)
            elif k == _kernels.KIND_POINT:
                c = self.order[cbuf[s0]]
                t = pang[nid]
                chain = point_chain((c[0] + r * math.cos(t), c[1] + r * math.sin(t)), c, r)
            else:
                chain = chain_from_centers([self.order[q] for q in cbuf[s0 : s0 + ccnt[nid]]], r)
            nd = Node(int(nid), int(lo[nid]), int(hi[nid]), int(left[nid]), int(right[nid]), chain)
            self._cache[nid] = nd
        return nd


def build_tree(pts: Sequence, r: float, tol: Tolerance | None = None) -> CanonicalTree:
    """Bottom-up build; each internal chain is the intersection hull of its
    children's arc centers (of the children's whole ranges when a child
    degenerated to a point)."""
    order = tuple(Point(float(p[0]), float(p[1])) for p in pts)
    if not order:
        return CanonicalTree(order, (), r, -1)
    if not r > 0:
        raise InputError("radius must be positive")
    band = ANGLE_BAND if tol is None else max(ANGLE_BAND, 10.0 * tol.eps_abs / r)
    arr = _kernels.chain_tree(np.array(order, dtype=np.float64), float(r), band)
    nodes = _Nodes(order, r, arr)
    return CanonicalTree(order, nodes, r, len(nodes) - 1)


def canonical_nodes(t: CanonicalTree, i: int, j: int) -> list[Node]:
    """Maximal tree nodes tiling ``[i, j]``, left to right."""
    if i > j or t.root < 0:
        return []
    if i < 1 or j > t.n:
        raise ContractError(f"range [{i},{j}] outside 1..{t.n}")
    out: list[Node] = []
    stack = [t.root]
    while stack:
        nd = t.nodes[stack.pop()]
        if nd.hi < i or nd.lo > j:
            continue
        if i <= nd.lo and nd.hi <= j:
            out.append(nd)
            continue
        stack.append(nd.right)
        stack.append(nd.left)
    return out


def tree_depth(t: CanonicalTree) -> int:
    return math.ceil(math.log2(t.n)) if t.n > 1 else 0


def _point_result(chains: list[ArcChain], r: float) -> ArcChain:
    """Intersection of a family in which some member is a single point."""
    k = next(k for k, c in enumerate(chains) if c.kind == POINT)
    p = chains[k].vertices[0]
    band = 1e-9 * r
    if all(c.contains(p, band) for c in chains):
        return point_chain(p, chains[k].centers[0], r)
    return empty_chain(r)


def intersect_family(chains: list[ArcChain], r: float, tol: Tolerance | None = None, owners=None) -> ArcChain:
    """Chain of the intersection of line-separated, angularly ordered chains.

    Pairwise two-chain queries, one clipping pass per member (left and right
    subfamilies), then the surviving pieces are linked end to start.
    """
    chains = [c for c in chains if c.kind != "plane"]
    if not chains:
        return plane_chain(r)
    if len(chains) == 1:
        return chains[0]
    if any(c.kind == EMPTY for c in chains):
        return empty_chain(r)
    if any(c.kind == POINT for c in chains):
        return _point_result(chains, r)
    k = len(chains)
    parts: list[list[BoundaryPart | None]] = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            res = separated_intersect(chains[a], chains[b], (a, b), tol)
            if res.relation == "disjoint":
                return empty_chain(r)
            parts[a][b] = res.f_ab
            parts[b][a] = res.f_ba
    pieces: list[tuple[int, BoundaryPart]] = []
    for a in range(k):
        fam = [parts[a][b] for b in range(k) if b != a]
        for comp in clip_boundary(chains[a], fam, split=a):
            if comp.full:
                return chains[a]
            pieces.append((a, comp))
    if not pieces:
        return empty_chain(r)
    solid = [(a, p) for a, p in pieces if not p.is_point]
    if not solid:
        a, p = pieces[0]
        return point_chain(p.s, chains[a].centers[p.s_arc], r)
    return _link(chains, solid, r)


def _link(chains: list[ArcChain], pieces: list[tuple[int, BoundaryPart]], r: float) -> ArcChain:
    """Concatenate boundary pieces whose ends meet into one chain."""
    gap_tol = 1e-6 * r
    left = list(range(1, len(pieces)))
    seq = [0]
    while left:
        e = pieces[seq[-1]][1].e
        nxt = min(left, key=lambda q: math.hypot(pieces[q][1].s[0] - e[0], pieces[q][1].s[1] - e[1]))
        s = pieces[nxt][1].s
        if math.hypot(s[0] - e[0], s[1] - e[1]) > gap_tol:
            raise ContractError("boundary pieces do not link into a closed chain")
        seq.append(nxt)
        left.remove(nxt)
    centers: list[Point] = []
    for q in seq:
        a, part = pieces[q]
        for c in piece_centers(chains[a], part):
            if not centers or centers[-1] != c:
                centers.append(c)
    while len(centers) > 1 and centers[0] == centers[-1]:
        centers.pop()
    return chain_from_centers(centers, r)


def range_intersection(t: CanonicalTree, i: int, j: int, tol: Tolerance | None = None) -> ArcChain:
    """Chain of ``I_r(S[i..j])`` assembled from the canonical nodes."""
    memo = getattr(t.nodes, "ranges", None)
    key = (i, j, tol)
    if memo is not None and key in memo:
        return memo[key]
    nodes = canonical_nodes(t, i, j)
    out = intersect_family([nd.chain for nd in nodes], t.r, tol)
    if memo is not None:
        memo[key] = out
    return out


class DStructure:
    """Per-node two-chain results of a tree against one fixed chain ``R``.

    With ``lazy=True`` a node's entry is computed on first access; entries
    are independent of each other, so the stored values do not depend on
    access order.
    """

    __slots__ = ("base", "R", "owner", "tol", "_res")

    def __init__(self, base: CanonicalTree, R: ArcChain, owner="R", tol=None, lazy: bool = False):
        self.base, self.R, self.owner, self.tol = base, R, owner, tol
        self._res: dict = {}
        if not lazy:
            for nd in base.nodes:
                self.part(nd.id)

    def part(self, node_id: int) -> SeparatedResult:
        res = self._res.get(node_id)
        if res is None:
            nd = self.base.nodes[node_id]
            res = separated_intersect(nd.chain, self.R, (nd.id, self.owner), self.tol)
            self._res[node_id] = res
        return res

    @property
    def results(self) -> tuple:
        return tuple(self.part(nd.id) for nd in self.base.nodes)


def build_d_structure(
    t: CanonicalTree, R_chain: ArcChain, tol: Tolerance | None = None, owner_r="R", lazy: bool = False
) -> DStructure:
    return DStructure(t, R_chain, owner_r, tol, lazy)
