"""Compiled inner loops for the hull construction.

Only the numeric core lives here: convex hull by monotone chain and the
per-vertex cap intersection.  Callers keep all classification logic.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


@njit(cache=True)
def hull_indices(P):
    """Indices of the strict ccw convex hull of the rows of ``P``.

    Starts at the lexicographically smallest point; duplicates collapse to
    their first occurrence in sorted order.
    """
    n = P.shape[0]
    o1 = np.argsort(P[:, 1], kind="mergesort")
    o2 = np.argsort(P[o1, 0], kind="mergesort")
    order = o1[o2]
    uniq = np.empty(n, dtype=np.int64)
    m = 0
    for t in range(n):
        k = order[t]
        if m > 0 and P[k, 0] == P[uniq[m - 1], 0] and P[k, 1] == P[uniq[m - 1], 1]:
            continue
        uniq[m] = k
        m += 1
    if m <= 2:
        return uniq[:m].copy()
    out = np.empty(2 * m, dtype=np.int64)
    h = 0
    for t in range(m):
        k = uniq[t]
        while h >= 2 and _orient(P[out[h - 2], 0], P[out[h - 2], 1], P[out[h - 1], 0], P[out[h - 1], 1], P[k, 0], P[k, 1]) <= 0:
            h -= 1
        out[h] = k
        h += 1
    low = h + 1
    for t in range(m - 2, -1, -1):
        k = uniq[t]
        while h >= low and _orient(P[out[h - 2], 0], P[out[h - 2], 1], P[out[h - 1], 0], P[out[h - 1], 1], P[k, 0], P[k, 1]) <= 0:
            h -= 1
        out[h] = k
        h += 1
    return out[: h - 1].copy()


@njit(cache=True)
def cap_extents(P, hull, r, band):
    """Per hull vertex: extent, lo, hi of its admissible arc (see hulls)."""
    h = hull.shape[0]
    res = np.empty((h, 3))
    two_r = 2.0 * r
    pi = math.pi
    tau = 2.0 * math.pi
    for a in range(h):
        cx = P[hull[a], 0]
        cy = P[hull[a], 1]
        ref = 0.0
        first = True
        lo = -np.inf
        hi = np.inf
        for b in range(h):
            if b == a:
                continue
            dx = P[hull[b], 0] - cx
            dy = P[hull[b], 1] - cy
            x = math.hypot(dx, dy) / two_r
            if x <= 1.0:
                beta = math.acos(x)
            else:
                beta = -math.sqrt(2.0 * (x - 1.0))
            phi = math.atan2(dy, dx)
            if first:
                ref = phi
                rel = 0.0
                first = False
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
        res[a, 0] = hi - lo
        res[a, 1] = ref + lo
        res[a, 2] = ref + hi
    return res


_MED_SEED = 0x2C3E


@njit(cache=True)
def _circum(ax, ay, bx, by, cx, cy):
    """Circumcircle (cx, cy, r, ok); ok is False for a numerically collinear triple."""
    ux, uy = bx - ax, by - ay
    vx, vy = cx - ax, cy - ay
    d = 2.0 * (ux * vy - uy * vx)
    b2 = ux * ux + uy * uy
    c2 = vx * vx + vy * vy
    scale = max(b2, c2)
    if scale == 0.0 or abs(d) <= 1e-14 * scale:
        return 0.0, 0.0, 0.0, False
    px = ax + (vy * b2 - uy * c2) / d
    py = ay + (ux * c2 - vx * b2) / d
    r = max(math.hypot(px - ax, py - ay), math.hypot(px - bx, py - by), math.hypot(px - cx, py - cy))
    return px, py, r, True


@njit(cache=True)
def _diam(ax, ay, bx, by):
    cx = (ax + bx) / 2.0
    cy = (ay + by) / 2.0
    return cx, cy, max(math.hypot(cx - ax, cy - ay), math.hypot(cx - bx, cy - by))


@njit(cache=True)
def med(P, slack, eps_abs):
    """Smallest enclosing disk of the rows of ``P`` by randomized incremental
    construction with a fixed shuffle.

    Returns ``(cx, cy, r, support)`` where ``support`` holds up to three row
    indices (-1 for unused slots).
    """
    n = P.shape[0]
    sup = np.full(3, -1, dtype=np.int64)
    if n == 0:
        return 0.0, 0.0, 0.0, sup
    np.random.seed(_MED_SEED)
    perm = np.random.permutation(n)
    p0 = perm[0]
    cx, cy, rr = P[p0, 0], P[p0, 1], 0.0
    sup[0] = p0
    for ii in range(1, n):
        i = perm[ii]
        lim = rr * (1.0 + slack) + eps_abs
        if (P[i, 0] - cx) ** 2 + (P[i, 1] - cy) ** 2 <= lim * lim:
            continue
        cx, cy, rr = P[i, 0], P[i, 1], 0.0
        sup[0], sup[1], sup[2] = i, -1, -1
        for jj in range(ii):
            j = perm[jj]
            lim = rr * (1.0 + slack) + eps_abs
            if (P[j, 0] - cx) ** 2 + (P[j, 1] - cy) ** 2 <= lim * lim:
                continue
            cx, cy, rr = _diam(P[i, 0], P[i, 1], P[j, 0], P[j, 1])
            sup[0], sup[1], sup[2] = i, j, -1
            for kk in range(jj):
                k = perm[kk]
                lim = rr * (1.0 + slack) + eps_abs
                if (P[k, 0] - cx) ** 2 + (P[k, 1] - cy) ** 2 <= lim * lim:
                    continue
                qx, qy, qr, ok = _circum(P[i, 0], P[i, 1], P[j, 0], P[j, 1], P[k, 0], P[k, 1])
                if ok:
                    cx, cy, rr = qx, qy, qr
                    sup[0], sup[1], sup[2] = i, j, k
                else:
                    # numerically collinear: the farthest pair spans the third
                    dij = math.hypot(P[i, 0] - P[j, 0], P[i, 1] - P[j, 1])
                    dik = math.hypot(P[i, 0] - P[k, 0], P[i, 1] - P[k, 1])
                    djk = math.hypot(P[j, 0] - P[k, 0], P[j, 1] - P[k, 1])
                    a, b = i, j
                    if dik > dij and dik >= djk:
                        a, b = i, k
                    elif djk > dij and djk > dik:
                        a, b = j, k
                    cx, cy, rr = _diam(P[a, 0], P[a, 1], P[b, 0], P[b, 1])
                    sup[0], sup[1], sup[2] = a, b, -1
    return cx, cy, rr, sup


# ---------------------------------------------------------------------------
# segment tree of convex hulls: the enclosing disk of a union of ranges only
# depends on the hull vertices of the ranges' canonical nodes


@njit(cache=True)
def hull_tree(P):
    """Flat segment tree over the rows of ``P``.

    Node ``v`` (1-based heap layout, leaves at ``size + k``) stores the strict
    convex hull of its range in ``buf[start[v] : start[v] + cnt[v]]``.
    """
    n = P.shape[0]
    size = 1
    levels = 1
    while size < n:
        size *= 2
        levels += 1
    buf = np.empty((max(n, 1) * levels, 2))
    start = np.zeros(2 * size, dtype=np.int64)
    cnt = np.zeros(2 * size, dtype=np.int64)
    pos = 0
    for k in range(n):
        v = size + k
        start[v] = pos
        cnt[v] = 1
        buf[pos, 0] = P[k, 0]
        buf[pos, 1] = P[k, 1]
        pos += 1
    for v in range(size - 1, 0, -1):
        a, b = 2 * v, 2 * v + 1
        m = cnt[a] + cnt[b]
        start[v] = pos
        if m == 0:
            continue
        tmp = np.empty((m, 2))
        tmp[: cnt[a]] = buf[start[a] : start[a] + cnt[a]]
        tmp[cnt[a] :] = buf[start[b] : start[b] + cnt[b]]
        h = hull_indices(tmp)
        for t in range(h.shape[0]):
            buf[pos, 0] = tmp[h[t], 0]
            buf[pos, 1] = tmp[h[t], 1]
            pos += 1
        cnt[v] = h.shape[0]
    return buf[:pos].copy(), start, cnt, size


@njit(cache=True)
def _gather(buf, start, cnt, size, lo, hi, out, m):
    # 0-based half-open [lo, hi); with out=None only counts
    lo += size
    hi += size
    while lo < hi:
        if lo & 1:
            m = _take(buf, start[lo], cnt[lo], out, m)
            lo += 1
        if hi & 1:
            hi -= 1
            m = _take(buf, start[hi], cnt[hi], out, m)
        lo >>= 1
        hi >>= 1
    return m


@njit(cache=True)
def _take(buf, s, c, out, m):
    if out is not None:
        out[m : m + c] = buf[s : s + c]
    return m + c


@njit(cache=True)
def union_med_radius(tp, lo1, hi1, tm, lo2, hi2, slack):
    """Enclosing radius of rows ``[lo1, hi1)`` of one tree plus rows
    ``[lo2, hi2)`` of the other."""
    bp, sp, cp, zp = tp
    bm, sm, cm, zm = tm
    m = _gather(bp, sp, cp, zp, lo1, hi1, None, 0)
    m = _gather(bm, sm, cm, zm, lo2, hi2, None, m)
    out = np.empty((m, 2))
    k = _gather(bp, sp, cp, zp, lo1, hi1, out, 0)
    _gather(bm, sm, cm, zm, lo2, hi2, out, k)
    return med(out, slack, 0.0)[2]


# ---------------------------------------------------------------------------
# whole range tree of intersection hulls in one pass

KIND_EMPTY = 0
KIND_POINT = 1
KIND_REGION = 2


@njit(cache=True)
def chain_tree(P, r, band):
    """Range tree over the rows of ``P`` (midpoint split, post-order ids).

    Per node: ``lo, hi`` (1-based inclusive), children, kind, and either the
    kept arc-center row indices (region) or the tangency data (point: center
    row and the angle of the tangency point about it).  The classification
    mirrors ``hulls.intersection_hull``.
    """
    n = P.shape[0]
    nn = 2 * n - 1
    lo = np.empty(nn, dtype=np.int64)
    hi = np.empty(nn, dtype=np.int64)
    left = np.full(nn, -1, dtype=np.int64)
    right = np.full(nn, -1, dtype=np.int64)
    kind = np.empty(nn, dtype=np.int64)
    cstart = np.zeros(nn, dtype=np.int64)
    ccnt = np.zeros(nn, dtype=np.int64)
    pang = np.zeros(nn)
    levels = 1
    s = 1
    while s < n:
        s *= 2
        levels += 1
    cbuf = np.empty(n * (levels + 1), dtype=np.int64)
    pos = 0
    # explicit post-order traversal
    st_lo = np.empty(2 * levels + 4, dtype=np.int64)
    st_hi = np.empty(2 * levels + 4, dtype=np.int64)
    st_state = np.empty(2 * levels + 4, dtype=np.int64)
    done = np.empty(levels + 4, dtype=np.int64)
    sp = 0
    dp = 0
    nid = 0
    st_lo[0], st_hi[0], st_state[0] = 1, n, 0
    sp = 1
    while sp > 0:
        sp -= 1
        a, b, state = st_lo[sp], st_hi[sp], st_state[sp]
        if a == b:
            lo[nid], hi[nid], kind[nid] = a, b, KIND_REGION
            cstart[nid], ccnt[nid] = pos, 1
            cbuf[pos] = a - 1
            pos += 1
            done[dp] = nid
            dp += 1
            nid += 1
            continue
        m = (a + b) // 2
        if state == 0:
            st_lo[sp], st_hi[sp], st_state[sp] = a, b, 1
            st_lo[sp + 1], st_hi[sp + 1], st_state[sp + 1] = m + 1, b, 0
            st_lo[sp + 2], st_hi[sp + 2], st_state[sp + 2] = a, m, 0
            sp += 3
            continue
        rc = done[dp - 1]
        lc = done[dp - 2]
        dp -= 2
        lo[nid], hi[nid], left[nid], right[nid] = a, b, lc, rc
        if kind[lc] == KIND_EMPTY or kind[rc] == KIND_EMPTY:
            kind[nid] = KIND_EMPTY
        else:
            # generators: kept centers of region children, whole range otherwise
            na = ccnt[lc] if kind[lc] == KIND_REGION else hi[lc] - lo[lc] + 1
            nb = ccnt[rc] if kind[rc] == KIND_REGION else hi[rc] - lo[rc] + 1
            idx = np.empty(na + nb, dtype=np.int64)
            if kind[lc] == KIND_REGION:
                idx[:na] = cbuf[cstart[lc] : cstart[lc] + na]
            else:
                for t in range(na):
                    idx[t] = lo[lc] - 1 + t
            if kind[rc] == KIND_REGION:
                idx[na:] = cbuf[cstart[rc] : cstart[rc] + nb]
            else:
                for t in range(nb):
                    idx[na + t] = lo[rc] - 1 + t
            X = P[idx]
            hidx = hull_indices(X)
            if hidx.shape[0] == 1:
                kind[nid] = KIND_REGION
                cstart[nid], ccnt[nid] = pos, 1
                cbuf[pos] = idx[hidx[0]]
                pos += 1
            else:
                caps = cap_extents(X, hidx, r, band)
                best = 0
                for t in range(1, hidx.shape[0]):
                    if caps[t, 0] > caps[best, 0]:
                        best = t
                ext = caps[best, 0]
                kept = 0
                for t in range(hidx.shape[0]):
                    if caps[t, 0] > band:
                        kept += 1
                if ext < -band:
                    kind[nid] = KIND_EMPTY
                elif ext <= band or kept < 2:
                    kind[nid] = KIND_POINT
                    cstart[nid], ccnt[nid] = pos, 1
                    cbuf[pos] = idx[hidx[best]]
                    pos += 1
                    pang[nid] = (caps[best, 1] + caps[best, 2]) / 2.0
                else:
                    kind[nid] = KIND_REGION
                    cstart[nid] = pos
                    for t in range(hidx.shape[0]):
                        if caps[t, 0] > band:
                            cbuf[pos] = idx[hidx[t]]
                            pos += 1
                    ccnt[nid] = kept
        done[dp] = nid
        dp += 1
        nid += 1
    return lo, hi, left, right, kind, cstart, ccnt, cbuf[:pos].copy(), pang
