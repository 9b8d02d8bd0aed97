"""Instance files, solution records and seeded generators.

Instance file::

    planar2center v1
    o: 0.1 -0.2        (optional, any position after the header)
    1.5 2
    -3 0.25

Solution records are JSON objects with a fixed key order; floats are written
with 17 significant digits so they round-trip exactly.
"""

from __future__ import annotations

import json
import math
from typing import NamedTuple, Sequence

import numpy as np

from .geometry import InputError, Point, as_point

HEADER = "planar2center v1"


class Instance(NamedTuple):
    points: list
    o: Point | None = None


def parse_instance(text: str, source: str = "<input>") -> Instance:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise InputError(f"{source}:1: expected header {HEADER!r}")
    pts: list[Point] = []
    o = None
    for ln, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("o:"):
            if o is not None:
                raise InputError(f"{source}:{ln}: duplicate o directive")
            o = _parse_xy(line[2:].split(), source, ln)
            continue
        pts.append(_parse_xy(line.split(), source, ln))
    return Instance(pts, o)


def _parse_xy(fields, source, ln) -> Point:
    if len(fields) != 2:
        raise InputError(f"{source}:{ln}: expected two numbers, got {' '.join(fields)!r}")
    try:
        return as_point((float(fields[0]), float(fields[1])))
    except (ValueError, InputError) as exc:
        raise InputError(f"{source}:{ln}: malformed point {' '.join(fields)!r}") from exc


def read_instance(path: str) -> Instance:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_instance(text, path)


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def format_instance(points: Sequence, o=None) -> str:
    out = [HEADER]
    if o is not None:
        out.append(f"o: {fmt(o[0])} {fmt(o[1])}")
    out.extend(f"{fmt(p[0])} {fmt(p[1])}" for p in points)
    return "\n".join(out) + "\n"


def parse_xy_flag(text: str) -> Point:
    """``"X,Y"`` as given to ``--o``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"expected X,Y but got {text!r}")
    try:
        return as_point((float(parts[0]), float(parts[1])))
    except ValueError as exc:
        raise InputError(f"expected X,Y but got {text!r}") from exc


# ---------------------------------------------------------------------------
# JSON with fixed float formatting


def to_json(obj, indent: int = 2, _level: int = 0) -> str:
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {to_json(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(to_json(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + to_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        if not math.isfinite(obj):
            raise ValueError("non-finite number in record")
        return fmt(obj)
    return json.dumps(str(obj))


def solution_record(sol, points: Sequence, o=None, mode: str = "", timing: float | None = None) -> dict:
    rec = {
        "format": "planar2center-solution v1",
        "mode": mode,
        "n": len(points),
        "radius": float(sol.radius),
        "disks": [
            {"center": [float(sol.d1.center[0]), float(sol.d1.center[1])], "radius": float(sol.d1.radius)},
            {"center": [float(sol.d2.center[0]), float(sol.d2.center[1])], "radius": float(sol.d2.radius)},
        ],
        "partition": [int(x) for x in sol.partition],
    }
    if o is not None:
        rec["o"] = [float(o[0]), float(o[1])]
    meta = sol.meta or {}
    rec["axis"] = meta.get("axis", meta.get("case", ""))
    for key in ("i", "j", "o_enlarged", "probes"):
        if key in meta:
            rec[key] = meta[key]
    if timing is not None:
        rec["seconds"] = float(timing)
    return rec


def check_record(rec: dict, points: Sequence, rel: float = 1e-9) -> list[str]:
    """Problems found when re-verifying a parsed solution record."""
    errs = []
    if rec.get("n") != len(points):
        errs.append("point count mismatch")
        return errs
    disks = rec["disks"]
    for k, (p, lab) in enumerate(zip(points, rec["partition"])):
        d = disks[lab]
        c, R = d["center"], d["radius"]
        if math.hypot(p[0] - c[0], p[1] - c[1]) > R * (1 + rel) + 1e-12:
            errs.append(f"point {k} outside its disk")
    if "o" in rec and not rec.get("o_enlarged", False):
        o = rec["o"]
        for d in disks:
            c, R = d["center"], d["radius"]
            if math.hypot(o[0] - c[0], o[1] - c[1]) > R * (1 + 1e-7) + 1e-12:
                errs.append("o outside a disk")
    return errs


# ---------------------------------------------------------------------------
# generators (all randomness from one seed via numpy's PCG64)

KINDS = ("uniform", "convex", "two-cluster")


def generate(kind: str, n: int, seed: int = 0, overlap: float = 0.5) -> Instance:
    """Seeded instance.

    ``uniform``: the square [-1, 1]^2.  ``convex``: points on a randomly
    stretched and rotated ellipse (so always in convex position).
    ``two-cluster``: two unit disks whose centers are ``2 * (1 - overlap)``
    apart, with ``o`` at the midpoint of the centers.
    """
    if n < 1:
        raise InputError("n must be at least 1")
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    rng = np.random.default_rng(seed)
    if kind == "uniform":
        P = rng.uniform(-1.0, 1.0, size=(n, 2))
        return Instance([Point(float(x), float(y)) for x, y in P])
    if kind == "convex":
        t = np.sort(rng.uniform(0.0, 2.0 * math.pi, size=n))
        a, b = rng.uniform(0.5, 1.5, size=2)
        phi = rng.uniform(0.0, math.pi)
        x, y = a * np.cos(t), b * np.sin(t)
        c, s = math.cos(phi), math.sin(phi)
        return Instance([Point(float(c * u - s * v), float(s * u + c * v)) for u, v in zip(x, y)])
    if not 0.0 <= overlap <= 1.0:
        raise InputError("overlap must lie in [0, 1]")
    half = 1.0 - overlap
    n1 = (n + 1) // 2
    ang = rng.uniform(0.0, 2.0 * math.pi, size=n)
    rad = np.sqrt(rng.uniform(0.0, 1.0, size=n))
    cx = np.where(np.arange(n) < n1, -half, half)
    P = np.column_stack((cx + rad * np.cos(ang), rad * np.sin(ang)))
    return Instance([Point(float(x), float(y)) for x, y in P], Point(0.0, 0.0))
