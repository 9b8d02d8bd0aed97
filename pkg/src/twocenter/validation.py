"""Input validation helpers for the public entry points."""

from __future__ import annotations

import math

import numpy as np
from sklearn.utils import check_array

from .geometry import InputError, Point


def check_points(X, min_samples: int = 1) -> np.ndarray:
    """Finite float array of shape (n, 2)."""
    try:
        arr = check_array(X, dtype=np.float64, ensure_all_finite=True, ensure_min_samples=min_samples)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if arr.shape[1] != 2:
        raise InputError(f"expected planar points with 2 columns, got {arr.shape[1]}")
    return arr


def check_point(p, name: str = "o") -> Point:
    try:
        x, y = (float(v) for v in p)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{name} must be a pair of numbers") from exc
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InputError(f"{name} must be finite")
    return Point(x, y)


def check_radius(r) -> float:
    try:
        r = float(r)
    except (TypeError, ValueError) as exc:
        raise InputError("radius must be a number") from exc
    if not math.isfinite(r) or r <= 0:
        raise InputError(f"radius must be positive and finite, got {r!r}")
    return r


def check_group_width(g) -> int:
    if isinstance(g, bool) or int(g) != g or g < 1:
        raise InputError(f"group width must be a positive integer, got {g!r}")
    return int(g)
