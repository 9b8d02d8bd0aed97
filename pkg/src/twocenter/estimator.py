"""scikit-learn style front end."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from .geometry import InputError, in_convex_position
from .solver import solve_convex, solve_restricted
from .validation import check_group_width, check_point, check_points


class TwoCenter(ClusterMixin, BaseEstimator):
    """Cover the training points with two congruent disks of least radius.

    Parameters
    ----------
    mode : {"auto", "restricted", "convex"}
        ``restricted`` needs ``o`` and keeps it inside both disks.
        ``convex`` needs points in convex position.  ``auto`` picks
        ``restricted`` when ``o`` is given, else ``convex``.
    o : pair of float or None
    group_width : int
        Rows per group in the decision procedure.
    bisect : bool
        Bisect on floats instead of searching the candidate radii.

    Attributes
    ----------
    radius_ : float
    centers_ : ndarray of shape (2, 2)
    labels_ : ndarray of shape (n_samples,)
    solution_ : TwoCenterSolution
    """

    def __init__(self, mode="auto", o=None, group_width=16, bisect=False):
        self.mode = mode
        self.o = o
        self.group_width = group_width
        self.bisect = bisect

    def _resolve_mode(self, X) -> str:
        if self.mode not in ("auto", "restricted", "convex"):
            raise InputError(f"unknown mode {self.mode!r}")
        if self.mode != "auto":
            return self.mode
        if self.o is not None:
            return "restricted"
        if in_convex_position([tuple(p) for p in X]):
            return "convex"
        raise InputError("mode='auto' needs o unless the points are in convex position")

    def fit(self, X, y=None):
        X = check_points(X)
        g = check_group_width(self.group_width)
        pts = [(float(a), float(b)) for a, b in X]
        mode = self._resolve_mode(X)
        if mode == "restricted":
            if self.o is None:
                raise InputError("restricted mode needs o")
            sol = solve_restricted(pts, check_point(self.o), g=g, bisect=self.bisect)
        else:
            sol = solve_convex(pts, g=g, bisect=self.bisect)
        self.solution_ = sol
        self.radius_ = float(sol.radius)
        self.centers_ = np.array([sol.d1.center, sol.d2.center], dtype=float)
        self.labels_ = np.asarray(sol.partition, dtype=int)
        self.n_features_in_ = 2
        return self

    def predict(self, X):
        """Index of the disk covering each point; the nearer center wins
        when both or neither cover it."""
        check_is_fitted(self, "centers_")
        X = check_points(X)
        d = np.hypot(X[:, None, 0] - self.centers_[None, :, 0], X[:, None, 1] - self.centers_[None, :, 1])
        inside = d <= self.radius_ * (1 + 1e-9)
        only1 = inside[:, 1] & ~inside[:, 0]
        only0 = inside[:, 0] & ~inside[:, 1]
        near = (d[:, 1] < d[:, 0]).astype(int)
        return np.where(only1, 1, np.where(only0, 0, near))

    def score(self, X, y=None):
        """Negative covering radius needed for ``X`` with the fitted centers."""
        check_is_fitted(self, "centers_")
        X = check_points(X)
        d = np.hypot(X[:, None, 0] - self.centers_[None, :, 0], X[:, None, 1] - self.centers_[None, :, 1])
        return -float(d.min(axis=1).max())
