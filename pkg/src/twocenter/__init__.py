"""Restricted and convex-position planar two-center solvers."""

from .decision import Decider, Decision, decide, decide_restricted, split_instance
from .estimator import TwoCenter
from .geometry import ContractError, Disk, InputError, Point, Tolerance, smallest_enclosing_disk
from .hulls import ArcChain, circular_hull, intersection_hull
from .oracle import brute_contiguous, brute_emptiness, brute_restricted, brute_two_center
from .rangetree import build_tree, canonical_nodes, range_intersection
from .solver import TwoCenterSolution, critical_radii, solve_convex, solve_restricted

__version__ = "0.1.0"

__all__ = [
    "ArcChain",
    "ContractError",
    "Decider",
    "Decision",
    "Disk",
    "InputError",
    "Point",
    "Tolerance",
    "TwoCenter",
    "TwoCenterSolution",
    "brute_contiguous",
    "brute_emptiness",
    "brute_restricted",
    "brute_two_center",
    "build_tree",
    "canonical_nodes",
    "circular_hull",
    "critical_radii",
    "decide",
    "decide_restricted",
    "intersection_hull",
    "range_intersection",
    "smallest_enclosing_disk",
    "solve_convex",
    "solve_restricted",
    "split_instance",
]
