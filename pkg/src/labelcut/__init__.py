"""Approximation and exact solvers for the minimum label s-t cut problem."""

from .graph import (Bundle, CopyLabel, CutSolution, LabeledGraph, LabeledMultiGraph,
                    ValidationError, check_valid, is_cut, surviving_path, validate)
from .oracle import OracleResult, brute_force_min_label_cut, exact_min_label_cut
from .solver import (GuessParams, discretize, lift_solution, solve_multigraph_forbidden,
                     solve_unweighted, solve_weighted)

__all__ = [
    "Bundle", "CopyLabel", "CutSolution", "GuessParams", "LabeledGraph", "LabeledMultiGraph",
    "OracleResult", "ValidationError", "brute_force_min_label_cut", "check_valid",
    "discretize", "exact_min_label_cut", "is_cut", "lift_solution",
    "solve_multigraph_forbidden", "solve_unweighted", "solve_weighted", "surviving_path",
    "validate",
]
