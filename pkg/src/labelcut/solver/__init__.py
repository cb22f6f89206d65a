from .flow import min_st_cut_unit
from .forbidden import ForbiddenCut, assign_weights, forbidden_runs, solve_multigraph_forbidden
from .layers import LayerPartition, layer_partition
from .paths import shortest_st_path, zero_one_distance
from .residual import PathStep, ResidualGraph
from .twostage import (SolverInternalError, StageRun, max_stage_one_distance,
                       within_threshold)
from .unweighted import solve_unweighted, unweighted_runs
from .weighted import (GuessParams, WeightedGuess, discretize, discretized_weight,
                       guesses_for, lift_solution, solve_weighted, weighted_runs)

__all__ = [
    "ForbiddenCut", "GuessParams", "LayerPartition", "PathStep", "ResidualGraph",
    "SolverInternalError", "StageRun", "WeightedGuess", "assign_weights", "discretize",
    "discretized_weight", "forbidden_runs", "guesses_for", "layer_partition",
    "lift_solution", "max_stage_one_distance", "min_st_cut_unit", "shortest_st_path",
    "solve_multigraph_forbidden", "solve_unweighted", "solve_weighted",
    "unweighted_runs", "weighted_runs", "within_threshold", "zero_one_distance",
]
