"""Two-stage approximation for label s-t cut on multigraphs with forbidden labels.

Admissible edges have length one and forbidden edges length zero.  Stage one
peels shortest paths (removing only their admissible copy labels) while the
s-t distance is at most ``n^(2/3) mu^(1/3) / OPT^(1/3)``.  Stage two layers
the remaining graph by distance and takes the smallest cut between two
consecutive layers; zero-length edges never cross layers, so that cut holds
admissible labels only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Optional

from ..graph import CopyLabel, LabeledMultiGraph
from .layers import layer_partition
from .paths import zero_one_distance
from .residual import ResidualGraph, edge_weight
from .twostage import (SolverInternalError, StageRun, StageTwo, best_run,
                       run_two_stage)


def assign_weights(mg: LabeledMultiGraph) -> list[tuple[int, int, Hashable, int]]:
    """Expand ``mg`` into explicit ``(tail, head, label, weight)`` edges.

    Each copy of an admissible bundle is listed separately with weight 1;
    forbidden edges get weight 0.
    """
    out = []
    for b in mg.bundles:
        for c in b.copies:
            out.append((b.tail, b.head, c, edge_weight(True)))
    for u, v, label in mg.forbidden_edges:
        out.append((u, v, label, edge_weight(False)))
    return out


def _layer_cut_stage(graph: ResidualGraph) -> StageTwo:
    part = layer_partition(graph)
    cut = part.chosen_cut
    labels: set[Hashable] = set()
    for i in cut:
        if not graph.edges[i].admissible:
            raise SolverInternalError(f"forbidden edge {graph.edges[i]} in layer cut")
        labels.update(graph.surviving_labels(i))
    return StageTwo(frozenset(labels), list(cut), part.chosen_size, part)


@dataclass
class ForbiddenCut:
    """Result of the multigraph solver: chosen copy labels and every guess's run."""

    labels: frozenset[CopyLabel]
    best: StageRun
    runs: dict[int, StageRun]


def forbidden_runs(mg: LabeledMultiGraph,
                   guesses: Optional[Iterable[int]] = None) -> Optional[dict[int, StageRun]]:
    """Per-guess runs, or None when admissible labels cannot separate s and t.

    Guesses default to ``1..|admissible copy labels|``.
    """
    res = ResidualGraph.from_multigraph(mg)
    if zero_one_distance(res, mg.source).get(mg.sink) == 0:
        return None
    if guesses is None:
        guesses = range(1, max(mg.copy_count(), 1) + 1)
    return run_two_stage(res, guesses, mg.n, mg.mu, _layer_cut_stage)


def solve_multigraph_forbidden(mg: LabeledMultiGraph,
                               guess_opt: Optional[int] = None) -> Optional[ForbiddenCut]:
    """Approximate a minimum set of admissible copy labels cutting s from t.

    Returns None ("failure") if a path of forbidden edges joins s and t.
    """
    runs = forbidden_runs(mg, None if guess_opt is None else [guess_opt])
    if runs is None:
        return None
    best = best_run(runs)
    return ForbiddenCut(best.labels, best, runs)
