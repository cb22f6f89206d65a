"""Two-stage approximation for unweighted label s-t cut on simple graphs.

Stage one peels shortest s-t paths (removing every label on them) while the
distance is at most ``n^(2/3) / OPT^(1/3)``; stage two adds the labels of a
minimum edge cut of what remains.  Every guess ``1..q`` of the optimum is
tried and the smallest label set kept.
"""

from __future__ import annotations

from typing import Iterable, Optional

from ..graph import CutSolution, LabeledGraph
from .flow import min_st_cut_unit
from .residual import ResidualGraph
from .twostage import StageRun, StageTwo, best_run, run_two_stage


def _min_cut_stage(graph: ResidualGraph) -> StageTwo:
    alive = [i for i in range(len(graph.edges)) if graph.is_alive(i)]
    arcs = [(graph.edges[i].tail, graph.edges[i].head) for i in alive]
    cut = [alive[k] for k in min_st_cut_unit(graph.n, arcs, graph.source,
                                             graph.sink, graph.directed)]
    labels = frozenset(graph.edges[i].origin for i in cut)
    return StageTwo(labels, cut, len(cut))


def unweighted_runs(graph: LabeledGraph,
                    guesses: Optional[Iterable[int]] = None) -> dict[int, StageRun]:
    """Per-guess runs; guesses default to ``1..q``."""
    if guesses is None:
        guesses = range(1, max(graph.q, 1) + 1)
    res = ResidualGraph.from_graph(graph)
    return run_two_stage(res, guesses, graph.n, 1, _min_cut_stage)


def solve_unweighted(graph: LabeledGraph, guess_opt: Optional[int] = None) -> CutSolution:
    """Approximate a minimum-cardinality label cut.

    Label weights are ignored while optimizing (every label counts one) but
    ``total_weight`` reports the true weight of the returned labels.
    """
    guesses = None if guess_opt is None else [guess_opt]
    run = best_run(unweighted_runs(graph, guesses))
    labels = run.labels
    return CutSolution(
        labels=labels,
        total_weight=graph.weight_of(labels),
        stage1_labels=run.stage1,
        stage2_labels=run.stage2,
        paths_found=run.paths_found,
        opt_guess=run.guess,
    )
