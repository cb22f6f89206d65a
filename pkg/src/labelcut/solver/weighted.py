"""Weighted label s-t cut by discretizing weights into edge multiplicities.

For a guess ``(o_size, weight_cap)`` of the optimum's label count and its
heaviest label, labels heavier than the cap become forbidden and each light
label ``l`` becomes ``ceil(w_l * o_size / weight_cap)`` copy labels, one per
parallel copy of each of its edges.  The multigraph solver runs on the
result and a label is kept only if its whole copy group was selected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from ..graph import Bundle, CopyLabel, CutSolution, LabeledGraph, LabeledMultiGraph, is_cut
from .forbidden import ForbiddenCut, solve_multigraph_forbidden
from .twostage import SolverInternalError


@dataclass(frozen=True, order=True)
class GuessParams:
    """Guessed size of an optimal label set and its maximum label weight."""

    o_size: int
    weight_cap: int


def discretized_weight(weight: int, o_size: int, weight_cap: int) -> int:
    return -(-weight * o_size // weight_cap)


def guesses_for(graph: LabeledGraph) -> list[GuessParams]:
    """Every ``(|O|, W)`` pair: sizes ``1..q`` times the distinct label weights."""
    caps = sorted(set(graph.weights.values()))
    return [GuessParams(o, w) for w in caps for o in range(1, graph.q + 1)]


def discretize(graph: LabeledGraph,
               guess: GuessParams) -> tuple[LabeledMultiGraph, dict[int, tuple[CopyLabel, ...]]]:
    """Build the reduced multigraph for one guess; also return the copy groups."""
    groups: dict[int, tuple[CopyLabel, ...]] = {}
    for label, w in graph.weights.items():
        if w <= guess.weight_cap:
            k = discretized_weight(w, guess.o_size, guess.weight_cap)
            groups[label] = tuple(CopyLabel(label, i) for i in range(1, k + 1))
    bundles = []
    forbidden = []
    for u, v, label in graph.edges:
        if label in groups:
            bundles.append(Bundle(u, v, label, groups[label]))
        else:
            forbidden.append((u, v, label))
    mg = LabeledMultiGraph(graph.directed, graph.n, tuple(bundles), tuple(forbidden),
                           graph.source, graph.sink, groups)
    return mg, groups


def lift_solution(copy_labels: Iterable[CopyLabel],
                  groups: dict[int, tuple[CopyLabel, ...]]) -> frozenset[int]:
    """Original labels whose entire copy group lies in ``copy_labels``."""
    chosen = set(copy_labels)
    bases = {c.base for c in chosen}
    return frozenset(b for b in bases if chosen.issuperset(groups[b]))


@dataclass
class WeightedGuess:
    """One guess of the weighted solver; ``result`` is None on failure."""

    guess: GuessParams
    multigraph: LabeledMultiGraph
    result: Optional[ForbiddenCut]
    lifted: Optional[frozenset[int]]
    weight: Optional[int]


def weighted_runs(graph: LabeledGraph) -> Iterator[WeightedGuess]:
    """Run the multigraph solver for every guess, checking each lifted label set.

    Guesses whose discretized weights coincide with an earlier guess reuse
    its result.
    """
    cache: dict[tuple, Optional[ForbiddenCut]] = {}
    for guess in guesses_for(graph):
        mg, groups = discretize(graph, guess)
        key = tuple((label, len(g)) for label, g in groups.items())
        if key not in cache:
            cache[key] = solve_multigraph_forbidden(mg)
        result = cache[key]
        if result is None:
            yield WeightedGuess(guess, mg, None, None, None)
            continue
        lifted = lift_solution(result.labels, groups)
        if not is_cut(graph, lifted):
            raise SolverInternalError(f"lifted labels {sorted(lifted)} for {guess} do not cut s-t")
        yield WeightedGuess(guess, mg, result, lifted, graph.weight_of(lifted))


def solution_key(weight: int, labels: Iterable[int]) -> tuple:
    ordered = sorted(labels)
    return (weight, len(ordered), ordered)


def solve_weighted(graph: LabeledGraph) -> CutSolution:
    """Approximate a minimum-weight label cut, trying every ``(|O|, W)`` guess.

    The lightest lifted solution wins; ties go to fewer labels, then the
    lexicographically smaller label list, then the earlier guess.
    """
    best: Optional[WeightedGuess] = None
    for run in weighted_runs(graph):
        if run.result is None:
            continue
        if best is None or solution_key(run.weight, run.lifted) < solution_key(best.weight, best.lifted):
            best = run
    if best is None:
        # the cap equal to the heaviest weight makes every label admissible
        raise SolverInternalError("no guess produced a solution")

    stage = best.result.best
    a1 = {c.base for c in stage.stage1}
    a2 = {c.base for c in stage.stage2}
    return CutSolution(
        labels=best.lifted,
        total_weight=best.weight,
        stage1_labels=frozenset(best.lifted & a1),
        stage2_labels=frozenset(best.lifted & a2),
        paths_found=stage.paths_found,
        guess_used=best.guess,
        opt_guess=stage.guess,
    )
