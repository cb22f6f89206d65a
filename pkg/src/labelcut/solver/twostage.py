"""Shared driver for the two-stage algorithms (path peeling, then a cut).

Stage one is the same sequence of shortest-path removals for every guess of
the optimum; a guess only decides where the sequence stops.  The driver
therefore runs stage one once, in increasing order of the distance
threshold, and evaluates stage two at each distinct stopping point.  The
outcome for every guess is identical to running the algorithm from scratch
with that guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional

from .layers import LayerPartition
from .paths import shortest_st_path, zero_one_distance
from .residual import PathStep, ResidualGraph


class SolverInternalError(RuntimeError):
    """A proven algorithmic invariant failed; indicates a bug, not bad input."""


def icbrt(x: int) -> int:
    """Largest integer r with r**3 <= x, for x >= 0."""
    if x < 2:
        return x
    r = 1 << ((x.bit_length() + 2) // 3)
    while True:
        y = (2 * r + x // (r * r)) // 3
        if y >= r:
            break
        r = y
    while r ** 3 > x:
        r -= 1
    while (r + 1) ** 3 <= x:
        r += 1
    return r


def within_threshold(dist: int, guess: int, n: int, mu: int = 1) -> bool:
    """Exact form of ``dist <= n^(2/3) * mu^(1/3) / guess^(1/3)``."""
    return dist ** 3 * guess <= n * n * mu


def max_stage_one_distance(guess: int, n: int, mu: int = 1) -> int:
    """Largest s-t distance at which stage one keeps peeling paths."""
    return icbrt(n * n * mu // guess)


@dataclass
class StageTwo:
    labels: frozenset
    cut_edges: list[int]
    cut_size: int
    partition: Optional[LayerPartition] = None


@dataclass
class StageRun:
    """Outcome of the two-stage algorithm for one guess of the optimum."""

    guess: int
    threshold: int
    paths: list[list[PathStep]]
    stage1: frozenset
    stage2: frozenset
    cut_edges: list[int] = field(default_factory=list)
    cut_size: int = 0
    partition: Optional[LayerPartition] = None

    @property
    def labels(self) -> frozenset:
        return self.stage1 | self.stage2

    @property
    def paths_found(self) -> int:
        return len(self.paths)


def path_labels(path: list[PathStep]) -> set[Hashable]:
    """Admissible (weight-1) labels used on a path."""
    return {step.label for step in path if step.weight == 1}


def run_two_stage(graph: ResidualGraph, guesses: Iterable[int], n: int, mu: int,
                  stage_two: Callable[[ResidualGraph], StageTwo]) -> dict[int, StageRun]:
    """Run the algorithm for every guess; ``graph`` is consumed (mutated)."""
    by_threshold: dict[int, list[int]] = {}
    for g in guesses:
        if g < 1:
            raise ValueError(f"guess of the optimum must be positive, got {g}")
        by_threshold.setdefault(max_stage_one_distance(g, n, mu), []).append(g)

    s, t = graph.source, graph.sink
    paths: list[list[PathStep]] = []
    stage1: set[Hashable] = set()
    dist_t = zero_one_distance(graph, s).get(t)
    runs: dict[int, StageRun] = {}
    for threshold in sorted(by_threshold):
        while dist_t is not None and dist_t <= threshold:
            if dist_t == 0:
                raise SolverInternalError("zero-length s-t path reached stage one")
            path = shortest_st_path(graph, s, t)
            labels = path_labels(path)
            if labels & stage1:
                raise SolverInternalError("stage-one path reuses a removed label")
            graph.remove_labels(labels)
            stage1 |= labels
            paths.append(path)
            dist_t = zero_one_distance(graph, s).get(t)

        if dist_t is None:
            second = StageTwo(frozenset(), [], 0)
        else:
            second = stage_two(graph)
        for g in by_threshold[threshold]:
            runs[g] = StageRun(g, threshold, list(paths), frozenset(stage1),
                               second.labels, second.cut_edges, second.cut_size,
                               second.partition)
    return runs


def best_run(runs: dict[int, StageRun]) -> StageRun:
    """Fewest labels wins; ties go to the smallest guess."""
    return min(runs.values(), key=lambda r: (len(r.labels), r.guess))
