"""Labeled graph types and the feasibility check shared by every solver."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional


class CopyLabel(NamedTuple):
    """The ``index``-th copy of admissible label ``base`` in a reduced multigraph."""

    base: int
    index: int

    def __str__(self) -> str:
        return f"{self.base}^({self.index})"


class Bundle(NamedTuple):
    """Parallel copies of one admissible input edge.

    Copy ``i`` carries ``copies[i - 1]``; every bundle with the same origin
    label carries the same copy labels.
    """

    tail: int
    head: int
    origin: int
    copies: tuple[CopyLabel, ...]


class ValidationError(ValueError):
    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


@dataclass(frozen=True)
class LabeledGraph:
    """A simple graph whose edges carry label ids 1..q, each label weighted.

    ``edges`` holds ``(tail, head, label)`` triples with 1-based node ids.
    For undirected graphs tail/head order is irrelevant to connectivity but
    is preserved for round-tripping.
    """

    directed: bool
    n: int
    edges: tuple[tuple[int, int, int], ...]
    weights: dict[int, int]
    source: int
    sink: int

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "weights", dict(sorted(self.weights.items())))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def q(self) -> int:
        return len(self.weights)

    @property
    def labels(self) -> list[int]:
        return list(self.weights)

    def weight_of(self, labels: Iterable[int]) -> int:
        return sum(self.weights[label] for label in labels)

    def is_unit_weight(self) -> bool:
        return all(w == 1 for w in self.weights.values())


@dataclass(frozen=True)
class LabeledMultiGraph:
    """Reduced instance: admissible bundles of copy labels plus forbidden edges.

    ``admissible_groups`` maps each admissible original label to its copy
    labels (its group).  Forbidden edges keep their original label id.
    """

    directed: bool
    n: int
    bundles: tuple[Bundle, ...]
    forbidden_edges: tuple[tuple[int, int, int], ...]
    source: int
    sink: int
    admissible_groups: dict[int, tuple[CopyLabel, ...]]
    mu: int = field(default=0)

    def __post_init__(self):
        if self.mu == 0:
            object.__setattr__(self, "mu", multiplicity(self))

    @property
    def admissible_labels(self) -> set[CopyLabel]:
        return {c for group in self.admissible_groups.values() for c in group}

    @property
    def forbidden_labels(self) -> set[int]:
        return {label for _, _, label in self.forbidden_edges}

    def copy_count(self) -> int:
        """Number of admissible copy labels, i.e. the size of the admissible universe."""
        return sum(len(g) for g in self.admissible_groups.values())


def multiplicity(mg: LabeledMultiGraph) -> int:
    """Largest number of parallel edges between any vertex pair (at least 1)."""
    counts: dict[tuple[int, int], int] = {}

    def key(u: int, v: int) -> tuple[int, int]:
        return (u, v) if mg.directed or u <= v else (v, u)

    for b in mg.bundles:
        k = key(b.tail, b.head)
        counts[k] = counts.get(k, 0) + len(b.copies)
    for u, v, _ in mg.forbidden_edges:
        k = key(u, v)
        counts[k] = counts.get(k, 0) + 1
    return max(counts.values(), default=1)


@dataclass(frozen=True)
class CutSolution:
    """A label subset returned by a solver, with per-stage provenance.

    ``status`` is ``"feasible"`` for a cut, ``"failure"`` when a forbidden-label
    instance cannot be cut, and ``"infeasible"`` for a claimed uncuttable instance.
    """

    labels: frozenset[int]
    total_weight: int
    status: str = "feasible"
    stage1_labels: frozenset[int] = frozenset()
    stage2_labels: frozenset[int] = frozenset()
    paths_found: int = 0
    guess_used: Optional[object] = None
    opt_guess: Optional[int] = None

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def validate(graph: LabeledGraph) -> list[str]:
    """Return every invariant violation of ``graph``; an empty list means valid."""
    problems = []
    n = graph.n
    if n < 1:
        problems.append(f"node count must be positive, got {n}")
    if graph.source == graph.sink:
        problems.append("source equals sink")
    for name, v in (("source", graph.source), ("sink", graph.sink)):
        if not 1 <= v <= n:
            problems.append(f"{name} {v} outside node range 1..{n}")

    q = graph.q
    for label, w in graph.weights.items():
        if not 1 <= label <= q:
            problems.append(f"label {label}: id outside 1..{q}")
        if not isinstance(w, int) or w < 1:
            problems.append(f"label {label}: non-positive weight {w}")

    seen: dict[tuple[int, int], int] = {}
    for i, (u, v, label) in enumerate(graph.edges, start=1):
        where = f"edge {i} ({u}, {v})"
        if not (1 <= u <= n and 1 <= v <= n):
            problems.append(f"{where}: endpoint outside node range 1..{n}")
        if u == v:
            problems.append(f"{where}: self-loop")
        if label not in graph.weights:
            problems.append(f"{where}: unknown label {label}")
        pair = (u, v) if graph.directed or u <= v else (v, u)
        if pair in seen:
            problems.append(f"{where}: parallel to edge {seen[pair]}")
        else:
            seen[pair] = i
    return problems


def check_valid(graph: LabeledGraph) -> None:
    problems = validate(graph)
    if problems:
        raise ValidationError(problems)


def surviving_path(graph: LabeledGraph, removed: Iterable[int]) -> Optional[list[int]]:
    """Node sequence of some s-t path avoiding labels in ``removed``, or None."""
    removed = set(removed)
    adj: dict[int, list[int]] = {}
    for u, v, label in graph.edges:
        if label in removed:
            continue
        adj.setdefault(u, []).append(v)
        if not graph.directed:
            adj.setdefault(v, []).append(u)

    parent = {graph.source: graph.source}
    queue = deque([graph.source])
    while queue:
        u = queue.popleft()
        if u == graph.sink:
            path = [u]
            while u != graph.source:
                u = parent[u]
                path.append(u)
            return path[::-1]
        for v in adj.get(u, ()):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    return None


def is_cut(graph: LabeledGraph, removed: Iterable[int]) -> bool:
    """True iff deleting every edge labeled in ``removed`` disconnects source from sink."""
    return surviving_path(graph, removed) is None
