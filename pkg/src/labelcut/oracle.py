"""Exact minimum label s-t cut by branch and bound.

Any cut must remove at least one free label from every s-t path.  The search
repeatedly finds a path with the fewest free labels and branches on which of
them is removed first; the labels before it on that path become locked in
(kept) for the rest of that branch.  A branch dies when locked edges alone
join s and t, or when its weight cannot beat the incumbent.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Optional, Sequence, Union

from .graph import LabeledGraph, LabeledMultiGraph

DEFAULT_CAP = 22


class OracleLimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    optimum_labels: frozenset
    optimum_weight: int
    nodes_explored: int


class _Instance:
    """Flat edge list over hashable labels; ``fixed`` labels can never be removed."""

    def __init__(self, n, directed, source, sink, edges, weights, fixed=()):
        self.n = n
        self.source = source
        self.sink = sink
        self.weights: dict[Hashable, int] = weights
        self.fixed = frozenset(fixed)
        self.adj: list[list[tuple[int, Hashable]]] = [[] for _ in range(n + 1)]
        for u, v, label in edges:
            self.adj[u].append((v, label))
            if not directed:
                self.adj[v].append((u, label))

    def cheapest_path(self, removed: set, locked: set) -> Optional[list[Hashable]]:
        """Free labels on an s-t path minimising the number of free edges.

        Returns None if no path survives ``removed``; an empty list means the
        locked and fixed labels alone connect s and t.
        """
        keep = self.fixed | locked
        best = {self.source: 0}
        back: dict[int, tuple[int, Hashable]] = {}
        queue = deque([self.source])
        seen = set()
        while queue:
            u = queue.popleft()
            if u in seen:
                continue
            seen.add(u)
            for v, label in self.adj[u]:
                if label in removed:
                    continue
                cost = 0 if label in keep else 1
                d = best[u] + cost
                if v not in best or d < best[v]:
                    best[v] = d
                    back[v] = (u, label)
                    if cost:
                        queue.append(v)
                    else:
                        queue.appendleft(v)
        if self.sink not in best:
            return None
        labels = []
        v = self.sink
        while v != self.source:
            v, label = back[v]
            if label not in keep and label not in labels:
                labels.append(label)
        return labels


def _sort_key(label):
    return label if isinstance(label, tuple) else (label,)


def _branch_and_bound(inst: _Instance) -> tuple[Optional[frozenset], int, int]:
    free_weights = [w for label, w in inst.weights.items() if label not in inst.fixed]
    lightest = min(free_weights, default=0)
    best: list = [None, None]  # (key, labels)
    explored = 0

    def key(labels, weight):
        return (weight, len(labels), sorted(labels, key=_sort_key))

    def search(removed: set, locked: set, weight: int):
        nonlocal explored
        explored += 1
        path = inst.cheapest_path(removed, locked)
        if path is None:
            k = key(removed, weight)
            if best[0] is None or k < best[0]:
                best[0], best[1] = k, frozenset(removed)
            return
        if not path:
            return
        if best[0] is not None and weight + lightest > best[0][0]:
            return
        # cheaper labels first so good incumbents appear early
        order = sorted(path, key=lambda lb: (inst.weights[lb], _sort_key(lb)))
        newly_locked = []
        for label in order:
            w = weight + inst.weights[label]
            if best[0] is None or w <= best[0][0]:
                removed.add(label)
                search(removed, locked, w)
                removed.discard(label)
            locked.add(label)
            newly_locked.append(label)
        locked.difference_update(newly_locked)

    search(set(), set(), 0)
    if best[0] is None:
        return None, 0, explored
    return best[1], best[0][0], explored


def _from_graph(graph: LabeledGraph, mode: str) -> _Instance:
    weights = {label: (1 if mode == "size" else w) for label, w in graph.weights.items()}
    return _Instance(graph.n, graph.directed, graph.source, graph.sink, graph.edges, weights)


def _from_multigraph(mg: LabeledMultiGraph) -> _Instance:
    edges = [(b.tail, b.head, c) for b in mg.bundles for c in b.copies]
    edges += [(u, v, ("forbidden", label)) for u, v, label in mg.forbidden_edges]
    weights = {c: 1 for c in mg.admissible_labels}
    fixed = {("forbidden", label) for _, _, label in mg.forbidden_edges}
    weights.update({f: 1 for f in fixed})
    return _Instance(mg.n, mg.directed, mg.source, mg.sink, edges, weights, fixed)


def exact_min_label_cut(instance: Union[LabeledGraph, LabeledMultiGraph], mode: str = "weight",
                        cap: int = DEFAULT_CAP) -> Optional[OracleResult]:
    """Provably optimal label cut.

    ``mode`` is ``"weight"`` or ``"size"``; multigraphs are always solved by
    size over admissible copy labels and yield None when even removing every
    admissible label leaves s and t connected.  Ties prefer fewer labels,
    then the lexicographically smallest sorted label list.
    """
    if mode not in ("weight", "size"):
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(instance, LabeledMultiGraph):
        universe = instance.copy_count()
        inst = _from_multigraph(instance)
    else:
        universe = instance.q
        inst = _from_graph(instance, mode)
    if universe > cap:
        raise OracleLimitExceeded(f"oracle cap exceeded: {universe} labels > cap {cap}")
    labels, weight, explored = _branch_and_bound(inst)
    if labels is None:
        return None
    return OracleResult(labels, weight, explored)


def brute_force_min_label_cut(instance: Union[LabeledGraph, LabeledMultiGraph],
                              mode: str = "weight") -> Optional[OracleResult]:
    """Plain enumeration of every label subset; for cross-checking small instances."""
    if isinstance(instance, LabeledMultiGraph):
        universe: Sequence = sorted(instance.admissible_labels)
        edges = [(b.tail, b.head, c) for b in instance.bundles for c in b.copies]
        edges += [(u, v, None) for u, v, _ in instance.forbidden_edges]
        weight_of = {c: 1 for c in universe}
        directed = instance.directed
    else:
        universe = sorted(instance.weights)
        edges = list(instance.edges)
        weight_of = {label: (1 if mode == "size" else w) for label, w in instance.weights.items()}
        directed = instance.directed

    def connected(removed: frozenset) -> bool:
        adj: dict[int, list[int]] = {}
        for u, v, label in edges:
            if label in removed:
                continue
            adj.setdefault(u, []).append(v)
            if not directed:
                adj.setdefault(v, []).append(u)
        stack, seen = [instance.source], {instance.source}
        while stack:
            u = stack.pop()
            for v in adj.get(u, ()):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return instance.sink in seen

    best = None
    count = 0
    for r in range(len(universe) + 1):
        for combo in itertools.combinations(universe, r):
            count += 1
            chosen = frozenset(combo)
            if connected(chosen):
                continue
            k = (sum(weight_of[c] for c in combo), r, sorted(combo, key=_sort_key))
            if best is None or k < best[0]:
                best = (k, chosen)
    if best is None:
        return None
    return OracleResult(best[1], best[0][0], count)
