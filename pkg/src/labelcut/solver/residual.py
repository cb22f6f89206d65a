"""Mutable working graph for the two-stage solvers.

Edges are stored once per input edge (or bundle).  Admissible edges of the
same origin label always carry the same set of surviving copy indices,
because removal works on copy labels, which are shared across all bundles
with that origin.  So the surviving copies are tracked per origin label,
and an edge with ``k`` surviving copies behaves exactly like ``k`` parallel
weight-1 edges.
"""

from __future__ import annotations

from typing import Hashable, Iterable, NamedTuple

from ..graph import CopyLabel, LabeledGraph, LabeledMultiGraph


class ResEdge(NamedTuple):
    tail: int
    head: int
    origin: int
    admissible: bool


class PathStep(NamedTuple):
    """One traversed edge of a path: edge index, direction, and the label used."""

    edge: int
    tail: int
    head: int
    label: Hashable
    weight: int


def edge_weight(admissible: bool) -> int:
    """0/1 length rule: admissible edges are length one, forbidden edges length zero."""
    return 1 if admissible else 0


class ResidualGraph:
    """Residual copy of an instance that stage one removes labels from.

    In ``simple`` mode every label is admissible with a single copy and the
    copy label is the original label id; otherwise copy labels are
    :class:`CopyLabel` values.
    """

    def __init__(self, n: int, directed: bool, source: int, sink: int,
                 edges: list[ResEdge], copies: dict[int, int], simple: bool):
        self.n = n
        self.directed = directed
        self.source = source
        self.sink = sink
        self.edges = edges
        self.simple = simple
        self.alive: dict[int, list[int]] = {
            label: list(range(1, k + 1)) for label, k in copies.items()}
        # adjacency in insertion order, both directions for undirected graphs
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
        for i, e in enumerate(edges):
            self.adj[e.tail].append((e.head, i))
            if not directed:
                self.adj[e.head].append((e.tail, i))

    @classmethod
    def from_graph(cls, graph: LabeledGraph) -> ResidualGraph:
        edges = [ResEdge(u, v, label, True) for u, v, label in graph.edges]
        return cls(graph.n, graph.directed, graph.source, graph.sink,
                   edges, {label: 1 for label in graph.weights}, simple=True)

    @classmethod
    def from_multigraph(cls, mg: LabeledMultiGraph) -> ResidualGraph:
        edges = [ResEdge(b.tail, b.head, b.origin, True) for b in mg.bundles]
        edges += [ResEdge(u, v, label, False) for u, v, label in mg.forbidden_edges]
        copies = {label: len(group) for label, group in mg.admissible_groups.items()}
        return cls(mg.n, mg.directed, mg.source, mg.sink, edges, copies, simple=False)

    def copy_label(self, origin: int, index: int) -> Hashable:
        return origin if self.simple else CopyLabel(origin, index)

    def is_alive(self, i: int) -> bool:
        e = self.edges[i]
        return not e.admissible or bool(self.alive[e.origin])

    def multiplicity(self, i: int) -> int:
        """Number of surviving parallel copies represented by edge ``i``."""
        e = self.edges[i]
        return len(self.alive[e.origin]) if e.admissible else 1

    def weight(self, i: int) -> int:
        return edge_weight(self.edges[i].admissible)

    def lowest_label(self, i: int) -> Hashable:
        e = self.edges[i]
        if not e.admissible:
            return e.origin
        return self.copy_label(e.origin, self.alive[e.origin][0])

    def surviving_labels(self, i: int) -> list[Hashable]:
        """Labels of every surviving copy of edge ``i``."""
        e = self.edges[i]
        if not e.admissible:
            return [e.origin]
        return [self.copy_label(e.origin, k) for k in self.alive[e.origin]]

    def remove_labels(self, labels: Iterable[Hashable]) -> None:
        """Delete every edge copy whose (copy) label is in ``labels``."""
        for label in labels:
            if self.simple:
                self.alive[label] = []
            else:
                self.alive[label.base].remove(label.index)

    def alive_snapshot(self) -> dict[int, tuple[int, ...]]:
        return {label: tuple(ks) for label, ks in self.alive.items()}
