"""Distance layering of a residual graph and the cuts between consecutive layers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .paths import zero_one_distance
from .residual import ResidualGraph


@dataclass
class LayerPartition:
    """Vertices grouped by 0/1 distance from the source.

    ``candidate_cuts[i]`` lists the residual edge indices running from layer
    ``i`` to layer ``i + 1``; ``cut_sizes[i]`` counts their surviving copies.
    ``tau`` is the sink's layer, or None when the sink is unreachable (then
    there are no candidate cuts).
    """

    layers: list[frozenset[int]]
    tau: Optional[int]
    candidate_cuts: list[list[int]] = field(default_factory=list)
    cut_sizes: list[int] = field(default_factory=list)
    chosen: Optional[int] = None

    @property
    def chosen_cut(self) -> list[int]:
        return [] if self.chosen is None else self.candidate_cuts[self.chosen]

    @property
    def chosen_size(self) -> int:
        return 0 if self.chosen is None else self.cut_sizes[self.chosen]


def layer_partition(graph: ResidualGraph) -> LayerPartition:
    dist = zero_one_distance(graph, graph.source)
    depth = max(dist.values())
    layers: list[set[int]] = [set() for _ in range(depth + 1)]
    for v, d in dist.items():
        layers[d].add(v)
    tau = dist.get(graph.sink)
    part = LayerPartition([frozenset(layer) for layer in layers], tau)
    if not tau:
        # unreachable sink, or a zero-length s-t path (no layer cut exists)
        return part

    cuts: list[list[int]] = [[] for _ in range(tau)]
    sizes = [0] * tau
    for i, e in enumerate(graph.edges):
        if not graph.is_alive(i):
            continue
        du, dv = dist.get(e.tail), dist.get(e.head)
        if du is None or dv is None:
            continue
        if not graph.directed and dv < du:
            du, dv = dv, du
        if dv == du + 1 and du < tau:
            cuts[du].append(i)
            sizes[du] += graph.multiplicity(i)
    part.candidate_cuts = cuts
    part.cut_sizes = sizes
    # first minimum wins ties
    part.chosen = min(range(tau), key=sizes.__getitem__)
    return part
