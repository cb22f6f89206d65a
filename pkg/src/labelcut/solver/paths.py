"""0/1 shortest paths over residual graphs."""

from __future__ import annotations

from collections import deque
from typing import Optional

from .residual import PathStep, ResidualGraph


def _search(graph: ResidualGraph, start: int):
    dist: dict[int, int] = {start: 0}
    parent: dict[int, tuple[int, int]] = {}
    done: set[int] = set()
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if u in done:
            continue
        done.add(u)
        du = dist[u]
        for v, i in graph.adj[u]:
            if not graph.is_alive(i):
                continue
            w = graph.weight(i)
            nd = du + w
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                parent[v] = (u, i)
                if w == 0:
                    queue.appendleft(v)
                else:
                    queue.append(v)
    return dist, parent


def zero_one_distance(graph: ResidualGraph, start: int) -> dict[int, int]:
    """Distances from ``start`` counting only weight-1 edges.

    Vertices missing from the result are unreachable.
    """
    return _search(graph, start)[0]


def shortest_st_path(graph: ResidualGraph, source: Optional[int] = None,
                     sink: Optional[int] = None) -> list[PathStep]:
    """A minimum 0/1-length path from source to sink as a list of steps.

    Ties go to the first relaxation in edge insertion order; on a bundle the
    lowest surviving copy index is used.  Raises ``ValueError`` if the sink
    is unreachable.
    """
    s = graph.source if source is None else source
    t = graph.sink if sink is None else sink
    dist, parent = _search(graph, s)
    if t not in dist:
        raise ValueError(f"node {t} is unreachable from {s}")
    steps = []
    v = t
    while v != s:
        u, i = parent[v]
        steps.append(PathStep(i, u, v, graph.lowest_label(i), graph.weight(i)))
        v = u
    steps.reverse()
    return steps
