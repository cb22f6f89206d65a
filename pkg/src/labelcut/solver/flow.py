"""Unit-capacity minimum s-t edge cut via shortest augmenting paths."""

from __future__ import annotations

from collections import deque
from typing import Sequence


def min_st_cut_unit(n: int, edges: Sequence[tuple[int, int]], source: int, sink: int,
                    directed: bool) -> list[int]:
    """Indices of a minimum-cardinality set of ``edges`` separating source from sink.

    Every edge has capacity one.  An undirected edge becomes a pair of
    opposite arcs that act as each other's residual, so the pair carries at
    most one unit in either direction.  Returns ``[]`` if the sink is already
    unreachable.
    """
    # arc arrays: head, residual capacity; arc a ^ 1 is the reverse of arc a
    head: list[int] = []
    cap: list[int] = []
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        out[u].append(len(head))
        head.append(v)
        cap.append(1)
        out[v].append(len(head))
        head.append(u)
        cap.append(0 if directed else 1)

    def augment() -> bool:
        via = [-1] * (n + 1)
        seen = [False] * (n + 1)
        seen[source] = True
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for a in out[u]:
                v = head[a]
                if cap[a] > 0 and not seen[v]:
                    seen[v] = True
                    via[v] = a
                    if v == sink:
                        while v != source:
                            a = via[v]
                            cap[a] -= 1
                            cap[a ^ 1] += 1
                            v = head[a ^ 1]
                        return True
                    queue.append(v)
        return False

    flow = 0
    while augment():
        flow += 1

    side = [False] * (n + 1)
    side[source] = True
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for a in out[u]:
            v = head[a]
            if cap[a] > 0 and not side[v]:
                side[v] = True
                queue.append(v)

    if directed:
        cut = [i for i, (u, v) in enumerate(edges) if side[u] and not side[v]]
    else:
        cut = [i for i, (u, v) in enumerate(edges) if side[u] != side[v]]
    assert len(cut) == flow, "cut size differs from max-flow value"
    return cut
