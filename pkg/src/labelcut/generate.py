"""Seeded random instance families.

* ``gnm``: ``m`` distinct random vertex pairs on ``n`` vertices.
* ``layered``: source, ``depth - 1`` levels of ``width`` vertices, sink; edges
  only join consecutive levels (``n = width * (depth - 1) + 2``).  With
  ``width = 1`` this is a single s-t path of ``depth`` edges.
* ``grid``: ``width`` columns by ``n / width`` rows, 4-neighbour edges;
  directed grids point right and down.

For ``layered`` and ``grid``, ``m`` edges are sampled from the model's
candidate edges (all of them when ``m`` is None).  The source is vertex 1,
the sink vertex ``n``.  Instances with s and t disconnected are redrawn.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .graph import LabeledGraph, is_cut

MODELS = ("gnm", "layered", "grid")
MAX_RETRIES = 100


class InfeasibleSpec(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int
    m: Optional[int]
    q: int
    weight_max: int = 1
    directed: bool = False
    seed: int = 0
    width: Optional[int] = None


def _layered_candidates(spec: GenSpec) -> list[tuple[int, int]]:
    width = spec.width or 1
    if spec.n < 2 or (spec.n - 2) % width:
        raise InfeasibleSpec(f"layered model needs n - 2 divisible by width {width}, got n={spec.n}")
    depth = (spec.n - 2) // width + 1
    levels = [[1]]
    nxt = 2
    for _ in range(depth - 1):
        levels.append(list(range(nxt, nxt + width)))
        nxt += width
    levels.append([spec.n])
    return [(u, v) for a, b in zip(levels, levels[1:]) for u in a for v in b]


def _grid_candidates(spec: GenSpec) -> list[tuple[int, int]]:
    width = spec.width or 1
    if spec.n % width:
        raise InfeasibleSpec(f"grid model needs n divisible by width {width}, got n={spec.n}")
    rows = spec.n // width
    out = []
    for r in range(rows):
        for c in range(width):
            v = r * width + c + 1
            if c + 1 < width:
                out.append((v, v + 1))
            if r + 1 < rows:
                out.append((v, v + width))
    return out


def _check(spec: GenSpec) -> None:
    if spec.model not in MODELS:
        raise InfeasibleSpec(f"unknown model {spec.model!r}; expected one of {', '.join(MODELS)}")
    if spec.n < 2:
        raise InfeasibleSpec("need at least 2 vertices")
    if spec.q < 1 or spec.weight_max < 1:
        raise InfeasibleSpec("q and weight_max must be positive")
    if spec.model == "gnm":
        if spec.m is None:
            raise InfeasibleSpec("gnm model needs m")
        pairs = spec.n * (spec.n - 1) // (1 if spec.directed else 2)
        if not 1 <= spec.m <= pairs:
            raise InfeasibleSpec(f"m={spec.m} outside 1..{pairs} for a simple graph on {spec.n} vertices")


def _edges(spec: GenSpec, rng: random.Random) -> list[tuple[int, int]]:
    if spec.model == "gnm":
        chosen: set[tuple[int, int]] = set()
        out = []
        while len(out) < spec.m:
            u, v = rng.randint(1, spec.n), rng.randint(1, spec.n)
            if u == v:
                continue
            key = (u, v) if spec.directed else (min(u, v), max(u, v))
            if key not in chosen:
                chosen.add(key)
                out.append((u, v))
        return out
    pool = _layered_candidates(spec) if spec.model == "layered" else _grid_candidates(spec)
    if spec.m is None:
        picked = pool
    elif spec.m > len(pool):
        raise InfeasibleSpec(f"m={spec.m} exceeds the {len(pool)} candidate edges of the {spec.model} model")
    else:
        picked = sorted(rng.sample(range(len(pool)), spec.m))
        picked = [pool[i] for i in picked]
    if not spec.directed:
        picked = [(v, u) if rng.random() < 0.5 else (u, v) for u, v in picked]
    return picked


def generate(spec: GenSpec) -> LabeledGraph:
    """Deterministic instance for ``spec``; s and t are always connected."""
    _check(spec)
    rng = random.Random(spec.seed)
    for _ in range(MAX_RETRIES):
        edges = _edges(spec, rng)
        labels = [rng.randint(1, spec.q) for _ in edges]
        weights = {label: rng.randint(1, spec.weight_max) for label in range(1, spec.q + 1)}
        graph = LabeledGraph(spec.directed, spec.n,
                             tuple((u, v, lb) for (u, v), lb in zip(edges, labels)),
                             weights, 1, spec.n)
        if not is_cut(graph, ()):
            return graph
    raise InfeasibleSpec(f"s and t stayed disconnected after {MAX_RETRIES} attempts")
