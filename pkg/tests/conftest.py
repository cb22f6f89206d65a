import random
import sys

import pytest

from labelcut import LabeledGraph


def random_graph(rng: random.Random, n: int, m: int, q: int, wmax: int = 1,
                 directed: bool = False) -> LabeledGraph:
    """Random simple labeled graph; s=1, t=n, connectivity not guaranteed."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)
             if u != v and (directed or u < v)]
    chosen = rng.sample(pairs, min(m, len(pairs)))
    edges = [(u, v, rng.randint(1, q)) for u, v in chosen]
    weights = {label: rng.randint(1, wmax) for label in range(1, q + 1)}
    return LabeledGraph(directed, n, edges, weights, 1, n)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def diamond():
    # s=1, a=2, b=3, t=4; labels (1, 2, 1, 3) on s-a, a-t, s-b, b-t
    return LabeledGraph(True, 4, [(1, 2, 1), (2, 4, 2), (1, 3, 1), (3, 4, 3)],
                        {1: 1, 2: 1, 3: 1}, 1, 4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
