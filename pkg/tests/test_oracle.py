import random

import pytest

from labelcut import LabeledGraph, brute_force_min_label_cut, exact_min_label_cut, is_cut
from labelcut.oracle import OracleLimitExceeded

from conftest import random_graph


def test_single_edge():
    g = LabeledGraph(True, 2, [(1, 2, 1)], {1: 5}, 1, 2)
    res = exact_min_label_cut(g)
    assert res.optimum_labels == {1} and res.optimum_weight == 5


def test_shared_label_on_disjoint_paths():
    g = LabeledGraph(False, 4, [(1, 2, 1), (2, 4, 2), (1, 3, 3), (3, 4, 1)],
                     {1: 4, 2: 3, 3: 3}, 1, 4)
    # subsets by hand: {1} = 4, {2,3} = 6; brute force agrees
    assert brute_force_min_label_cut(g).optimum_labels == {1}
    assert exact_min_label_cut(g).optimum_labels == {1}
    assert exact_min_label_cut(g).optimum_weight == 4


def test_size_mode_ignores_weights():
    g = LabeledGraph(False, 4, [(1, 2, 1), (2, 4, 2), (1, 3, 3), (3, 4, 4)],
                     {1: 1, 2: 1, 3: 1, 4: 100}, 1, 4)
    assert exact_min_label_cut(g, "weight").optimum_labels == {1, 3}
    assert exact_min_label_cut(g, "size").optimum_weight == 2


def test_tie_break_fewest_then_lexicographic():
    # s=1 -> a=2 by label 1 (w 2); a splits via b=3 (label 2) and c=4 (label 3) to t=5
    g = LabeledGraph(True, 5, [(1, 2, 1), (2, 3, 2), (3, 5, 2), (2, 4, 3), (4, 5, 3)],
                     {1: 2, 2: 1, 3: 1}, 1, 5)
    assert brute_force_min_label_cut(g).optimum_labels == {1}
    assert exact_min_label_cut(g).optimum_labels == {1}
    # two single-label cuts of equal weight: the smaller id wins
    h = LabeledGraph(True, 3, [(1, 2, 2), (2, 3, 1)], {1: 1, 2: 1}, 1, 3)
    assert exact_min_label_cut(h).optimum_labels == {1}


def test_cap():
    g = LabeledGraph(True, 2, [(1, 2, 1)], {i: 1 for i in range(1, 31)}, 1, 2)
    with pytest.raises(OracleLimitExceeded):
        exact_min_label_cut(g)
    assert exact_min_label_cut(g, cap=30).optimum_weight == 1


def test_disconnected_instance():
    g = LabeledGraph(True, 3, [(1, 2, 1)], {1: 1}, 1, 3)
    res = exact_min_label_cut(g)
    assert res.optimum_labels == frozenset() and res.optimum_weight == 0


@pytest.mark.parametrize("seed", range(150))
def test_agrees_with_naive_enumeration(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(2, 10), rng.randint(1, 22), rng.randint(1, 10),
                     wmax=rng.choice([1, 3, 50]), directed=seed % 2 == 0)
    for mode in ("weight", "size"):
        fast = exact_min_label_cut(g, mode)
        slow = brute_force_min_label_cut(g, mode)
        assert fast.optimum_weight == slow.optimum_weight
        assert fast.optimum_labels == slow.optimum_labels
        assert is_cut(g, fast.optimum_labels)
