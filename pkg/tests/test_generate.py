import pytest

from labelcut import is_cut, validate
from labelcut.fileio import write_instance
from labelcut.generate import GenSpec, InfeasibleSpec, generate


def test_same_seed_same_graph():
    spec = GenSpec("gnm", 6, 8, 3, 5, False, 1)
    assert write_instance(generate(spec)) == write_instance(generate(spec))
    assert generate(spec) == generate(spec)


def test_different_seed_differs():
    a = generate(GenSpec("gnm", 10, 20, 4, 9, False, 1))
    b = generate(GenSpec("gnm", 10, 20, 4, 9, False, 2))
    assert a != b


def test_layered_width_one_is_path():
    g = generate(GenSpec("layered", 6, None, 2, 3, True, 4, width=1))
    assert g.m == 5
    assert sorted((u, v) for u, v, _ in g.edges) == [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]


def test_layered_edges_join_consecutive_levels():
    g = generate(GenSpec("layered", 11, 20, 4, 3, True, 2, width=3))
    level = {1: 0, 11: 4}
    for k in range(9):
        level[2 + k] = 1 + k // 3
    assert all(level[v] == level[u] + 1 for u, v, _ in g.edges)


def test_grid_full():
    g = generate(GenSpec("grid", 9, None, 4, 1, False, 0, width=3))
    assert g.m == 12 and g.source == 1 and g.sink == 9


@pytest.mark.parametrize("model,kw", [("gnm", dict(n=10, m=20)),
                                      ("gnm", dict(n=30, m=60)),
                                      ("layered", dict(n=14, m=25, width=4)),
                                      ("grid", dict(n=20, m=28, width=5))])
@pytest.mark.parametrize("directed", [False, True])
def test_generated_instances_valid_and_connected(model, kw, directed):
    for seed in range(15):
        g = generate(GenSpec(model, q=6, weight_max=9, directed=directed, seed=seed, **kw))
        assert validate(g) == []
        assert not is_cut(g, ())
        assert g.source == 1 and g.sink == g.n
        assert all(1 <= w <= 9 for w in g.weights.values())
        assert set(g.weights) == set(range(1, 7))


@pytest.mark.parametrize("spec", [
    GenSpec("gnm", 4, 7, 2),
    GenSpec("gnm", 4, None, 2),
    GenSpec("layered", 7, None, 2, width=2),
    GenSpec("grid", 7, None, 2, width=2),
    GenSpec("ring", 7, 3, 2),
    GenSpec("gnm", 20, 1, 2),  # never connects 1 and 20
])
def test_infeasible_specs(spec):
    with pytest.raises(InfeasibleSpec):
        generate(spec)
