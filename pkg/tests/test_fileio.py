import random

import pytest
from hypothesis import given, settings, strategies as st

from labelcut import CutSolution, LabeledGraph
from labelcut.fileio import (InstanceSyntaxError, InstanceValidationError, ParseError,
                             SolutionRecord, parse_instance, parse_solution, record_of,
                             write_instance, write_solution)
from labelcut.generate import GenSpec, generate

MINIMAL = "p lstc directed 2 1 1\ns 1\nt 2\nl 1 4\ne 1 2 1\n"


def test_minimal_file():
    g = parse_instance(MINIMAL)
    assert g == LabeledGraph(True, 2, [(1, 2, 1)], {1: 4}, 1, 2)


def test_body_order_free_and_comments():
    text = "c hello\np lstc undirected 3 2 2\nc mid\ne 1 2 2\ne 2 3 1\nt 3\nl 2 5\ns 1\nl 1 1\n"
    g = parse_instance(text)
    assert g.weights == {1: 1, 2: 5} and g.edges == ((1, 2, 2), (2, 3, 1))


@pytest.mark.parametrize("text,line,fragment", [
    (MINIMAL + "p lstc directed 2 1 1\n", 6, "duplicate 'p'"),
    ("s 1\n" + MINIMAL, 1, "first non-comment"),
    (MINIMAL.replace("e 1 2 1", "x 1 2 1"), 5, "unknown line tag"),
    (MINIMAL.replace("l 1 4", "l 1 four"), 4, "integer"),
    (MINIMAL.replace("p lstc directed", "p lstc sideways"), 1, "directed"),
    (MINIMAL.replace("s 1\n", "s 1\ns 2\n"), 3, "duplicate 's'"),
    (MINIMAL.replace("e 1 2 1\n", ""), 1, "declares 1 edges"),
])
def test_syntax_errors(text, line, fragment):
    with pytest.raises(InstanceSyntaxError) as info:
        parse_instance(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_syntax_error_column():
    with pytest.raises(InstanceSyntaxError) as info:
        parse_instance(MINIMAL.replace("l 1 4", "l 1   x"))
    assert (info.value.line, info.value.column) == (4, 7)


@pytest.mark.parametrize("text,line", [
    (MINIMAL.replace("e 1 2 1", "e 1 2 3"), 5),
    (MINIMAL.replace("l 1 4", "l 1 0"), 4),
    (MINIMAL.replace("t 2", "t 1"), 1),
    ("p lstc directed 2 2 1\ns 1\nt 2\nl 1 4\ne 1 2 1\ne 1 2 1\n", 6),
])
def test_validation_errors(text, line):
    with pytest.raises(InstanceValidationError) as info:
        parse_instance(text)
    assert info.value.line == line


def test_write_solution_formats():
    assert write_solution(CutSolution(frozenset({2}), 7)) == \
        "status feasible\nweight 7\nlabels 1\n2\n"
    assert write_solution(CutSolution(frozenset(), 0, status="failure")) == "status failure\n"
    assert write_solution(CutSolution(frozenset(), 0)) == "status feasible\nweight 0\nlabels 0\n"


@pytest.mark.parametrize("sol", [
    CutSolution(frozenset({3, 1, 10}), 42),
    CutSolution(frozenset(), 0),
    CutSolution(frozenset(), 0, status="failure"),
    CutSolution(frozenset(), 0, status="infeasible"),
])
def test_solution_round_trip(sol):
    assert parse_solution(write_solution(sol)) == record_of(sol)


@pytest.mark.parametrize("text", [
    "", "status maybe\n", "status feasible\nweight x\nlabels 0\n",
    "status feasible\nweight 1\nlabels 2\n1\n", "status feasible\nweight 1\nlabels 2\n2\n1\n",
])
def test_bad_solution_files(text):
    with pytest.raises(ParseError):
        parse_solution(text)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["gnm", "layered", "grid"]), st.booleans(), st.integers(0, 10**9))
def test_instance_round_trip(model, directed, seed):
    kw = {"gnm": dict(n=9, m=14), "layered": dict(n=11, m=None, width=3),
          "grid": dict(n=12, m=None, width=4)}[model]
    g = generate(GenSpec(model, q=5, weight_max=10**6, directed=directed, seed=seed, **kw))
    assert parse_instance(write_instance(g, "comment\nsecond")) == g
