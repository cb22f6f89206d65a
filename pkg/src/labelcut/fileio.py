"""Text formats for instances (``.lstc``) and solutions.

Instance::

    c <comment>
    p lstc <directed|undirected> <n> <m> <q>
    s <node>
    t <node>
    l <label> <weight>        (q lines)
    e <u> <v> <label>         (m lines)

The ``p`` line must be the first non-comment line; the rest may come in any
order.  Solution::

    status <feasible|infeasible|failure>
    weight <w>
    labels <k>
    <label>                   (k lines, ascending)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import CutSolution, LabeledGraph, validate

STATUSES = ("feasible", "infeasible", "failure")


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class InstanceSyntaxError(ParseError):
    pass


class InstanceValidationError(ParseError):
    pass


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _int(tok: tuple[str, int], lineno: int, what: str) -> int:
    text, col = tok
    try:
        return int(text)
    except ValueError:
        raise InstanceSyntaxError(f"expected integer {what}, got {text!r}", lineno, col) from None


def _arity(toks, k: int, lineno: int, usage: str) -> None:
    if len(toks) != k:
        col = toks[min(len(toks), k) - 1][1] if toks else None
        raise InstanceSyntaxError(f"expected '{usage}'", lineno, col)


def parse_instance(text: str) -> LabeledGraph:
    header = None
    source = sink = None
    weights: dict[int, int] = {}
    label_line: dict[int, int] = {}
    edges: list[tuple[int, int, int]] = []
    edge_lines: list[int] = []

    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks or toks[0][0] == "c":
            continue
        tag, col = toks[0]
        if header is None and tag != "p":
            raise InstanceSyntaxError("first non-comment line must be the 'p' line", lineno, col)
        if tag == "p":
            if header is not None:
                raise InstanceSyntaxError("duplicate 'p' line", lineno, col)
            _arity(toks, 6, lineno, "p lstc <directed|undirected> <n> <m> <q>")
            if toks[1][0] != "lstc":
                raise InstanceSyntaxError(f"unknown problem type {toks[1][0]!r}", lineno, toks[1][1])
            if toks[2][0] not in ("directed", "undirected"):
                raise InstanceSyntaxError("expected 'directed' or 'undirected'", lineno, toks[2][1])
            header = (toks[2][0] == "directed", _int(toks[3], lineno, "n"),
                      _int(toks[4], lineno, "m"), _int(toks[5], lineno, "q"), lineno)
        elif tag in ("s", "t"):
            _arity(toks, 2, lineno, f"{tag} <node>")
            node = _int(toks[1], lineno, "node")
            if tag == "s":
                if source is not None:
                    raise InstanceSyntaxError("duplicate 's' line", lineno, col)
                source = node
            else:
                if sink is not None:
                    raise InstanceSyntaxError("duplicate 't' line", lineno, col)
                sink = node
        elif tag == "l":
            _arity(toks, 3, lineno, "l <label> <weight>")
            label = _int(toks[1], lineno, "label")
            if label in weights:
                raise InstanceSyntaxError(f"label {label} declared twice", lineno, toks[1][1])
            weights[label] = _int(toks[2], lineno, "weight")
            label_line[label] = lineno
        elif tag == "e":
            _arity(toks, 4, lineno, "e <u> <v> <label>")
            edges.append((_int(toks[1], lineno, "u"), _int(toks[2], lineno, "v"),
                          _int(toks[3], lineno, "label")))
            edge_lines.append(lineno)
        else:
            raise InstanceSyntaxError(f"unknown line tag {tag!r}", lineno, col)

    if header is None:
        raise InstanceSyntaxError("missing 'p' line")
    directed, n, m, q, p_line = header
    if source is None:
        raise InstanceSyntaxError("missing 's' line")
    if sink is None:
        raise InstanceSyntaxError("missing 't' line")
    if len(weights) != q:
        raise InstanceSyntaxError(f"header declares {q} labels, found {len(weights)}", p_line)
    if len(edges) != m:
        raise InstanceSyntaxError(f"header declares {m} edges, found {len(edges)}", p_line)

    graph = LabeledGraph(directed, n, tuple(edges), weights, source, sink)
    problems = validate(graph)
    if problems:
        raise InstanceValidationError(problems[0], _locate(problems[0], p_line, label_line, edge_lines))
    return graph


def _locate(problem: str, p_line: int, label_line: dict[int, int], edge_lines: list[int]) -> int:
    if problem.startswith("edge "):
        return edge_lines[int(problem.split()[1]) - 1]
    if problem.startswith("label "):
        label = int(problem.split()[1].rstrip(":"))
        return label_line.get(label, p_line)
    return p_line


def write_instance(graph: LabeledGraph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines += [f"c {part}" for part in comment.splitlines()]
    kind = "directed" if graph.directed else "undirected"
    lines.append(f"p lstc {kind} {graph.n} {graph.m} {graph.q}")
    lines.append(f"s {graph.source}")
    lines.append(f"t {graph.sink}")
    lines += [f"l {label} {w}" for label, w in sorted(graph.weights.items())]
    lines += [f"e {u} {v} {label}" for u, v, label in graph.edges]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SolutionRecord:
    """The file-visible part of a solution."""

    status: str
    weight: int
    labels: tuple[int, ...]


def write_solution(sol: CutSolution) -> str:
    if sol.status != "feasible":
        return f"status {sol.status}\n"
    labels = sorted(sol.labels)
    lines = ["status feasible", f"weight {sol.total_weight}", f"labels {len(labels)}"]
    lines += [str(label) for label in labels]
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> SolutionRecord:
    rows = [(i, _tokens(line)) for i, line in enumerate(text.splitlines(), start=1)]
    rows = [(i, t) for i, t in rows if t and t[0][0] != "c"]
    if not rows or rows[0][1][0][0] != "status" or len(rows[0][1]) != 2:
        raise ParseError("expected 'status <feasible|infeasible|failure>'", rows[0][0] if rows else None)
    status = rows[0][1][1][0]
    if status not in STATUSES:
        raise ParseError(f"unknown status {status!r}", rows[0][0], rows[0][1][1][1])
    if status != "feasible" and len(rows) == 1:
        return SolutionRecord(status, 0, ())

    def field(k: int, name: str) -> int:
        if len(rows) <= k or rows[k][1][0][0] != name or len(rows[k][1]) != 2:
            raise ParseError(f"expected '{name} <integer>'", rows[k][0] if len(rows) > k else None)
        try:
            return int(rows[k][1][1][0])
        except ValueError:
            raise ParseError(f"{name} must be an integer", rows[k][0], rows[k][1][1][1]) from None

    weight = field(1, "weight")
    count = field(2, "labels")
    body = rows[3:]
    if len(body) != count:
        raise ParseError(f"'labels {count}' but {len(body)} label lines follow", rows[2][0])
    labels = []
    for lineno, toks in body:
        if len(toks) != 1:
            raise ParseError("expected one label id per line", lineno)
        try:
            labels.append(int(toks[0][0]))
        except ValueError:
            raise ParseError(f"bad label id {toks[0][0]!r}", lineno, toks[0][1]) from None
    if labels != sorted(set(labels)):
        raise ParseError("label ids must be strictly ascending", body[0][0])
    return SolutionRecord(status, weight, tuple(labels))


def record_of(sol: CutSolution) -> SolutionRecord:
    if sol.status != "feasible":
        return SolutionRecord(sol.status, 0, ())
    return SolutionRecord(sol.status, sol.total_weight, tuple(sorted(sol.labels)))
