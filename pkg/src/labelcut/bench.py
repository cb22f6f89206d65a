"""Benchmark harness: run solvers over instances and record SOL/OPT ratios."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from .fileio import parse_instance
from .generate import GenSpec, generate
from .graph import CutSolution, LabeledGraph
from .oracle import DEFAULT_CAP, OracleLimitExceeded, exact_min_label_cut
from .solver import solve_unweighted, solve_weighted

ALGOS = ("exact", "unweighted", "weighted")
COLUMNS = ("instance", "n", "m", "q", "algo", "opt_weight", "sol_weight", "ratio",
           "runtime_ms", "guess_used", "error")


def solve(graph: LabeledGraph, algo: str, guess_opt: Optional[int] = None,
          oracle_cap: int = DEFAULT_CAP) -> CutSolution:
    if algo == "exact":
        res = exact_min_label_cut(graph, "weight", cap=oracle_cap)
        return CutSolution(res.optimum_labels, res.optimum_weight,
                           stage1_labels=res.optimum_labels)
    if algo == "unweighted":
        return solve_unweighted(graph, guess_opt)
    if algo == "weighted":
        return solve_weighted(graph)
    raise ValueError(f"unknown algorithm {algo!r}; expected one of {', '.join(ALGOS)}")


def describe_guess(sol: CutSolution) -> str:
    if sol.guess_used is not None:
        g = sol.guess_used
        return f"O={g.o_size};W={g.weight_cap};OPT={sol.opt_guess}"
    if sol.opt_guess is not None:
        return f"OPT={sol.opt_guess}"
    return ""


@dataclass
class BenchRecord:
    instance: str
    n: int
    m: int
    q: int
    algo: str
    opt_weight: Optional[int] = None
    sol_weight: Optional[int] = None
    ratio: Optional[Fraction] = None
    runtime_ms: float = 0.0
    guess_used: str = ""
    error: str = ""
    solution: Optional[CutSolution] = None

    def row(self) -> list:
        return [self.instance, self.n, self.m, self.q, self.algo,
                "" if self.opt_weight is None else self.opt_weight,
                "" if self.sol_weight is None else self.sol_weight,
                "" if self.ratio is None else f"{float(self.ratio):.6f}",
                f"{self.runtime_ms:.3f}", self.guess_used, self.error]


def bench_instance(name: str, graph: LabeledGraph, algos: Iterable[str],
                   oracle_cap: int = DEFAULT_CAP) -> list[BenchRecord]:
    opt = None
    if graph.q <= oracle_cap:
        opt = exact_min_label_cut(graph, "weight", cap=oracle_cap).optimum_weight
    records = []
    for algo in algos:
        rec = BenchRecord(name, graph.n, graph.m, graph.q, algo, opt_weight=opt)
        start = time.perf_counter()
        try:
            sol = solve(graph, algo, oracle_cap=oracle_cap)
        except OracleLimitExceeded:
            rec.error = "oracle cap exceeded"
        except Exception as exc:  # recorded per row; the run continues
            rec.error = f"{type(exc).__name__}: {exc}"
        else:
            rec.solution = sol
            rec.sol_weight = sol.total_weight
            rec.guess_used = describe_guess(sol)
            if opt:
                rec.ratio = Fraction(sol.total_weight, opt)
        rec.runtime_ms = (time.perf_counter() - start) * 1000
        records.append(rec)
    return records


def run_bench(instances: Iterable[tuple[str, LabeledGraph]], algos: Iterable[str],
              oracle_cap: int = DEFAULT_CAP) -> list[BenchRecord]:
    algos = list(algos)
    out = []
    for name, graph in instances:
        out.extend(bench_instance(name, graph, algos, oracle_cap))
    return out


def directory_instances(directory: Path) -> Iterable[tuple[str, LabeledGraph]]:
    for path in sorted(Path(directory).glob("*.lstc")):
        yield path.name, parse_instance(path.read_text(encoding="utf-8"))


def parse_sweep(text: str) -> list[GenSpec]:
    """Expand ``model=gnm,n=10,m=20,q=5,wmax=10,count=4,seed=0[,directed=1][,width=3]``."""
    fields = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep:
            raise ValueError(f"bad sweep item {part!r}; expected key=value")
        fields[key.strip()] = value.strip()
    known = {"model", "n", "m", "q", "wmax", "count", "seed", "directed", "width"}
    extra = set(fields) - known
    if extra:
        raise ValueError(f"unknown sweep keys: {', '.join(sorted(extra))}")
    count = int(fields.get("count", 1))
    seed = int(fields.get("seed", 0))
    base = dict(model=fields.get("model", "gnm"), n=int(fields["n"]),
                m=int(fields["m"]) if "m" in fields else None, q=int(fields["q"]),
                weight_max=int(fields.get("wmax", 1)),
                directed=fields.get("directed", "0") in ("1", "true", "yes"),
                width=int(fields["width"]) if "width" in fields else None)
    return [GenSpec(seed=seed + i, **base) for i in range(count)]


def sweep_instances(specs: Iterable[GenSpec]) -> Iterable[tuple[str, LabeledGraph]]:
    for spec in specs:
        name = f"{spec.model}-n{spec.n}-m{spec.m}-q{spec.q}-w{spec.weight_max}-s{spec.seed}"
        yield name, generate(spec)


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()


def summarize(records: list[BenchRecord]) -> list[str]:
    """One line per algorithm with the max and mean ratio over rows that have one."""
    lines = []
    for algo in dict.fromkeys(r.algo for r in records):
        ratios = [r.ratio for r in records if r.algo == algo and r.ratio is not None]
        errors = sum(1 for r in records if r.algo == algo and r.error)
        if ratios:
            mean = sum(ratios) / len(ratios)
            lines.append(f"{algo}: rows={len(ratios)} max_ratio={float(max(ratios)):.4f} "
                         f"mean_ratio={float(mean):.4f} errors={errors}")
        else:
            lines.append(f"{algo}: rows=0 errors={errors}")
    return lines
