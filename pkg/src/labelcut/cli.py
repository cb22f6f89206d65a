"""``labelcut`` command line.

Exit codes: 0 ok, 1 usage or parse error, 2 verification failure,
3 solver failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench
from .fileio import ParseError, parse_instance, parse_solution, write_instance, write_solution
from .generate import GenSpec, InfeasibleSpec, generate
from .oracle import DEFAULT_CAP, OracleLimitExceeded
from .solver import SolverInternalError

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_SOLVER = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def cmd_solve(args) -> int:
    graph = parse_instance(_read(args.instance))
    if args.guess_opt is not None and args.algo != "unweighted":
        print("error: --guess-opt applies to --algo unweighted only", file=sys.stderr)
        return EXIT_USAGE
    if args.guess_opt is not None and args.guess_opt < 1:
        print("error: --guess-opt must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        sol = bench.solve(graph, args.algo, args.guess_opt, args.oracle_cap)
    except (OracleLimitExceeded, SolverInternalError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    _emit(write_solution(sol), args.output)
    if args.emit_stats:
        stats = {
            "algo": args.algo,
            "weight": sol.total_weight,
            "labels": sorted(sol.labels),
            "stage1_labels": sorted(sol.stage1_labels),
            "stage2_labels": sorted(sol.stage2_labels),
            "paths_found": sol.paths_found,
            "guess": bench.describe_guess(sol),
        }
        print(json.dumps(stats, sort_keys=True), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import verify

    graph = parse_instance(_read(args.instance))
    report = verify(graph, parse_solution(_read(args.solution)))
    print(report)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_gen(args) -> int:
    spec = GenSpec(args.model, args.n, args.m, args.q, args.wmax, args.directed,
                   args.seed, args.width)
    try:
        graph = generate(spec)
    except InfeasibleSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    comment = (f"model={spec.model} n={spec.n} m={spec.m} q={spec.q} wmax={spec.weight_max} "
               f"directed={int(spec.directed)} seed={spec.seed}"
               + (f" width={spec.width}" if spec.width else ""))
    _emit(write_instance(graph, comment), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    bad = [a for a in algos if a not in bench.ALGOS]
    if bad or not algos:
        print(f"error: unknown algorithms {bad}; choose from {', '.join(bench.ALGOS)}",
              file=sys.stderr)
        return EXIT_USAGE
    if args.dir:
        instances = bench.directory_instances(Path(args.dir))
    else:
        try:
            specs = [s for text in args.sweep for s in bench.parse_sweep(text)]
        except (ValueError, KeyError) as exc:
            print(f"error: bad --sweep: {exc}", file=sys.stderr)
            return EXIT_USAGE
        instances = bench.sweep_instances(specs)
    records = bench.run_bench(instances, algos, args.oracle_cap)
    _emit(bench.to_csv(records), args.output)
    for line in bench.summarize(records):
        print(line, file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="labelcut", description="Minimum label s-t cut solvers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve an instance")
    p.add_argument("--algo", choices=bench.ALGOS, required=True)
    p.add_argument("--guess-opt", type=int, help="run only this guess of OPT (unweighted)")
    p.add_argument("--emit-stats", action="store_true", help="print JSON stats to stderr")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution file against an instance")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--model", choices=("gnm", "layered", "grid"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--wmax", type=int, default=1)
    p.add_argument("--width", type=int, help="level width (layered) or columns (grid)")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="benchmark solvers against the exact oracle")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--dir")
    src.add_argument("--sweep", action="append", help="generator sweep, e.g. "
                     "model=gnm,n=10,m=20,q=5,wmax=10,count=4,seed=0")
    p.add_argument("--algos", required=True, help="comma-separated: exact,unweighted,weighted")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
