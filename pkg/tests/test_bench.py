import csv
import io

from labelcut import LabeledGraph
from labelcut.bench import (COLUMNS, parse_sweep, run_bench, summarize, sweep_instances,
                            directory_instances, to_csv)
from labelcut.fileio import write_instance
from labelcut.generate import GenSpec


def test_ten_gnm_instances_two_algos():
    specs = parse_sweep("model=gnm,n=10,m=18,q=6,wmax=20,count=10,seed=3")
    records = run_bench(sweep_instances(specs), ["exact", "weighted"])
    assert len(records) == 20
    assert all(r.ratio is not None and r.ratio >= 1 for r in records)
    assert all(r.ratio == 1 for r in records if r.algo == "exact")
    rows = list(csv.reader(io.StringIO(to_csv(records))))
    assert tuple(rows[0]) == COLUMNS and len(rows) == 21


def test_oracle_cap_error_row():
    g = LabeledGraph(True, 2, [(1, 2, 1)], {i: 1 for i in range(1, 31)}, 1, 2)
    records = run_bench([("wide", g)], ["exact", "unweighted"])
    exact, unweighted = records
    assert exact.error == "oracle cap exceeded" and exact.sol_weight is None
    assert unweighted.error == "" and unweighted.ratio is None and unweighted.opt_weight is None


def test_empty_directory(tmp_path):
    records = run_bench(directory_instances(tmp_path), ["exact"])
    assert to_csv(records) == ",".join(COLUMNS) + "\n"


def test_directory_in_name_order(tmp_path):
    for i, seed in enumerate((5, 1)):
        from labelcut.generate import generate
        g = generate(GenSpec("gnm", 6, 8, 3, 4, False, seed))
        (tmp_path / f"b{i}.lstc").write_text(write_instance(g))
    names = [name for name, _ in directory_instances(tmp_path)]
    assert names == ["b0.lstc", "b1.lstc"]


def test_summary_lines():
    specs = parse_sweep("model=gnm,n=8,m=12,q=4,wmax=5,count=3,seed=0")
    lines = summarize(run_bench(sweep_instances(specs), ["unweighted", "weighted"]))
    assert [line.split(":")[0] for line in lines] == ["unweighted", "weighted"]
    assert all("max_ratio=" in line and "mean_ratio=" in line for line in lines)


def test_sweep_parsing():
    specs = parse_sweep("model=layered,n=11,q=3,wmax=2,count=2,seed=7,directed=1,width=3")
    assert [s.seed for s in specs] == [7, 8]
    assert specs[0].directed and specs[0].width == 3 and specs[0].m is None
