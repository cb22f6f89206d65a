"""Independent re-check of a solution against its instance."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .fileio import SolutionRecord
from .graph import LabeledGraph, surviving_path


@dataclass
class VerifyReport:
    ok: bool
    messages: list[str] = field(default_factory=list)
    witness: Optional[list[int]] = None
    actual_weight: Optional[int] = None

    def __str__(self) -> str:
        return "\n".join(self.messages)


def verify(graph: LabeledGraph, sol: SolutionRecord) -> VerifyReport:
    if sol.status != "feasible":
        path = surviving_path(graph, graph.weights)
        if path is None:
            return VerifyReport(False, [f"STATUS {sol.status.upper()} CLAIMED, but removing "
                                        "all labels disconnects s and t"])
        return VerifyReport(True, [f"OK, status {sol.status}"])

    report = VerifyReport(True)
    unknown = [label for label in sol.labels if label not in graph.weights]
    if unknown:
        report.ok = False
        report.messages.append(f"UNKNOWN LABELS {unknown}")
    known = [label for label in sol.labels if label in graph.weights]
    actual = graph.weight_of(known)
    report.actual_weight = actual
    if actual != sol.weight:
        report.ok = False
        report.messages.append(f"WEIGHT MISMATCH (claimed {sol.weight}, actual {actual})")
    path = surviving_path(graph, known)
    if path is not None:
        report.ok = False
        report.witness = path
        report.messages.append("NOT A CUT: surviving s-t path " + " -> ".join(map(str, path)))
    if report.ok:
        report.messages.append(f"OK, weight {actual}, cut verified")
    return report
