"""Regression scan: formula-side values against the exhaustive oracles."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .ar import anti_ramsey
from .errors import ResourceError
from .extremal import boundary_complement_value, ellq, in_small_gap_range
from .multipartite import MultipartiteGraph, edge_count, enumerate_graphs
from .oracle import oracle_ar, oracle_ellq


@dataclass
class ScanInstance:
    parts: tuple[int, ...]
    q: int
    formula: int
    oracle: int
    method: str
    agree: bool
    ar_formula: int | None = None
    ar_oracle: int | None = None
    ar_agree: bool | None = None
    strict_gap: bool = False
    conjecture_match: bool | None = None


@dataclass
class ScanReport:
    instances: list[ScanInstance] = field(default_factory=list)
    error: str | None = None

    @property
    def summary(self) -> dict:
        inst = self.instances
        ar_checked = [x for x in inst if x.ar_agree is not None]
        conj = [x for x in inst if x.conjecture_match is not None]
        out = {
            "instances": len(inst),
            "agreements": sum(x.agree for x in inst),
            "disagreements": sum(not x.agree for x in inst),
            "ar_checked": len(ar_checked),
            "ar_agreements": sum(x.ar_agree for x in ar_checked),
            "ar_disagreements": sum(not x.ar_agree for x in ar_checked),
            "exceptional_hits": [[list(x.parts), x.q] for x in inst if x.method == "exceptional"],
            "strict_gap_hits": [[list(x.parts), x.q] for x in inst if x.strict_gap],
        }
        if conj:
            out["conjecture_checked"] = len(conj)
            out["conjecture_matches"] = sum(x.conjecture_match for x in conj)
        return out

    @property
    def ok(self) -> bool:
        s = self.summary
        return s["disagreements"] == 0 and s["ar_disagreements"] == 0

    def to_dict(self) -> dict:
        return {
            "instances": [asdict(x) for x in self.instances],
            "summary": self.summary,
            "error": self.error,
        }

    def to_text(self) -> str:
        lines = []
        for x in self.instances:
            parts = ",".join(map(str, x.parts))
            line = f"{parts} q={x.q} ellq={x.formula} oracle={x.oracle} method={x.method}"
            line += " ok" if x.agree else " DISAGREE"
            if x.ar_agree is not None:
                line += f" ar={x.ar_formula} ar_oracle={x.ar_oracle}"
                line += " ok" if x.ar_agree else " DISAGREE"
            if x.strict_gap:
                line += " strict-gap"
            lines.append(line)
        s = self.summary
        lines.append(
            f"summary: {s['instances']} instances, {s['disagreements']} disagreements, "
            f"{s['ar_checked']} ar checks, {s['ar_disagreements']} ar disagreements"
        )
        lines.append(f"exceptional: {s['exceptional_hits']}")
        lines.append(f"strict-gap: {s['strict_gap_hits']}")
        if "conjecture_checked" in s:
            lines.append(
                f"conjecture range 3q >= 2n+1: boundary formula matched "
                f"{s['conjecture_matches']}/{s['conjecture_checked']}"
            )
        if self.error:
            lines.append(f"stopped: {self.error}")
        return "\n".join(lines)


def scan_instance(
    g: MultipartiteGraph,
    q: int,
    max_edges: int,
    conjecture: bool = False,
    node_budget: int | None = None,
) -> ScanInstance:
    res = ellq(g, q, "auto", node_budget)
    oracle_value, _ = oracle_ellq(g, q, max_n=g.n)
    inst = ScanInstance(g.parts, q, res.value, oracle_value, res.method, res.value == oracle_value)
    if in_small_gap_range(g, q):
        inst.strict_gap = oracle_value > boundary_complement_value(g, q)
    if edge_count(g) <= max_edges:
        inst.ar_formula = anti_ramsey(g, q, node_budget=node_budget).value
        inst.ar_oracle, _ = oracle_ar(g, q, max_edges=max_edges)
        inst.ar_agree = inst.ar_formula == inst.ar_oracle
    if conjecture and 3 * q >= 2 * g.n + 1:
        inst.conjecture_match = oracle_value == boundary_complement_value(g, q)
    return inst


def _work(args):
    return scan_instance(*args)


def scan(
    max_n: int,
    max_edges: int,
    conjecture: bool = False,
    jobs: int = 1,
    node_budget: int | None = None,
) -> ScanReport:
    """Check every graph with n <= max_n and every 2 <= q <= n - 1.

    The report is ordered by parts vector, then q. A ResourceError stops the
    scan; the instances finished before it are kept and ``error`` is set.
    """
    graphs = sorted(enumerate_graphs(max_n), key=lambda g: g.parts)
    tasks = [(g, q, max_edges, conjecture, node_budget) for g in graphs for q in range(2, g.n)]
    report = ScanReport()
    try:
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as pool:
                for inst in pool.map(_work, tasks):
                    report.instances.append(inst)
        else:
            for t in tasks:
                report.instances.append(_work(t))
    except ResourceError as exc:
        report.error = str(exc)
    return report
