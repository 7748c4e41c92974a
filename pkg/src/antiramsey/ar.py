"""ar(G, T_q) for complete multipartite G, with extremal witness colorings.

ar(G, T_q) = l_q(G) + 1. A witness takes an optimal block partition, gives
every edge inside a block its own color and puts all other edges in color 1.
Any q-edge tree must then use two crossing edges, so no tree is rainbow.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .extremal import ExtremalResult, ellq, in_large_gap_range
from .multipartite import MultipartiteGraph, edge_count, format_parts, parse_parts
from .oracle import Coloring, labeled_edges, validate_coloring


@dataclass(frozen=True)
class AntiRamseyResult:
    value: int
    ellq_value: int
    method: str
    extremal: ExtremalResult
    witness: Coloring | None = None


def anti_ramsey(
    g: MultipartiteGraph,
    q: int,
    method: str = "auto",
    witness: bool = False,
    node_budget: int | None = None,
) -> AntiRamseyResult:
    res = ellq(g, q, method, node_budget)
    coloring = _coloring_from(g, res) if witness else None
    return AntiRamseyResult(res.value + 1, res.value, res.method, res, coloring)


def ar_large_gap_fastpath(g: MultipartiteGraph, q: int) -> int | None:
    """|E| + 1 - (n - q + 1)(n - p_1) when 5q >= 4n - 2 and 5(p_1 - p_2) >= n + 2."""
    if g.k < 2 or not 2 <= q <= g.n - 1:
        return None
    n, p1, p2 = g.n, g.parts[0], g.parts[1]
    if not in_large_gap_range(g, q) or 5 * (p1 - p2) < n + 2:
        return None
    return edge_count(g) + 1 - (n - q + 1) * (n - p1)


def _coloring_from(g: MultipartiteGraph, res: ExtremalResult) -> Coloring:
    if res.certificate is None:
        raise RuntimeError(f"no certificate for l_q of {g}; cannot build a witness")
    block_of = {}
    for j, block in enumerate(res.certificate.blocks()):
        for v in block:
            block_of[v] = j
    colors = {}
    nxt = 2
    for u, v in labeled_edges(g):
        if block_of[u] == block_of[v]:
            colors[(u, v)] = nxt
            nxt += 1
        else:
            colors[(u, v)] = 1
    return Coloring(g, colors)


def witness_coloring(g: MultipartiteGraph, q: int, node_budget: int | None = None) -> Coloring:
    """An ar(G, T_q)-coloring with no rainbow q-edge tree."""
    return _coloring_from(g, ellq(g, q, "auto", node_budget))


def format_witness(coloring: Coloring, q: int) -> str:
    lines = [
        f"parts: {format_parts(coloring.graph)}",
        f"q: {q}",
        f"t: {coloring.t}",
    ]
    for (u, v), c in sorted(coloring.colors.items()):
        lines.append(f"{u[0]} {u[1]} {v[0]} {v[1]} {c}")
    return "\n".join(lines) + "\n"


def write_witness(path: str | Path, coloring: Coloring, q: int) -> None:
    Path(path).write_text(format_witness(coloring, q))


def parse_witness(text: str) -> tuple[Coloring, int]:
    """Parse the witness text format; returns the coloring and its header q."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    header = {}
    for ln in lines[:3]:
        key, sep, val = ln.partition(":")
        if not sep:
            raise InputError(f"bad witness header line {ln!r}")
        header[key.strip()] = val.strip()
    if set(header) != {"parts", "q", "t"}:
        raise InputError("witness header must have parts:, q: and t: lines")
    g = parse_parts(header["parts"])
    try:
        q, t = int(header["q"]), int(header["t"])
    except ValueError:
        raise InputError("q and t must be integers") from None
    colors = {}
    for ln in lines[3:]:
        fields = ln.split()
        if len(fields) != 5:
            raise InputError(f"bad edge line {ln!r}")
        try:
            i1, j1, i2, j2, c = map(int, fields)
        except ValueError:
            raise InputError(f"bad edge line {ln!r}") from None
        u, v = sorted([(i1, j1), (i2, j2)])
        if not (g.is_vertex(u) and g.is_vertex(v)) or u[0] == v[0]:
            raise InputError(f"{ln!r} is not an edge of {g}")
        if (u, v) in colors:
            raise InputError(f"edge {ln!r} listed twice")
        colors[(u, v)] = c
    coloring = Coloring(g, colors)
    validate_coloring(coloring)
    if coloring.t != t:
        raise InputError(f"header says t={t} but {coloring.t} colors are used")
    return coloring, q


def read_witness(path: str | Path) -> tuple[Coloring, int]:
    return parse_witness(Path(path).read_text())

