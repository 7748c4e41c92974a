"""Complete multipartite graphs and exact edge counts on count-vector selections.

Vertices are labeled ``(part, offset)``; parts are indexed after sorting the
partite sizes non-increasingly. Selections are stored as per-part counts,
since vertices of one partite set are interchangeable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .errors import DomainError, InputError

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class MultipartiteGraph:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise InputError("a graph needs at least one partite set")
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise InputError(f"partite sizes must be positive integers, got {self.parts}")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise InputError("parts must be sorted non-increasing; use build_graph()")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def padded(self, length: int) -> tuple[int, ...]:
        """Partite sizes padded with zeros to at least ``length`` entries."""
        return self.parts + (0,) * max(0, length - self.k)

    def vertices(self) -> list[Vertex]:
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def edges(self) -> list[Edge]:
        """All cross-part vertex pairs in canonical (lexicographic) order."""
        return [(u, v) for u, v in combinations(self.vertices(), 2) if u[0] != v[0]]

    def is_vertex(self, v: Vertex) -> bool:
        i, j = v
        return 0 <= i < self.k and 0 <= j < self.parts[i]

    def __str__(self) -> str:
        return "K_{" + ",".join(map(str, self.parts)) + "}"


@dataclass(frozen=True)
class VertexSelection:
    counts: tuple[int, ...]

    @property
    def r(self) -> int:
        return sum(self.counts)


def build_graph(sizes: Sequence[int]) -> MultipartiteGraph:
    sizes = list(sizes)
    if not sizes:
        raise InputError("empty list of partite sizes")
    for p in sizes:
        if isinstance(p, bool) or not isinstance(p, int) or p < 1:
            raise InputError(f"partite sizes must be positive integers, got {sizes}")
    return MultipartiteGraph(tuple(sorted(sizes, reverse=True)))


def parse_parts(text: str) -> MultipartiteGraph:
    """Parse the comma-separated text form, e.g. ``"4,3,1"``."""
    try:
        sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"cannot parse partite sizes from {text!r}") from None
    return build_graph(sizes)


def format_parts(g: MultipartiteGraph) -> str:
    return ",".join(map(str, g.parts))


def require_multipartite(g: MultipartiteGraph) -> None:
    if g.k < 2:
        raise DomainError(f"{g} has a single partite set; at least two are required")


def selection(g: MultipartiteGraph, counts: Sequence[int]) -> VertexSelection:
    """Validate ``counts`` against ``g`` and wrap them."""
    counts = tuple(counts)
    if len(counts) != g.k:
        raise InputError(f"expected {g.k} counts, got {len(counts)}")
    for a, p in zip(counts, g.parts):
        if not 0 <= a <= p:
            raise InputError(f"count {a} outside [0, {p}]")
    return VertexSelection(counts)


def _as_selection(g: MultipartiteGraph, sel) -> VertexSelection:
    return selection(g, sel.counts if isinstance(sel, VertexSelection) else sel)


def complement(g: MultipartiteGraph, sel) -> VertexSelection:
    sel = _as_selection(g, sel)
    return VertexSelection(tuple(p - a for p, a in zip(g.parts, sel.counts)))


def edge_count(g: MultipartiteGraph) -> int:
    n = g.n
    return (n * n - sum(p * p for p in g.parts)) // 2


def induced_count(counts: Sequence[int]) -> int:
    """Edges of the complete multipartite graph whose parts have sizes ``counts``."""
    return comb(sum(counts), 2) - sum(comb(a, 2) for a in counts)


def induced_edge_count(g: MultipartiteGraph, sel) -> int:
    """|E(G[S])| for the selection S."""
    return induced_count(_as_selection(g, sel).counts)


def boundary_edge_count(g: MultipartiteGraph, sel) -> int:
    """|E_G(S)|: edges with at least one endpoint in S."""
    return edge_count(g) - induced_edge_count(g, complement(g, sel))


def sigma_boundary_count(g: MultipartiteGraph, sel) -> int:
    """|E_G(S)| summed vertex by vertex, subtracting each doubly counted edge once."""
    sel = _as_selection(g, sel)
    picked = [i for i, a in enumerate(sel.counts) for _ in range(a)]
    s = len(picked)
    degree_sum = s * g.n - sum(g.parts[i] for i in picked)
    doubles = sum(1 for x, y in combinations(picked, 2) if x != y)
    return degree_sum - doubles


def selections(g: MultipartiteGraph, r: int | None = None) -> Iterator[VertexSelection]:
    """Every count vector (optionally of total ``r``), lexicographically."""

    def rec(i: int, left: int | None, prefix: tuple[int, ...]):
        if i == g.k:
            if left is None or left == 0:
                yield VertexSelection(prefix)
            return
        hi = g.parts[i] if left is None else min(g.parts[i], left)
        for a in range(hi + 1):
            yield from rec(i + 1, None if left is None else left - a, prefix + (a,))

    if r is not None and not 0 <= r <= g.n:
        return
    yield from rec(0, r, ())


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``n`` as non-increasing tuples, lexicographically descending."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def enumerate_graphs(max_n: int, min_n: int = 2) -> Iterator[MultipartiteGraph]:
    """All complete multipartite graphs with k >= 2 and min_n <= n <= max_n.

    Ordered by n, then by the partite vector ascending lexicographically.
    """
    for n in range(max(2, min_n), max_n + 1):
        for parts in sorted(p for p in partitions(n) if len(p) >= 2):
            yield MultipartiteGraph(parts)
