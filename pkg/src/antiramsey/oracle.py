"""Exhaustive ground-truth engines over labeled vertices and edges.

Nothing here uses the count-vector formulas of the other modules: adjacency
is tested pair by pair on labeled vertices, so these results can referee them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import DomainError, InputError, ResourceError
from .extremal import VertexPartition
from .multipartite import MultipartiteGraph, Vertex, require_multipartite

DEFAULT_MAX_N = 10
DEFAULT_MAX_EDGES = 12

LabeledEdge = tuple[Vertex, Vertex]


def _check_n_cap(g: MultipartiteGraph, max_n: int) -> None:
    if g.n > max_n:
        raise ResourceError(f"{g} has n={g.n} > oracle cap {max_n}")


def labeled_edges(g: MultipartiteGraph) -> list[LabeledEdge]:
    vs = g.vertices()
    return [(u, v) for u, v in combinations(vs, 2) if u[0] != v[0]]


def _induced_pairs(block: Sequence[Vertex]) -> int:
    return sum(1 for u, v in combinations(block, 2) if u[0] != v[0])


def _boundary_pairs(edges: Sequence[LabeledEdge], chosen: set[Vertex]) -> int:
    return sum(1 for u, v in edges if u in chosen or v in chosen)


def _count_matrix(g: MultipartiteGraph, blocks: Sequence[Sequence[Vertex]]) -> VertexPartition:
    """Canonical count matrix: blocks by size desc, then by count column desc."""
    cols = []
    for block in blocks:
        c = Counter(v[0] for v in block)
        cols.append(tuple(c.get(i, 0) for i in range(g.k)))
    cols.sort(key=lambda col: (sum(col), col), reverse=True)
    return VertexPartition(tuple(tuple(col[i] for col in cols) for i in range(g.k)))


def set_partitions(items: Sequence, max_pair: int | None = None) -> Iterator[list[list]]:
    """Set partitions of ``items`` via restricted growth strings.

    With ``max_pair`` set, partial partitions whose two largest blocks
    already exceed it are cut off while growing.
    """
    items = list(items)
    n = len(items)
    blocks: list[list] = []

    def top_two() -> int:
        if len(blocks) < 2:
            return len(blocks[0]) if blocks else 0
        a, b = sorted((len(x) for x in blocks), reverse=True)[:2]
        return a + b

    def rec(i: int):
        if i == n:
            yield [list(b) for b in blocks]
            return
        x = items[i]
        for b in blocks:
            b.append(x)
            if max_pair is None or top_two() <= max_pair:
                yield from rec(i + 1)
            b.pop()
        blocks.append([x])
        if max_pair is None or top_two() <= max_pair:
            yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def oracle_ellq(
    g: MultipartiteGraph, q: int, max_n: int = DEFAULT_MAX_N
) -> tuple[int, VertexPartition]:
    """Max induced edges over vertex partitions with >= 2 blocks whose top two sizes sum <= q."""
    require_multipartite(g)
    if not 2 <= q <= g.n - 1:
        raise DomainError(f"q={q} outside [2, {g.n - 1}] for {g}")
    _check_n_cap(g, max_n)
    best_value, best_blocks = -1, None
    for blocks in set_partitions(g.vertices(), max_pair=q):
        if len(blocks) < 2:
            continue
        value = sum(_induced_pairs(b) for b in blocks)
        if value > best_value:
            best_value, best_blocks = value, blocks
    return best_value, _count_matrix(g, best_blocks)


def oracle_min_boundary(g: MultipartiteGraph, r: int, max_n: int = DEFAULT_MAX_N) -> int:
    """Min number of edges touching an r-subset, over all labeled r-subsets."""
    if not 1 <= r <= g.n:
        raise DomainError(f"r={r} outside [1, {g.n}] for {g}")
    _check_n_cap(g, max_n)
    edges = labeled_edges(g)
    return min(_boundary_pairs(edges, set(s)) for s in combinations(g.vertices(), r))


def oracle_boundary_minimizers(
    g: MultipartiteGraph, r: int, max_n: int = DEFAULT_MAX_N
) -> tuple[int, set[tuple[int, ...]]]:
    """Minimum boundary size and the count shapes of every labeled minimizer."""
    if not 1 <= r <= g.n:
        raise DomainError(f"r={r} outside [1, {g.n}] for {g}")
    _check_n_cap(g, max_n)
    edges = labeled_edges(g)
    best, shapes = None, set()
    for s in combinations(g.vertices(), r):
        value = _boundary_pairs(edges, set(s))
        c = Counter(v[0] for v in s)
        shape = tuple(c.get(i, 0) for i in range(g.k))
        if best is None or value < best:
            best, shapes = value, {shape}
        elif value == best:
            shapes.add(shape)
    return best, shapes


def max_induced_subgraph(
    g: MultipartiteGraph, b: int, max_n: int = DEFAULT_MAX_N
) -> tuple[int, list[tuple[int, ...]]]:
    """Max |E(G[T])| over b-subsets T, with every maximizing count shape (sorted)."""
    if not 1 <= b <= g.n:
        raise DomainError(f"b={b} outside [1, {g.n}] for {g}")
    _check_n_cap(g, max_n)
    best, shapes = -1, set()
    for t in combinations(g.vertices(), b):
        value = _induced_pairs(t)
        c = Counter(v[0] for v in t)
        shape = tuple(c.get(i, 0) for i in range(g.k))
        if value > best:
            best, shapes = value, {shape}
        elif value == best:
            shapes.add(shape)
    return best, sorted(shapes)


def level_counts(g: MultipartiteGraph) -> list[int]:
    """a_j = number of partite sets with at least j vertices, for j = 1..p_1."""
    return [sum(1 for p in g.parts if p >= j) for j in range(1, g.parts[0] + 1)]


def level_shape_matches(g: MultipartiteGraph, counts: Sequence[int]) -> bool:
    """Whether ``counts`` has the level-filling shape of a densest b-subset.

    With h the level where the running sum of a_j first reaches b: parts of
    size <= h - 2 are taken whole, every other part contributes h - 1 or h,
    and exactly b - (a_1 + ... + a_{h-1}) parts contribute h.
    """
    b = sum(counts)
    levels = level_counts(g)
    below, h = 0, None
    for idx, a in enumerate(levels, start=1):
        if below < b <= below + a:
            h = idx
            break
        below += a
    if h is None:
        return False
    for p, c in zip(g.parts, counts):
        if p <= h - 2:
            if c != p:
                return False
        elif not h - 1 <= c <= h:
            return False
    return sum(1 for c in counts if c == h) == b - below


# --- colorings and rainbow trees -------------------------------------------


@dataclass(frozen=True)
class Coloring:
    graph: MultipartiteGraph
    colors: dict  # LabeledEdge -> color in 1..t

    @property
    def t(self) -> int:
        return len(set(self.colors.values()))

    def classes(self) -> dict[int, list[LabeledEdge]]:
        out: dict[int, list[LabeledEdge]] = {}
        for e in sorted(self.colors):
            out.setdefault(self.colors[e], []).append(e)
        return dict(sorted(out.items()))


def validate_coloring(coloring: Coloring) -> None:
    g = coloring.graph
    expected = set(labeled_edges(g))
    got = set(coloring.colors)
    if got != expected:
        missing, extra = expected - got, got - expected
        raise InputError(
            f"coloring does not cover E({g}) exactly: "
            f"{len(missing)} edges missing, {len(extra)} foreign pairs"
        )
    used = set(coloring.colors.values())
    if used != set(range(1, len(used) + 1)):
        raise InputError(f"colors must be exactly 1..t, got {sorted(used)}")


@dataclass(frozen=True)
class RainbowTree:
    edges: tuple[LabeledEdge, ...]
    colors: tuple[int, ...]


def _rainbow_tree_search(
    adj: dict[Vertex, list[tuple[Vertex, int, LabeledEdge]]],
    q: int,
    roots: Sequence[Vertex],
    seed: LabeledEdge | None = None,
    seed_color: int | None = None,
) -> RainbowTree | None:
    """Grow rainbow trees from canonical roots until one has q edges.

    A tree is only grown from its smallest vertex (or from ``seed`` if given);
    the frontier is extended in sorted order and revisits are skipped.
    """
    seen: set = set()

    def grow(verts: set, used: set, edges: list, root) -> RainbowTree | None:
        if len(edges) == q:
            return RainbowTree(tuple(edges), tuple(colors_of(edges)))
        key = (root, frozenset(edges))
        if key in seen:
            return None
        seen.add(key)
        for x in sorted(verts):
            for y, c, e in adj[x]:
                if y in verts or c in used:
                    continue
                if root is not None and y < root:
                    continue
                verts.add(y)
                used.add(c)
                edges.append(e)
                found = grow(verts, used, edges, root)
                if found:
                    return found
                edges.pop()
                used.discard(c)
                verts.discard(y)
        return None

    color_of = {e: c for x in adj for _, c, e in adj[x]}

    def colors_of(edges):
        return [color_of[e] for e in edges]

    if seed is not None:
        u, v = seed
        return grow({u, v}, {seed_color}, [seed], None)
    for r in roots:
        found = grow({r}, set(), [], r)
        if found:
            return found
    return None


def _adjacency(colors: dict) -> dict:
    adj: dict = {}
    for e, c in colors.items():
        u, v = e
        adj.setdefault(u, []).append((v, c, e))
        adj.setdefault(v, []).append((u, c, e))
    for x in adj:
        adj[x].sort()
    return adj


def find_rainbow_tree(coloring: Coloring, q: int) -> RainbowTree | None:
    """A q-edge subtree whose edges all have distinct colors, or None."""
    validate_coloring(coloring)
    g = coloring.graph
    if not 1 <= q <= g.n - 1:
        raise DomainError(f"q={q} outside [1, {g.n - 1}] for {g}")
    if coloring.t < q:
        return None
    adj = _adjacency(coloring.colors)
    return _rainbow_tree_search(adj, q, sorted(adj))


def oracle_ar(
    g: MultipartiteGraph, q: int, max_edges: int = DEFAULT_MAX_EDGES
) -> tuple[int, Coloring]:
    """Largest t with a t-edge-coloring free of rainbow q-edge trees.

    Colorings are edge partitions in restricted-growth form. For each t from
    |E| down, partitions with exactly t classes are grown edge by edge and cut
    as soon as the colored edges contain a rainbow q-edge tree; the first
    complete survivor is returned.
    """
    require_multipartite(g)
    if not 2 <= q <= g.n - 1:
        raise DomainError(f"q={q} outside [2, {g.n - 1}] for {g}")
    edges = labeled_edges(g)
    m = len(edges)
    if m > max_edges:
        raise ResourceError(f"{g} has {m} edges > oracle cap {max_edges}")

    for t in range(m, 0, -1):
        found = _colorings_without_rainbow(edges, q, t)
        if found is not None:
            return t, Coloring(g, found)
    raise AssertionError("the one-color coloring always avoids rainbow trees")


def _colorings_without_rainbow(edges: list, q: int, t: int) -> dict | None:
    m = len(edges)
    assigned: dict = {}
    adj: dict = {}

    def add(e, c):
        assigned[e] = c
        u, v = e
        adj.setdefault(u, []).append((v, c, e))
        adj.setdefault(v, []).append((u, c, e))

    def remove(e):
        del assigned[e]
        u, v = e
        adj[u].pop()
        adj[v].pop()

    def rec(i: int, used: int) -> dict | None:
        if i == m:
            return dict(assigned) if used == t else None
        e = edges[i]
        for c in range(1, min(used + 1, t) + 1):
            new_used = max(used, c)
            if new_used + (m - i - 1) < t:
                continue
            add(e, c)
            ok = new_used < q or _rainbow_tree_search(adj, q, (), seed=e, seed_color=c) is None
            if ok:
                found = rec(i + 1, new_used)
                if found is not None:
                    return found
            remove(e)
        return None

    return rec(0, 0)
