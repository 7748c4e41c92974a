"""Greedy minimum-degree selection and minimum boundary-edge counts.

In a complete multipartite graph a vertex has minimum degree exactly when its
partite set is among the largest remaining ones, so the greedy walk only has
to track the leftover part sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .multipartite import (
    MultipartiteGraph,
    VertexSelection,
    _as_selection,
    boundary_edge_count,
    require_multipartite,
)


@dataclass(frozen=True)
class GreedyTrace:
    selection: VertexSelection
    pick_order: tuple[int, ...]
    degrees_at_pick: tuple[int, ...]

    def picked_vertices(self) -> list[tuple[int, int]]:
        """Labeled vertices in pick order, lowest unused offset first."""
        used: dict[int, int] = {}
        out = []
        for i in self.pick_order:
            out.append((i, used.get(i, 0)))
            used[i] = used.get(i, 0) + 1
        return out


def _check_r(g: MultipartiteGraph, r: int) -> None:
    require_multipartite(g)
    if not 1 <= r <= g.n:
        raise DomainError(f"r={r} outside [1, {g.n}] for {g}")


def algorithm_a(g: MultipartiteGraph, r: int) -> GreedyTrace:
    """Pick ``r`` vertices one at a time, each of minimum degree in what remains.

    Ties go to the lowest part index among the largest remaining parts.
    """
    _check_r(g, r)
    left = list(g.parts)
    remaining = g.n
    order, degrees = [], []
    for _ in range(r):
        big = max(left)
        i = left.index(big)
        order.append(i)
        degrees.append(remaining - big)
        left[i] -= 1
        remaining -= 1
    counts = tuple(p - x for p, x in zip(g.parts, left))
    return GreedyTrace(VertexSelection(counts), tuple(order), tuple(degrees))


def is_min_selection(g: MultipartiteGraph, sel) -> bool:
    """True iff no part left over is 2+ larger than another part that was touched."""
    require_multipartite(g)
    sel = _as_selection(g, sel)
    left = [p - a for p, a in zip(g.parts, sel.counts)]
    for i, li in enumerate(left):
        for j, lj in enumerate(left):
            if i != j and li >= lj + 2 and sel.counts[j] != 0:
                return False
    return True


def min_boundary_edges(g: MultipartiteGraph, r: int) -> int:
    return boundary_edge_count(g, algorithm_a(g, r).selection)


def closed_form_boundary(g: MultipartiteGraph, r: int) -> int:
    """Minimum |E_G(S)| over r-subsets for r in {2, 3, 4} by explicit case formulas.

    Missing partite sets count as size 0; guards are tried top to bottom.
    """
    require_multipartite(g)
    if r not in (2, 3, 4):
        raise DomainError(f"closed forms exist only for r in {{2,3,4}}, got r={r}")
    if r > g.n:
        raise DomainError(f"r={r} exceeds n={g.n}")
    n = g.n
    p1, p2, p3, p4 = g.padded(4)[:4]
    if r == 2:
        if p1 > p2:
            return 2 * n - 2 * p1
        return 2 * n - p1 - p2 - 1
    if r == 3:
        if p1 >= p2 + 2:
            return 3 * n - 3 * p1
        if p2 + 1 >= p1 >= p3 + 1:
            return 3 * n - 2 * p1 - p2 - 2
        return 3 * n - p1 - p2 - p3 - 3
    if p1 >= p2 + 3:
        return 4 * n - 4 * p1
    if p1 == p2 + 2 or p1 == p2 + 1 >= p3 + 2:
        return 4 * n - 3 * p1 - p2 - 3
    if p1 == p2 >= p3 + 1:
        return 4 * n - 2 * p1 - 2 * p2 - 4
    if p4 + 1 <= p1 <= p2 + 1 == p3 + 1:
        return 4 * n - 2 * p1 - p2 - p3 - 5
    if p1 == p2 == p3 == p4:
        return 4 * n - p1 - p2 - p3 - p4 - 6
    raise AssertionError(f"no case of the r=4 formula matched {g.parts}")
