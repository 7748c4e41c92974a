"""The extremal subgraph size l_q(G).

l_q(G) is the largest number of edges of a disconnected spanning subgraph of G
in which any two components together have at most q vertices. Optimal
components are induced, so a solution is a partition of V(G) into blocks,
recorded as a k x m count matrix (rows = partite sets, columns = blocks).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import DomainError, InputError, ResourceError
from .greedy import algorithm_a, min_boundary_edges
from .multipartite import MultipartiteGraph, edge_count, require_multipartite

DEFAULT_NODE_BUDGET = 10**7

METHODS = ("auto", "closed-form", "sequence-solver", "oracle")

# (parts, q) -> l_q for the pairs where the boundary-complement formula is too small
EXCEPTIONAL = {
    ((3, 3), 4): 3,
    ((4, 3), 4): 3,
    ((3, 3, 3), 6): 9,
}


def default_node_budget() -> int:
    raw = os.environ.get("ANTIRAMSEY_NODE_BUDGET")
    if raw is None:
        return DEFAULT_NODE_BUDGET
    try:
        budget = int(raw)
    except ValueError:
        raise InputError(f"ANTIRAMSEY_NODE_BUDGET must be an integer, got {raw!r}") from None
    if budget < 1:
        raise InputError("ANTIRAMSEY_NODE_BUDGET must be positive")
    return budget


@dataclass(frozen=True)
class VertexPartition:
    assignment: tuple[tuple[int, ...], ...]  # assignment[i][j]: part i vertices in block j

    @property
    def block_sizes(self) -> tuple[int, ...]:
        if not self.assignment:
            return ()
        return tuple(sum(col) for col in zip(*self.assignment))

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.assignment)

    @property
    def value(self) -> int:
        total = 0
        for col in zip(*self.assignment):
            total += comb(sum(col), 2) - sum(comb(a, 2) for a in col)
        return total

    def is_feasible(self, q: int) -> bool:
        sizes = sorted(self.block_sizes, reverse=True)
        return len(sizes) >= 2 and sizes[0] + sizes[1] <= q

    def blocks(self) -> list[list[tuple[int, int]]]:
        """Labeled vertex blocks; each part's offsets are handed out block by block."""
        k = len(self.assignment)
        offset = [0] * k
        out = []
        for j in range(len(self.block_sizes)):
            block = []
            for i in range(k):
                a = self.assignment[i][j]
                block.extend((i, offset[i] + x) for x in range(a))
                offset[i] += a
            out.append(block)
        return out

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.assignment]


@dataclass(frozen=True)
class ExtremalResult:
    value: int
    method: str
    certificate: VertexPartition | None = field(default=None, compare=False)


def _check_q(g: MultipartiteGraph, q: int) -> None:
    require_multipartite(g)
    if not 2 <= q <= g.n - 1:
        raise DomainError(f"q={q} outside [2, {g.n - 1}] for {g}")


def candidate_sequences(n: int, q: int) -> list[tuple[int, ...]]:
    """Block-size sequences an optimal partition can be assumed to have.

    Shapes are (h1, h2 x t, h3) with h3 <= h2, and (h1, h2 x t1, 1 x t2) with
    t1, t2 >= 2 and h2 >= 2; always h1 + h2 = q and h1 >= h2. Ordered by
    descending h2, first shape before second.
    """
    if not 2 <= q <= n - 1:
        raise DomainError(f"q={q} outside [2, {n - 1}] for n={n}")
    rest = n - q
    out: list[tuple[int, ...]] = []
    for h2 in range(min(q // 2, rest), 0, -1):
        h1 = q - h2
        # (t - 1) * h2 + h3 = rest, 1 <= h3 <= h2
        t = (rest - 1) // h2 + 1
        h3 = rest - (t - 1) * h2
        if t >= 2 or h3 == h2:
            out.append((h1,) + (h2,) * t + (h3,))
        if h2 >= 2:
            # (t1 - 1) * h2 + t2 = rest
            t1 = 2
            while (t1 - 1) * h2 + 2 <= rest:
                t2 = rest - (t1 - 1) * h2
                out.append((h1,) + (h2,) * t1 + (1,) * t2)
                t1 += 1
    seen = set()
    return [s for s in out if not (s in seen or seen.add(s))]


def _fill_cost(total: int, caps: Sequence[int]) -> int:
    """Min sum of C(x_i, 2) with sum x_i = total and 0 <= x_i <= caps[i]."""
    caps = sorted(c for c in caps if c > 0)
    cost = 0
    m = len(caps)
    for idx, c in enumerate(caps):
        share = -(-total // (m - idx)) if m - idx else 0
        if c <= share:
            x = c
        else:
            # the remaining open cells all take a balanced share
            base, extra = divmod(total, m - idx)
            return cost + extra * comb(base + 1, 2) + (m - idx - extra) * comb(base, 2)
        cost += comb(x, 2)
        total -= x
    return cost


def _lower_bound(rows_left: Sequence[int], cols: Sequence[int]) -> int:
    if not cols:
        return 0
    by_col = sum(_fill_cost(s, rows_left) for s in cols)
    by_row = sum(_fill_cost(r, [min(r, s) for s in cols]) for r in rows_left)
    return max(by_col, by_row)


def best_assignment(
    g: MultipartiteGraph,
    sizes: Sequence[int],
    node_budget: int | None = None,
) -> VertexPartition:
    """Count matrix with row sums ``g.parts`` and column sums ``sizes`` of maximum value.

    Exact branch-and-bound on the cost sum C(a_ij, 2); among optima the
    lexicographically smallest matrix (read block by block) is returned.
    Raises ResourceError when the node budget runs out.
    """
    sizes = tuple(sizes)
    if any(s < 1 for s in sizes) or list(sizes) != sorted(sizes, reverse=True):
        raise InputError(f"block sizes must be positive and non-increasing, got {sizes}")
    if sum(sizes) != g.n:
        raise InputError(f"block sizes sum to {sum(sizes)}, expected n={g.n}")
    budget = default_node_budget() if node_budget is None else node_budget
    k, m = g.k, len(sizes)

    best_cost = [None]
    best_cols: list[tuple[int, ...]] = []
    cols: list[tuple[int, ...]] = []
    nodes = [0]

    def columns(total: int, rows_left: list[int], i: int, prefix: list[int]):
        if i == k - 1:
            if total <= rows_left[i]:
                yield tuple(prefix) + (total,)
            return
        tail_cap = sum(rows_left[i + 1:])
        for a in range(max(0, total - tail_cap), min(total, rows_left[i]) + 1):
            prefix.append(a)
            yield from columns(total - a, rows_left, i + 1, prefix)
            prefix.pop()

    def search(j: int, rows_left: list[int], cost: int) -> None:
        nodes[0] += 1
        if nodes[0] > budget:
            raise ResourceError(f"node budget {budget} exhausted in best_assignment({g}, {sizes})")
        if j == m:
            if best_cost[0] is None or cost < best_cost[0]:
                best_cost[0] = cost
                best_cols[:] = cols
            return
        for col in columns(sizes[j], rows_left, 0, []):
            # equal-size blocks are interchangeable: keep them in lexicographic order
            if j > 0 and sizes[j] == sizes[j - 1] and col < cols[-1]:
                continue
            c = cost + sum(comb(a, 2) for a in col)
            nxt = [r - a for r, a in zip(rows_left, col)]
            if best_cost[0] is not None and c + _lower_bound(nxt, sizes[j + 1:]) >= best_cost[0]:
                continue
            cols.append(col)
            search(j + 1, nxt, c)
            cols.pop()

    search(0, list(g.parts), 0)
    matrix = tuple(tuple(best_cols[j][i] for j in range(m)) for i in range(k))
    return VertexPartition(matrix)


def exceptional_lookup(g: MultipartiteGraph, q: int) -> int | None:
    return EXCEPTIONAL.get((g.parts, q))


def boundary_complement_value(g: MultipartiteGraph, q: int) -> int:
    """|E(G)| minus the fewest edges touching n - q + 1 vertices."""
    return edge_count(g) - min_boundary_edges(g, g.n - q + 1)


def _greedy_certificate(g: MultipartiteGraph, q: int) -> VertexPartition:
    # one block of the q - 1 unpicked vertices plus n - q + 1 singletons
    picked = algorithm_a(g, g.n - q + 1)
    singles = list(picked.pick_order)
    rows = []
    for i, p in enumerate(g.parts):
        row = [p - picked.selection.counts[i]]
        row.extend(1 if s == i else 0 for s in singles)
        rows.append(tuple(row))
    return VertexPartition(tuple(rows))


def sequence_solve(
    g: MultipartiteGraph, q: int, node_budget: int | None = None
) -> VertexPartition:
    """Best partition over all candidate block-size sequences.

    Ties prefer the lexicographically largest block-size sequence.
    """
    _check_q(g, q)
    best = None
    for sizes in candidate_sequences(g.n, q):
        part = best_assignment(g, sizes, node_budget)
        if best is None or part.value > best.value or (
            part.value == best.value and part.block_sizes > best.block_sizes
        ):
            best = part
    return best


def in_small_gap_range(g: MultipartiteGraph, q: int) -> bool:
    return g.n - 3 <= q <= g.n - 1


def in_large_gap_range(g: MultipartiteGraph, q: int) -> bool:
    return 5 * q >= 4 * g.n - 2 and q <= g.n - 1


def ellq(
    g: MultipartiteGraph,
    q: int,
    method: str = "auto",
    node_budget: int | None = None,
) -> ExtremalResult:
    """l_q(G) by the requested route.

    ``auto`` tries, in order: the exceptional table, the boundary-complement
    formula when n - 3 <= q, the same formula when 5q >= 4n - 2, and finally
    the exact sequence solver. ``closed-form`` refuses pairs outside the
    formula's range.
    """
    _check_q(g, q)
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")

    if method == "oracle":
        from .oracle import oracle_ellq

        value, cert = oracle_ellq(g, q)
        return ExtremalResult(value, "oracle", cert)

    if method == "sequence-solver":
        cert = sequence_solve(g, q, node_budget)
        return ExtremalResult(cert.value, "sequence-solver", cert)

    special = exceptional_lookup(g, q)
    if special is not None:
        cert = sequence_solve(g, q, node_budget)
        assert cert.value == special
        return ExtremalResult(special, "exceptional", cert)
    if in_small_gap_range(g, q):
        return ExtremalResult(
            boundary_complement_value(g, q), "closed-form-small-gap", _greedy_certificate(g, q)
        )
    if in_large_gap_range(g, q):
        return ExtremalResult(
            boundary_complement_value(g, q), "closed-form-large-gap", _greedy_certificate(g, q)
        )
    if method == "closed-form":
        raise DomainError(
            f"no closed form for {g} at q={q}: needs q >= n - 3 or 5q >= 4n - 2"
        )
    cert = sequence_solve(g, q, node_budget)
    return ExtremalResult(cert.value, "sequence-solver", cert)
