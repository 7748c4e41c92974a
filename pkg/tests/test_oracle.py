import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from antiramsey.errors import DomainError, InputError, ResourceError
from antiramsey.multipartite import build_graph, enumerate_graphs, induced_edge_count, selections
from antiramsey.oracle import (
    Coloring,
    find_rainbow_tree,
    labeled_edges,
    level_counts,
    level_shape_matches,
    max_induced_subgraph,
    oracle_ar,
    oracle_ellq,
    oracle_min_boundary,
    set_partitions,
)


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def rainbow_tree_by_subsets(coloring, q):
    """Any q edges that are pairwise differently colored and form a tree."""
    for sub in combinations(sorted(coloring.colors), q):
        if len({coloring.colors[e] for e in sub}) < q:
            continue
        verts = {v for e in sub for v in e}
        if len(verts) != q + 1:
            continue
        parent = {v: v for v in verts}

        def root(x):
            while parent[x] != x:
                x = parent[x]
            return x

        acyclic = True
        for u, v in sub:
            ru, rv = root(u), root(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            return sub
    return None


def check_tree(tree, coloring, q):
    assert len(tree.edges) == q
    assert len(set(tree.colors)) == q
    assert [coloring.colors[e] for e in tree.edges] == list(tree.colors)
    verts = {v for e in tree.edges for v in e}
    assert len(verts) == q + 1


@pytest.mark.parametrize("n", range(0, 9))
def test_set_partitions_count_is_bell(n):
    parts = list(set_partitions(range(n)))
    assert len(parts) == bell(n)
    assert len({tuple(tuple(b) for b in p) for p in parts}) == bell(n)


def test_set_partitions_pruning_matches_filter():
    for q in range(2, 7):
        pruned = list(set_partitions(range(7), max_pair=q))
        full = [
            p for p in set_partitions(range(7))
            if sum(sorted(map(len, p), reverse=True)[:2]) <= q
        ]
        assert len(pruned) == len(full)


@pytest.mark.parametrize("parts, q, value", [([3, 3, 3], 6, 9), ([2, 2], 2, 0), ([4, 3], 4, 3)])
def test_oracle_ellq(parts, q, value):
    g = build_graph(parts)
    got, cert = oracle_ellq(g, q)
    assert got == value == cert.value
    assert cert.is_feasible(q) and cert.row_sums == g.parts


def test_oracle_caps():
    with pytest.raises(ResourceError):
        oracle_ellq(build_graph([6, 5]), 3)
    with pytest.raises(ResourceError):
        oracle_min_boundary(build_graph([6, 5]), 3)
    with pytest.raises(ResourceError):
        oracle_ar(build_graph([3, 3, 1]), 3)
    with pytest.raises(ResourceError):
        max_induced_subgraph(build_graph([6, 5]), 2)
    assert oracle_ellq(build_graph([2, 2]), 2, max_n=4)[0] == 0


def test_oracle_domain():
    with pytest.raises(DomainError):
        oracle_ellq(build_graph([3]), 2)
    with pytest.raises(DomainError):
        oracle_ellq(build_graph([2, 1]), 3)
    with pytest.raises(DomainError):
        oracle_min_boundary(build_graph([2, 1]), 0)


@pytest.mark.parametrize("parts, r, value", [([3, 3], 2, 5), ([4, 3, 1], 3, 11), ([2, 1], 1, 1)])
def test_oracle_min_boundary(parts, r, value):
    assert oracle_min_boundary(build_graph(parts), r) == value


def test_monochromatic_has_no_rainbow_2_tree():
    for g in enumerate_graphs(6, min_n=3):
        mono = Coloring(g, {e: 1 for e in labeled_edges(g)})
        assert find_rainbow_tree(mono, 2) is None
        assert find_rainbow_tree(mono, 1) is not None


def test_all_distinct_k22_has_spanning_rainbow_tree():
    g = build_graph([2, 2])
    c = Coloring(g, {e: i + 1 for i, e in enumerate(labeled_edges(g))})
    tree = find_rainbow_tree(c, 3)
    assert tree is not None
    check_tree(tree, c, 3)


def test_rainbow_tree_found_from_non_minimal_root():
    # the only rainbow 2-path lives away from vertex (0, 0)
    g = build_graph([2, 2])
    edges = labeled_edges(g)
    colors = {e: 1 for e in edges}
    colors[((0, 1), (1, 0))] = 2
    c = Coloring(g, colors)
    tree = find_rainbow_tree(c, 2)
    assert tree is not None
    check_tree(tree, c, 2)


@given(st.sampled_from([(2, 2), (3, 2), (2, 1, 1), (2, 2, 1), (3, 1, 1), (1, 1, 1, 1)]), st.randoms(use_true_random=False), st.data())
def test_rainbow_search_against_subset_scan(parts, rnd, data):
    g = build_graph(parts)
    edges = labeled_edges(g)
    t = data.draw(st.integers(1, len(edges)))
    # surjective random coloring with t classes
    labels = list(range(1, t + 1)) + [rnd.randint(1, t) for _ in range(len(edges) - t)]
    rnd.shuffle(labels)
    c = Coloring(g, dict(zip(edges, labels)))
    q = data.draw(st.integers(1, g.n - 1))
    tree = find_rainbow_tree(c, q)
    assert (tree is None) == (rainbow_tree_by_subsets(c, q) is None)
    if tree is not None:
        check_tree(tree, c, q)


def test_find_rainbow_tree_rejects_malformed():
    g = build_graph([2, 1])
    edges = labeled_edges(g)
    with pytest.raises(InputError):
        find_rainbow_tree(Coloring(g, {edges[0]: 1}), 1)
    with pytest.raises(InputError):
        find_rainbow_tree(Coloring(g, {e: 2 for e in edges}), 1)
    with pytest.raises(DomainError):
        find_rainbow_tree(Coloring(g, {e: 1 for e in edges}), 3)


@pytest.mark.parametrize("parts, q, value", [([2, 2], 3, 2), ([3, 3], 4, 4), ([2, 1], 2, 1)])
def test_oracle_ar(parts, q, value):
    g = build_graph(parts)
    got, witness = oracle_ar(g, q)
    assert got == value == witness.t
    assert find_rainbow_tree(witness, q) is None


def test_oracle_ar_k22_by_full_enumeration():
    # all 15 partitions of the 4 edges, checked with the subset scan
    g = build_graph([2, 2])
    edges = labeled_edges(g)
    best = 0
    for blocks in set_partitions(edges):
        c = Coloring(g, {e: i + 1 for i, b in enumerate(blocks) for e in b})
        if rainbow_tree_by_subsets(c, 3) is None:
            best = max(best, len(blocks))
    assert best == 2 == oracle_ar(g, 3)[0]


def test_max_induced_subgraph_examples():
    assert max_induced_subgraph(build_graph([4, 3, 1]), 5) == (8, [(2, 2, 1)])
    assert max_induced_subgraph(build_graph([3, 3]), 6) == (9, [(3, 3)])
    assert level_counts(build_graph([4, 3, 1])) == [3, 2, 2, 1]


def condition_ii(counts, parts):
    for i, ci in enumerate(counts):
        for j, cj in enumerate(counts):
            if i != j and ci >= cj + 2 and cj != parts[j]:
                return False
    return True


def test_densest_subset_characterization():
    for g in enumerate_graphs(8):
        for b in range(1, g.n + 1):
            best, shapes = max_induced_subgraph(g, b)
            for sel in selections(g, b):
                is_max = sel.counts in shapes
                assert is_max == condition_ii(sel.counts, g.parts), (g, sel)
                assert is_max == level_shape_matches(g, sel.counts), (g, sel)
                assert is_max == (induced_edge_count(g, sel) == best)
            # all maximizers are the same multiset of part sizes
            assert len({tuple(sorted(s)) for s in shapes}) == 1


def test_oracle_results_independent_of_vertex_order():
    g = build_graph([3, 2, 1])
    for q in range(2, g.n):
        value, _ = oracle_ellq(g, q)
        vs = g.vertices()
        random.Random(q).shuffle(vs)
        shuffled = max(
            sum(sum(1 for u, v in combinations(b, 2) if u[0] != v[0]) for b in p)
            for p in set_partitions(vs, max_pair=q)
            if len(p) >= 2
        )
        assert shuffled == value
