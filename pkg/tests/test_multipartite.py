from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from antiramsey.errors import InputError
from antiramsey.multipartite import (
    MultipartiteGraph,
    boundary_edge_count,
    build_graph,
    complement,
    edge_count,
    enumerate_graphs,
    induced_edge_count,
    parse_parts,
    selection,
    selections,
    sigma_boundary_count,
)

from conftest import graph_and_counts, graphs


def labeled_edges(parts):
    vs = [(i, j) for i, p in enumerate(parts) for j in range(p)]
    return [(u, v) for u, v in combinations(vs, 2) if u[0] != v[0]]


def partition_count(n):
    # p(n) by the coin-change recurrence
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


@pytest.mark.parametrize(
    "sizes, parts, n, k",
    [([1, 3, 4], (4, 3, 1), 8, 3), ([3, 3, 3], (3, 3, 3), 9, 3), ([5], (5,), 5, 1)],
)
def test_build_graph(sizes, parts, n, k):
    g = build_graph(sizes)
    assert (g.parts, g.n, g.k) == (parts, n, k)


@pytest.mark.parametrize("sizes", [[], [0, 2], [3, -1], [2.5, 1]])
def test_build_graph_rejects(sizes):
    with pytest.raises(InputError):
        build_graph(sizes)


def test_unsorted_direct_construction_rejected():
    with pytest.raises(InputError):
        MultipartiteGraph((1, 3))


def test_parse_parts_is_order_insensitive():
    assert parse_parts("1,4,3") == parse_parts("4,3,1") == build_graph([4, 3, 1])
    with pytest.raises(InputError):
        parse_parts("4,x")


@pytest.mark.parametrize("parts, expected", [([3, 3], 9), ([4, 3, 1], 19), ([3, 3, 3], 27)])
def test_edge_count(parts, expected):
    assert edge_count(build_graph(parts)) == expected


def test_edge_count_matches_labeled_pairs():
    for g in enumerate_graphs(10):
        assert edge_count(g) == len(labeled_edges(g.parts))


@pytest.mark.parametrize(
    "parts, counts, expected", [([3, 3], (2, 1), 2), ([3, 3, 3], (3, 3, 3), 27), ([4, 3, 1], (2, 2, 1), 8)]
)
def test_induced_edge_count(parts, counts, expected):
    assert induced_edge_count(build_graph(parts), counts) == expected


def test_induced_count_against_every_labeled_subset_of_that_shape():
    g = build_graph([4, 3, 1])
    edges = labeled_edges(g.parts)
    values = set()
    for subset in combinations(g.vertices(), 5):
        shape = tuple(sum(1 for v in subset if v[0] == i) for i in range(3))
        if shape == (2, 2, 1):
            s = set(subset)
            values.add(sum(1 for u, v in edges if u in s and v in s))
    assert values == {8}


@pytest.mark.parametrize(
    "parts, counts, expected", [([3, 3], (1, 1), 5), ([3, 3], (0, 0), 0), ([4, 3, 1], (3, 0, 0), 12)]
)
def test_boundary_edge_count(parts, counts, expected):
    assert boundary_edge_count(build_graph(parts), counts) == expected


def test_boundary_count_against_labeled_incidence():
    g = build_graph([4, 3, 1])
    chosen = {(0, 0), (0, 1), (0, 2)}
    assert sum(1 for u, v in labeled_edges(g.parts) if u in chosen or v in chosen) == 12


def test_invalid_counts_rejected():
    g = build_graph([3, 3])
    for bad in [(4, 0), (-1, 0), (1,), (1, 1, 1)]:
        with pytest.raises(InputError):
            induced_edge_count(g, bad)
        with pytest.raises(InputError):
            boundary_edge_count(g, bad)


def test_enumerate_graphs_small():
    assert [g.parts for g in enumerate_graphs(3)] == [(1, 1), (1, 1, 1), (2, 1)]
    four = {g.parts for g in enumerate_graphs(4) if g.n == 4}
    assert four == {(2, 2), (2, 1, 1), (1, 1, 1, 1), (3, 1)}


@pytest.mark.parametrize("n", range(2, 13))
def test_enumerate_graphs_counts(n):
    got = [g.parts for g in enumerate_graphs(n, min_n=n)]
    assert len(got) == len(set(got)) == partition_count(n) - 1
    assert partition_count(8) - 1 == 21


@given(graph_and_counts())
def test_complement_identity(gc):
    g, counts = gc
    assert boundary_edge_count(g, counts) + induced_edge_count(g, complement(g, counts)) == edge_count(g)


def test_sigma_formula_agrees_everywhere_up_to_n8():
    for g in enumerate_graphs(8):
        for sel in selections(g):
            assert sigma_boundary_count(g, sel) == boundary_edge_count(g, sel)


@given(graph_and_counts(max_part=3, max_k=3), st.randoms(use_true_random=False))
def test_exchangeability(gc, rnd):
    g, counts = gc
    edges = labeled_edges(g.parts)
    # any labeled subset with these counts, after shuffling offsets within parts
    chosen = set()
    for i, (p, a) in enumerate(zip(g.parts, counts)):
        offsets = list(range(p))
        rnd.shuffle(offsets)
        chosen.update((i, j) for j in offsets[:a])
    induced = sum(1 for u, v in edges if u in chosen and v in chosen)
    touching = sum(1 for u, v in edges if u in chosen or v in chosen)
    assert induced == induced_edge_count(g, counts)
    assert touching == boundary_edge_count(g, counts)


def test_selections_enumerates_all_count_vectors():
    g = build_graph([2, 1])
    assert [s.counts for s in selections(g)] == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]
    assert [s.counts for s in selections(g, 2)] == [(1, 1), (2, 0)]
    assert selection(g, (2, 1)).r == 3


@given(graphs())
def test_vertices_and_edges_canonical(g):
    edges = g.edges()
    assert edges == sorted(edges)
    assert all(u < v and u[0] != v[0] for u, v in edges)
    assert len(g.vertices()) == g.n
    assert all(g.is_vertex(v) for v in g.vertices())
    assert not g.is_vertex((g.k, 0)) and not g.is_vertex((0, g.parts[0]))


def test_induced_closed_form_sanity():
    g = build_graph([4, 3, 1])
    assert induced_edge_count(g, (2, 2, 1)) == comb(5, 2) - 1 - 1


def test_labeled_permutation_invariance_small():
    # swapping two offsets inside a part maps E(G) to itself
    g = build_graph([3, 2])
    edges = set(labeled_edges(g.parts))
    for perm in permutations(range(3)):
        relabel = {(0, j): (0, perm[j]) for j in range(3)} | {(1, j): (1, j) for j in range(2)}
        mapped = {tuple(sorted((relabel[u], relabel[v]))) for u, v in edges}
        assert mapped == edges
