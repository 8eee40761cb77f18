import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k2lminor.families import cycle_strong_edge, king, necklace, wheel
from k2lminor.graph import (
    NotAnEdge,
    NotSeparable,
    SelfLoop,
    TooLarge,
    TooSmall,
    VertexOutOfRange,
    bfs_distances,
    bfs_layering,
    build_graph,
    canonical_form,
    components,
    contract_edges,
    distance_between_sets,
    find_twins,
    is_isomorphic_small,
    st_connectivity,
    vertex_connectivity,
)
from support import brute_min_cut_size, random_graph, to_nx


@st.composite
def graphs(draw, n_min=1, n_max=9):
    n = draw(st.integers(n_min, n_max))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_build_graph_examples():
    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert tri.m == 3 and tri.adj == ((1, 2), (0, 2), (0, 1))
    assert build_graph(2, [(0, 1), (0, 1), (1, 0)]).m == 1
    with pytest.raises(SelfLoop):
        build_graph(1, [(0, 0)])
    with pytest.raises(VertexOutOfRange):
        build_graph(2, [(0, 2)])


@given(graphs())
def test_graph_invariants(g):
    for v in range(g.n):
        assert list(g.adj[v]) == sorted(set(g.adj[v]))
        assert v not in g.adj[v]
        for w in g.adj[v]:
            assert v in g.adj[w]
    assert 2 * g.m == sum(len(a) for a in g.adj)


def test_vertex_connectivity_examples():
    assert vertex_connectivity(build_graph(4, itertools.combinations(range(4), 2))) == 3
    assert vertex_connectivity(wheel(6)) == 3
    assert vertex_connectivity(necklace(8)) == 4
    assert vertex_connectivity(build_graph(3, [(0, 1)])) == 0
    with pytest.raises(TooSmall):
        vertex_connectivity(build_graph(1, []))


@settings(max_examples=150, deadline=None)
@given(graphs(n_min=2, n_max=10))
def test_vertex_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


def test_st_connectivity_errors():
    g = wheel(5)
    with pytest.raises(NotSeparable):
        st_connectivity(g, [0], [1])
    with pytest.raises(NotSeparable):
        st_connectivity(g, [0], [0, 2])
    with pytest.raises(NotSeparable):
        st_connectivity(g, [], [2])


def test_st_connectivity_against_brute_force():
    rng = random.Random(11)
    for _ in range(150):
        g = random_graph(rng, rng.randint(4, 10), rng.uniform(0.2, 0.6))
        S = {0, 1} if not g.has_edge(0, g.n - 1) else {0}
        T = {g.n - 1}
        if any(g.has_edge(s, t) for s in S for t in T):
            continue
        assert st_connectivity(g, S, T) == brute_min_cut_size(g, S, T)


def test_bfs_layering_necklace():
    g = necklace(8)
    lay = bfs_layering(g, 0)
    ref = nx.single_source_shortest_path_length(to_nx(g), 0)
    assert [len(L) for L in lay.layers] == [
        sum(1 for d in ref.values() if d == i) for i in range(max(ref.values()) + 1)
    ]
    assert [len(L) for L in lay.layers] == [1, 4, 4, 4, 3]
    assert lay.layers[0] == (0,)
    layer_of = lay.layer_of()
    for u, v in g.edges():
        assert abs(layer_of[u] - layer_of[v]) <= 1
    assert sum(len(L) for L in lay.layers) == g.n


def test_distances_and_components():
    g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
    d = bfs_distances(g, [0])
    assert d[:3] == [0, 1, 2] and d[3] == math.inf
    assert components(g) == [[0, 1, 2], [3, 4]]
    assert distance_between_sets(g, [0], [2]) == 2
    assert distance_between_sets(g, [0], [4]) == math.inf
    assert distance_between_sets(necklace(8), [0], [4]) == 4


def test_twins():
    assert find_twins(necklace(8)) == []
    assert find_twins(wheel(6)) == []
    pairs = find_twins(cycle_strong_edge(8), degree=5)
    assert pairs == [(i, 8 + i) for i in range(8)]
    g = cycle_strong_edge(8)
    for u, v in pairs:
        assert g.closed_neighborhood(u) == g.closed_neighborhood(v)


def test_contract_edges():
    res = contract_edges(king(2, 4), [(1, 2), (5, 6)])
    assert res.graph.n == 6 and res.graph.m == 11
    assert res.mapping == (0, 1, 1, 2, 3, 4, 4, 5)
    with pytest.raises(NotAnEdge):
        contract_edges(king(2, 4), [(0, 2)])


def test_isomorphism_examples():
    assert is_isomorphic_small(contract_edges(king(2, 4), [(1, 2), (5, 6)]).graph, king(2, 3))
    assert not is_isomorphic_small(king(2, 3), wheel(5))
    with pytest.raises(TooLarge):
        canonical_form(necklace(9))


@settings(max_examples=200, deadline=None)
@given(graphs(n_max=8), st.randoms(use_true_random=False))
def test_canonical_form_is_label_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    assert canonical_form(g) == canonical_form(h)


@settings(max_examples=200, deadline=None)
@given(graphs(n_min=5, n_max=7), graphs(n_min=5, n_max=7))
def test_isomorphism_matches_networkx(g, h):
    assert is_isomorphic_small(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
