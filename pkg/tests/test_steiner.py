import random
from collections import Counter

import pytest

from k2lminor.families import apex_necklace, cycle_strong_edge, necklace, wheel
from k2lminor.graph import build_graph
from k2lminor.minors import verify_model
from k2lminor.steiner import (
    MOVE_KINDS,
    IterationCapExceeded,
    Saturated,
    SteinerTree,
    TerminalsDisconnected,
    apply_move,
    classify,
    degree_scan,
    find_improving_move,
    initial_steiner_tree,
    max_leaf_search,
)
from support import random_graph, random_hub_instance, random_steiner_tree


def test_initial_tree_on_wheel_hub():
    t = initial_steiner_tree(wheel(6), 6)
    assert t.is_valid()
    assert t.leaves == (4, 5)
    assert sorted(t.edges) == [(0, 1), (0, 5), (1, 2), (2, 3), (3, 4)]


def test_initial_tree_errors():
    g = build_graph(5, [(0, 1), (0, 2), (1, 3), (2, 4)])
    with pytest.raises(TerminalsDisconnected):
        initial_steiner_tree(g, 0)


def test_tree_problems_are_reported():
    g = wheel(4)
    bad = SteinerTree(g, 4, frozenset(range(4)), frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
    assert "not a tree" in bad.problems()
    worse = SteinerTree(g, 4, frozenset(range(4)), frozenset({(0, 4), (1, 4), (2, 4), (3, 4)}))
    assert "tree contains the excluded vertex" in worse.problems()


def test_classification_on_wheel():
    c = classify(initial_steiner_tree(wheel(8), 8))
    assert (c.e, c.o) == (3, 3)
    assert c.identity_holds() and c.per_path_parity_ok()
    assert c.branching == ()


def test_classification_single_vertex_tree():
    g = build_graph(2, [(0, 1)])
    t = initial_steiner_tree(g, 0)
    assert t.leaves == (1,)
    c = classify(t)
    assert c.identity_holds() and c.non_strictly_internal == 1


def test_classification_identity_on_random_trees():
    rng = random.Random(5)
    done = 0
    while done < 150:
        g = random_graph(rng, rng.randint(5, 16), rng.uniform(0.2, 0.5))
        x = rng.randrange(g.n)
        if g.degree(x) == 0:
            continue
        t = random_steiner_tree(rng, g, x)
        if t is None:
            continue
        assert t.is_valid(), t.problems()
        c = classify(t)
        assert c.identity_holds()
        assert c.per_path_parity_ok()
        done += 1


def test_moves_strictly_add_leaves():
    g = apex_necklace(16)
    t = initial_steiner_tree(g, 32)
    for _ in range(5):
        mv = find_improving_move(g, 32, t)
        if mv is None:
            break
        assert mv.kind in MOVE_KINDS
        t2 = apply_move(t, mv)
        assert t2.is_valid()
        assert len(t2.leaves) == mv.leaves_after > len(t.leaves)
        t = t2


@pytest.mark.parametrize("n", [8, 12, 16, 22, 29])
def test_apex_necklace_yields_model(n):
    ell = max(k for k in range(1, n) if 7 * k < n)
    g = apex_necklace(n)
    stats = Counter()
    res = max_leaf_search(g, 2 * n, ell, stats=stats)
    assert not isinstance(res, Saturated)
    assert verify_model(g, res) and res.ell == ell
    assert sum(stats.values()) <= n + 1


def test_wheel_saturates_with_two_leaves():
    res = max_leaf_search(wheel(30), 30, 3)
    assert isinstance(res, Saturated)
    assert len(res.tree.leaves) == 2
    rep = dict(res.report())
    assert rep["leaves"] == "2" and rep["engine"] == "steiner"


def test_iteration_cap():
    with pytest.raises(IterationCapExceeded):
        max_leaf_search(apex_necklace(29), 58, 4, iteration_cap=1)
    with pytest.raises(ValueError):
        max_leaf_search(wheel(5), 5, 0)


def test_degree_scan():
    assert degree_scan(apex_necklace(30), 3) == [60]
    assert degree_scan(necklace(8), 1) == []
    assert degree_scan(cycle_strong_edge(10), 1) == []


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_high_degree_vertex_always_gives_a_model(ell):
    rng = random.Random(100 + ell)
    for _ in range(12):
        g, hub = random_hub_instance(rng, ell)
        assert g.n <= 30 and g.degree(hub) > 7 * ell and g.min_degree() >= 4
        res = max_leaf_search(g, hub, ell)
        assert not isinstance(res, Saturated), dict(res.report())
        assert verify_model(g, res)
