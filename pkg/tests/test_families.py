from fractions import Fraction

import networkx as nx
import pytest

from k2lminor.families import (
    FAMILIES,
    FamilySpec,
    ParamTooSmall,
    apex_necklace,
    audit,
    complete_bipartite_2l,
    cycle_strong_edge,
    gadget_wheel,
    gadget_wheel_delta,
    king,
    king_middle_contraction,
    necklace,
    wheel,
)
from k2lminor.graph import GraphError, find_twins, is_isomorphic_small, vertex_connectivity
from support import to_nx


def test_necklace_shape():
    for n in range(4, 10):
        g = necklace(n)
        assert (g.n, g.m) == (2 * n, 4 * n)
        assert g.min_degree() == g.max_degree() == 4
        assert find_twins(g) == []
    g = necklace(8)
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g)) == 4
    # v_i ~ w_i and v_i ~ w_{i+1}
    assert g.has_edge(3, 8 + 3) and g.has_edge(3, 8 + 4) and not g.has_edge(3, 8 + 2)


def test_wheel_shape():
    g = wheel(6)
    assert (g.n, g.m) == (7, 12)
    assert g.degree(6) == 6 and g.min_degree() == 3
    assert vertex_connectivity(g) == 3


def test_gadget_wheel_shape():
    g = gadget_wheel(3)
    assert g.n == 6 + 1 + 3 * 3
    assert g.degree(6) == 6
    assert vertex_connectivity(g) == 2
    for i in range(3):
        clique = [2 * i, 2 * i + 1, 7 + 3 * i, 8 + 3 * i, 9 + 3 * i]
        assert all(g.has_edge(u, v) for u in clique for v in clique if u < v)
    h = gadget_wheel_delta(2, 5)
    assert h.n == 4 + 1 + 2 * 4
    assert all(h.degree(v) == 5 for v in range(5, h.n))


def test_cycle_strong_edge_shape():
    g = cycle_strong_edge(8)
    assert (g.n, g.m) == (16, 40)
    assert g.min_degree() == g.max_degree() == 5
    assert vertex_connectivity(g) == 4
    assert len(find_twins(g, 5)) == 8


def test_king_shape():
    assert (king(2, 3).n, king(2, 3).m) == (6, 11)
    assert (king(2, 4).n, king(2, 4).m) == (8, 16)
    assert king(3, 3).degree(4) == 8
    assert nx.is_isomorphic(to_nx(king(3, 4)), to_nx(king(4, 3)))


def test_king_contraction():
    res = king_middle_contraction(2, 4)
    assert is_isomorphic_small(res.graph, king(2, 3))
    assert king(2, 4).n - res.graph.n == 2
    assert king(2, 4).m - res.graph.m == 5


def test_complete_bipartite_and_apex():
    g = complete_bipartite_2l(3)
    assert nx.is_isomorphic(to_nx(g), nx.complete_bipartite_graph(2, 3))
    a = apex_necklace(8)
    assert a.degree(16) == 8 and a.m == 32 + 8


@pytest.mark.parametrize(
    "fn,args",
    [
        (necklace, (3,)),
        (wheel, (2,)),
        (gadget_wheel, (1,)),
        (cycle_strong_edge, (3,)),
        (king, (0, 3)),
        (complete_bipartite_2l, (0,)),
    ],
)
def test_param_too_small(fn, args):
    with pytest.raises(ParamTooSmall):
        fn(*args)


def test_family_spec():
    assert FamilySpec("necklace", (8,)).describe() == "necklace n=8"
    assert FamilySpec("king", (2, 4)).describe() == "king rows=2 cols=4"
    assert FamilySpec("wheel", (5,)).build().n == 6
    with pytest.raises(GraphError):
        FamilySpec("petersen", (1,))
    with pytest.raises(GraphError):
        FamilySpec("king", (2,))
    assert set(FAMILIES) >= {"necklace", "wheel", "gadget_wheel", "cycle_strong_edge", "king", "apex_necklace"}


def test_audit_density():
    a = audit(necklace(8), 5)
    assert a.density_bound == Fraction(6 * 15, 2)
    assert a.density_slack == Fraction(45 - 32)
    assert a.alarms == []
    rep = dict(a.report())
    assert rep["connectivity"] == "4" and rep["twin-pairs"] == "0"


def test_audit_alarms():
    # K_{2,5} has 10 edges; at l = 1 the bound is 6
    a = audit(complete_bipartite_2l(5), 1)
    assert "density" in a.alarms
    b = audit(wheel(10), 1)
    assert b.high_degree == [10] and "max-degree" in b.alarms
    assert audit(cycle_strong_edge(6), 2, twin_degree=5).twin_pairs == [(i, 6 + i) for i in range(6)]
