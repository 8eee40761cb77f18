import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k2lminor.families import complete_bipartite_2l, necklace, wheel
from k2lminor.graph import build_graph
from k2lminor.minors import (
    BudgetExhausted,
    MinorModel,
    OracleBudget,
    find_k2l_minor,
    minor_free_up_to,
    verify_model,
)
from support import naive_k2l, random_graph


def test_verify_identity_model():
    g = complete_bipartite_2l(3)
    model = MinorModel.make([0], [1], [[2], [3], [4]])
    assert verify_model(g, model)


@pytest.mark.parametrize(
    "model,prefix",
    [
        (MinorModel(3, (0,), (1,), ((2,), (3,))), "leg-count"),
        (MinorModel(2, (), (1,), ((2,), (3,))), "empty"),
        (MinorModel(2, (0,), (1,), ((2,), (9,))), "out-of-range"),
        (MinorModel(2, (0,), (1,), ((2,), (2,))), "overlap"),
        (MinorModel(2, (0, 1), (2,), ((3,), (4,))), "disconnected"),
        (MinorModel(2, (2,), (3,), ((0,), (4,))), "missing-edge"),
    ],
)
def test_verify_reasons(model, prefix):
    res = verify_model(complete_bipartite_2l(3), model)
    assert not res and res.reason.startswith(prefix)


def test_verify_missing_edge_names_the_leg():
    g = build_graph(5, [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4)])
    res = verify_model(g, MinorModel.make([0], [1], [[2], [3], [4]]))
    assert res.reason == "missing-edge: B and L3"


def test_known_negatives():
    assert find_k2l_minor(wheel(6), 4) is None
    assert find_k2l_minor(necklace(5), 5) is None
    assert find_k2l_minor(complete_bipartite_2l(3), 4) is None


def test_known_positives_verify():
    for g, ell in [(wheel(8), 3), (necklace(6), 4), (complete_bipartite_2l(3), 3)]:
        model = find_k2l_minor(g, ell)
        assert model is not None and verify_model(g, model)
    assert find_k2l_minor(complete_bipartite_2l(3), 3) == MinorModel.make([0], [1], [[2], [3], [4]])


def test_oracle_agrees_with_naive_enumeration():
    rng = random.Random(2024)
    seen = {True: 0, False: 0}
    for _ in range(60):
        n = rng.randint(4, 8)
        g = random_graph(rng, n, rng.uniform(0.3, 0.7))
        ell = rng.randint(1, 4)
        expected = naive_k2l(g, ell)
        model = find_k2l_minor(g, ell)
        assert (model is not None) == expected
        if model is not None:
            assert verify_model(g, model)
        seen[expected] += 1
    assert seen[True] and seen[False]


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 9), st.integers(2, 4), st.randoms(use_true_random=False))
def test_minor_closed_under_edge_addition(n, ell, rnd):
    g = random_graph(rnd, n, 0.4)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    if not pairs:
        return
    bigger = build_graph(n, g.edges() + [rnd.choice(pairs)])
    if find_k2l_minor(g, ell) is not None:
        assert find_k2l_minor(bigger, ell) is not None
    if find_k2l_minor(bigger, ell) is None:
        assert find_k2l_minor(g, ell) is None


def test_threads_do_not_change_the_answer():
    for g, ell in [(necklace(6), 4), (wheel(7), 3), (necklace(5), 5)]:
        assert find_k2l_minor(g, ell, threads=1) == find_k2l_minor(g, ell, threads=4)


def test_budget_exhaustion():
    with pytest.raises(BudgetExhausted) as info:
        find_k2l_minor(necklace(7), 5, OracleBudget(node_limit=50))
    assert info.value.nodes > 50
    with pytest.raises(ValueError):
        OracleBudget(node_limit=0)
    with pytest.raises(ValueError):
        find_k2l_minor(wheel(4), 0)


def test_sweep_is_monotone():
    rep = minor_free_up_to(wheel(6), 5)
    assert rep.largest == 3
    assert rep.outcomes == {1: "minor", 2: "minor", 3: "minor", 4: "no-minor", 5: "no-minor"}
    assert minor_free_up_to(build_graph(4, []), 2).largest is None
    k4 = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert minor_free_up_to(k4, 3).largest == 2
    rep = minor_free_up_to(necklace(7), 5, OracleBudget(node_limit=50))
    assert "budget-exhausted" in rep.outcomes.values()
