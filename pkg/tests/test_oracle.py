"""Exhaustive immersion search: soundness, completeness, and budget limits."""

from __future__ import annotations

import pytest

from immlab.certificates import verify_certificate
from immlab.errors import BudgetExceeded, PreconditionError
from immlab.gen import random_alpha2
from immlab.graphs import Graph, complete_graph, cycle_graph, empty_graph
from immlab.oracle import OracleBudget, brute_force_immersion, max_immersion_order

from conftest import ref_find_immersion


def test_c5_has_k3_but_not_k4():
    g = cycle_graph(5)
    cert = brute_force_immersion(g, 3)
    assert cert is not None and cert.order == 3
    assert verify_certificate(g, cert).ok
    assert brute_force_immersion(g, 4) is None


def test_complement_c7_has_k4():
    g = cycle_graph(7).complement()
    cert = brute_force_immersion(g, 4)
    assert cert is not None
    assert verify_certificate(g, cert).ok


def test_max_immersion_order_on_cliques_and_empties():
    g = complete_graph(6)
    order, cert = max_immersion_order(g)
    assert order == 6 and cert.order == 6
    assert verify_certificate(g, cert).ok
    e = empty_graph(4)
    order, cert = max_immersion_order(e, OracleBudget(max_t=4))
    assert order == 1 and verify_certificate(e, cert).ok


def test_trivial_orders():
    g = cycle_graph(4)
    zero = brute_force_immersion(g, 0)
    one = brute_force_immersion(g, 1)
    assert zero is not None and zero.order == 0
    assert one is not None and one.order == 1
    assert verify_certificate(g, zero).ok and verify_certificate(g, one).ok


def test_budget_preconditions():
    g = complete_graph(6)
    with pytest.raises(PreconditionError):
        brute_force_immersion(g, 3, OracleBudget(max_n=5))
    with pytest.raises(PreconditionError):
        brute_force_immersion(g, 7, OracleBudget(max_t=6))


def test_budget_node_limit_raises():
    g = cycle_graph(7).complement()
    with pytest.raises(BudgetExceeded):
        brute_force_immersion(g, 4, OracleBudget(max_nodes=1))


def test_agrees_with_reference_search():
    """Independent reference search and oracle agree on found/not-found."""
    for seed in range(30):
        n = 4 + seed % 4  # 4..7, within the reference's reach
        g = random_alpha2(n, seed)
        for t in range(2, 5):
            ref = ref_find_immersion(g, t)
            cert = brute_force_immersion(g, t)
            assert (ref is None) == (cert is None), (n, seed, t)
            if cert is not None:
                assert verify_certificate(g, cert).ok
            if ref is not None:
                rcert = type(cert)(g.sha256(), ref["branch"], ref["paths"])
                assert verify_certificate(g, rcert).ok


def test_every_alpha2_graph_reaches_half_order():
    for seed in range(20):
        n = 3 + seed % 7
        g = random_alpha2(n, seed)
        order, cert = max_immersion_order(g, OracleBudget(max_t=9))
        assert order >= (n + 1) // 2
        assert verify_certificate(g, cert).ok
