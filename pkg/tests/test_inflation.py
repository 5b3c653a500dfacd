"""Inflations: blow-ups, their immersion constructors, and exact colouring."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from immlab.analysis import independence_number
from immlab.certificates import verify_certificate
from immlab.errors import PreconditionError
from immlab.gen import random_inflation
from immlab.graphs import cycle_graph, path_graph
from immlab.inflation import (
    InflationSpec,
    bag_colouring_to_vertices,
    cycle_inflation_chromatic,
    inflate,
    inflate_cycle,
    inflate_path,
    inflation_from_json,
    inflation_to_json,
)

from conftest import ref_chromatic_number


def proper(g, colouring):
    return all(colouring[u] != colouring[v] for u, v in g.edges())


def test_inflate_c4_shape():
    g, bags = inflate(cycle_graph(4), (2, 1, 2, 1))
    assert g.n == 6
    assert len(g.edges()) == 10  # 2+2+2+2 between bags, 1+1 inside
    assert bags == ((0, 1), (2,), (3, 4), (5,))
    assert independence_number(g)[0] == 2


def test_inflate_rejects_bad_sizes():
    with pytest.raises(ValueError):
        inflate(cycle_graph(4), (2, 1, 2))
    with pytest.raises(ValueError):
        inflate(cycle_graph(4), (2, 0, 2, 1))


def test_inflation_json_frozen_and_round_trip():
    spec = InflationSpec(cycle_graph(5), (2, 1, 3, 1, 2))
    doc = inflation_to_json(spec)
    assert doc == ('{"format":"immlab-inflation-v1",'
                   '"base":{"format":"immlab-graph-v1","n":5,'
                   '"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]},'
                   '"f":[2,1,3,1,2]}')
    assert inflation_from_json(doc) == spec
    with pytest.raises(ValueError):
        inflation_from_json('{"format":"immlab-graph-v1","n":1,"edges":[]}')
    with pytest.raises(ValueError):
        inflation_from_json('{"format":"immlab-inflation-v1","base":null,"f":[1]}')


def test_inflation_spec_validates_sizes():
    with pytest.raises(ValueError):
        InflationSpec(cycle_graph(4), (1, 1, 1))
    with pytest.raises(ValueError):
        InflationSpec(cycle_graph(3), (1, 0, 1))


def test_inflate_path_small_fixed():
    g, bags = inflate(path_graph(4), (2, 2, 2, 2))
    cert = inflate_path(g, bags)
    assert cert.order == 4  # p + q with p = q = 2
    assert set(cert.branch) == set(bags[0]) | set(bags[-1])
    assert verify_certificate(g, cert).ok


def test_inflate_path_hypotheses_enforced():
    g, bags = inflate(path_graph(3), (1, 2, 1))
    with pytest.raises(PreconditionError):
        inflate_path(g, bags)  # odd number of bags
    g2, bags2 = inflate(path_graph(4), (3, 2, 2, 1))
    with pytest.raises(PreconditionError):
        inflate_path(g2, bags2)  # first bag larger than another bag
    g3, bags3 = inflate(path_graph(4), (1, 1, 2, 2))
    with pytest.raises(PreconditionError):
        inflate_path(g3, bags3)  # last bag larger than an alternating-row bag


def test_inflate_path_random_battery():
    for seed in range(40):
        spec = random_inflation("path", 2 + 2 * (seed % 4), 1 + seed % 4, seed)
        g, bags = inflate(spec.base, spec.sizes)
        cert = inflate_path(g, bags)
        assert cert.order == len(bags[0]) + len(bags[-1])
        assert set(cert.branch) == set(bags[0]) | set(bags[-1])
        assert verify_certificate(g, cert).ok


def test_inflate_cycle_formula_small_k():
    # k=3: the inflation is complete multipartite -> complete? no: bags are
    # cliques too, so a triangle inflation is a complete graph.
    g, bags = inflate(cycle_graph(3), (2, 1, 2))
    cert, colouring = inflate_cycle(g, bags)
    assert cert.order == 5
    assert verify_certificate(g, cert).ok
    assert proper(g, colouring)
    # k=4: order = max(b0,b2) + max(b1,b3).
    g4, bags4 = inflate(cycle_graph(4), (2, 1, 3, 2))
    cert4, col4 = inflate_cycle(g4, bags4)
    assert cert4.order == 3 + 2
    assert verify_certificate(g4, cert4).ok
    assert proper(g4, col4)
    assert len(set(col4)) == cert4.order


def test_inflate_cycle_c5_units():
    g, bags = inflate(cycle_graph(5), (1, 1, 1, 1, 1))
    cert, colouring = inflate_cycle(g, bags)
    assert cert.order == 3
    assert len(set(colouring)) == 3
    assert proper(g, colouring)
    assert verify_certificate(g, cert).ok


def test_inflate_cycle_c5_doubled_overshoots_chromatic():
    """Known weak spot: the engine may use one colour above the exact value."""
    g, bags = inflate(cycle_graph(5), (2, 2, 2, 2, 2))
    cert, colouring = inflate_cycle(g, bags)
    assert cycle_inflation_chromatic((2, 2, 2, 2, 2))[0] == 5
    assert cert.order == 6  # one above optimal; trimming happens upstream
    assert cert.order == len(set(colouring))
    assert proper(g, colouring)
    assert verify_certificate(g, cert).ok


def test_inflate_cycle_rejects_paths():
    g, bags = inflate(path_graph(4), (1, 1, 1, 1))
    with pytest.raises(PreconditionError):
        inflate_cycle(g, bags)


def test_cycle_chromatic_dp_frozen_values():
    assert cycle_inflation_chromatic((1, 1, 1, 1, 1))[0] == 3
    assert cycle_inflation_chromatic((2, 2, 2, 2, 2))[0] == 5
    assert cycle_inflation_chromatic((1, 1, 1))[0] == 3
    assert cycle_inflation_chromatic((2, 1, 2, 1))[0] == 3
    assert cycle_inflation_chromatic((4, 1, 4, 1, 1))[0] == 6


def test_cycle_chromatic_witness_is_a_proper_colouring():
    sizes = (2, 1, 3, 1, 2)
    g, bags = inflate(cycle_graph(5), sizes)
    chi, bag_sets = cycle_inflation_chromatic(sizes)
    colouring = bag_colouring_to_vertices(g, bags, bag_sets)
    assert proper(g, colouring)
    assert len(set(colouring)) == chi


@given(st.integers(3, 7), st.data())
@settings(max_examples=40, deadline=None)
def test_cycle_chromatic_dp_matches_reference(k, data):
    sizes = tuple(data.draw(st.integers(1, 3)) for _ in range(k))
    g, _ = inflate(cycle_graph(k), sizes)
    if g.n > 12:
        return
    assert cycle_inflation_chromatic(sizes)[0] == ref_chromatic_number(g)


def test_inflate_cycle_random_battery():
    for seed in range(40):
        spec = random_inflation("cycle", 3 + seed % 6, 1 + seed % 3, seed)
        g, bags = inflate(spec.base, spec.sizes)
        cert, colouring = inflate_cycle(g, bags)
        assert proper(g, colouring)
        assert cert.order == len(set(colouring))
        assert cert.order >= cycle_inflation_chromatic(spec.sizes)[0]
        assert verify_certificate(g, cert).ok
