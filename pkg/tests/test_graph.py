"""Graph parsing, admissibility checks, invariants and families."""

import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from graphcurve.graph import (INF, Graph, GraphFormatError, cycle_graph, cycles_of_length,
                              generate_family, girth, invariants, parse_graph, path_graph,
                              random_valid_graph, subdivided_k4, theta_graph,
                              trivalent_separation, validate_assumptions)


def _nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges)
    return G


def _oracle_cycles(g, n):
    return sum(1 for c in nx.simple_cycles(_nx(g), length_bound=n) if len(c) == n)


def test_parse_round_trip(theta):
    g, _ = theta
    assert parse_graph(g.dumps()) == g
    assert g.vertex_count == 10 and g.m == 11


@pytest.mark.parametrize("text", [
    "not json", "[]", '{"vertices": 3}', '{"vertices": "3", "edges": []}',
    '{"vertices": 3, "edges": [[0, 3]]}', '{"vertices": 3, "edges": [[0, 0]]}',
    '{"vertices": 3, "edges": [[0, 1], [1, 0]]}', '{"vertices": 3, "edges": [[0, 1, 2]]}',
])
def test_parse_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_theta_invariants(theta):
    g, _ = theta
    inv = invariants(g)
    assert inv.genus == 2
    assert inv.girth == 7
    assert inv.girth_cycle_count == _oracle_cycles(g, 7) == 2
    assert validate_assumptions(g).ok


def test_subdivided_k4_invariants():
    g = subdivided_k4(1)
    inv = invariants(g)
    assert (g.vertex_count, inv.genus, inv.girth) == (10, 3, 6)
    assert inv.girth_cycle_count == _oracle_cycles(g, 6) == 4
    rep = validate_assumptions(g)
    assert not rep.ok and rep.strictly_subtrivalent
    assert rep.trivalent_separation == 2 and not rep.trivalent_separated


def test_cycle_and_path():
    assert invariants(cycle_graph(8)).girth_cycle_count == 1
    assert invariants(cycle_graph(8)).genus == 1
    inv = invariants(path_graph(5))
    assert inv.genus == 0 and inv.girth == INF and inv.girth_cycle_count == 0


def test_validation_flags():
    tri = cycle_graph(3)
    rep = validate_assumptions(tri)
    assert not rep.ok and not rep.triangle_free
    assert any("triangle" in v for v in rep.violations)
    # trivalent vertices at distance 2
    close = theta_graph(1, 1, 3)
    assert trivalent_separation(close) == 2
    assert not validate_assumptions(close).trivalent_separated
    disconnected = Graph(4, ((0, 1), (2, 3)))
    assert not validate_assumptions(disconnected).connected
    assert validate_assumptions(theta_graph(2, 2, 2)).ok
    js = validate_assumptions(tri).to_json()
    assert set(js) == {"ok", "assumptions", "trivalent_separation", "violations"}


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_girth_and_cycle_counts_against_networkx(seed):
    rng = random.Random(seed)
    d = rng.randint(4, 11)
    G = nx.gnm_random_graph(d, rng.randint(d - 1, d + 3), seed=seed)
    if not nx.is_connected(G):
        return
    g = Graph(d, tuple(G.edges()))
    n = girth(g)
    ref = nx.girth(G)
    assert (n == INF and ref == float("inf")) or n == ref
    if n != INF:
        assert len(cycles_of_length(g, n)) == _oracle_cycles(g, n)
    assert invariants(g).genus == g.m - d + 1 == len(nx.cycle_basis(G))


def _feasible(d, g):
    if g == 0:
        return d >= 1
    if g == 1:
        return d >= 4
    return d >= 8 * (g - 1)


@given(st.integers(1, 16), st.integers(0, 3), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_random_valid_graphs_are_admissible(d, g, seed):
    if not _feasible(d, g):
        with pytest.raises(ValueError):
            random_valid_graph(d, g, random.Random(seed))
        return
    G = random_valid_graph(d, g, random.Random(seed))
    assert validate_assumptions(G).ok
    assert invariants(G).genus == g and G.vertex_count == d
    assert d >= 2 * g + 2 or d == 1


def test_admissible_graphs_satisfy_degree_bound():
    # the bound d >= 2g + 2 holds on every fixture family that passes validation
    for G in [theta_graph(2, 2, 2), theta_graph(3, 3, 2), cycle_graph(4), path_graph(2),
              subdivided_k4(2)]:
        if validate_assumptions(G).ok:
            assert G.vertex_count >= 2 * invariants(G).genus + 2


def test_families_and_determinism():
    a = generate_family("random_valid(12, 2, seed=7, count=3)")
    b = generate_family({"family": "random_valid", "d": 12, "g": 2, "seed": 7, "count": 3})
    assert a == b and len(a) == 3
    assert generate_family("cycle(5)") == [cycle_graph(5)]
    assert generate_family("subdivided_K4(1)") == [subdivided_k4(1)]
    with pytest.raises(ValueError):
        generate_family("petersen()")
