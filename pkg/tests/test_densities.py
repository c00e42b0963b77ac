from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ramseygame as rg
from ramseygame.densities import (balancedness, find_m2_decreasing_edge,
                                  local_density, m, m1, m2, max_density)
from ramseygame.errors import BudgetExceededError, DomainError
from ramseygame.graphs import Graph, induced_subgraph

K3 = rg.complete_graph(3)


def brute_max(g, kind):
    """Reference maximization: every vertex subset, pure Python fractions."""
    best = None
    lo = 1 if kind == 0 else 0
    for r in range(lo, g.n + 1):
        for sub in combinations(range(g.n), r):
            h = induced_subgraph(g, sub)
            val = local_density(h, kind) if (kind == 0 or r > 0) else Fraction(0)
            if best is None or val > best:
                best = val
    return best


def test_local_density_conventions():
    k2 = rg.complete_graph(2)
    assert local_density(k2, 0) == Fraction(1, 2)
    assert local_density(k2, 1) == 1
    assert local_density(k2, 2) == Fraction(1, 2)  # single-edge convention
    assert local_density(rg.empty_graph(4), 1) == 0
    assert local_density(rg.empty_graph(4), 2) == 0
    with pytest.raises(DomainError):
        local_density(rg.empty_graph(0), 0)
    with pytest.raises(DomainError):
        local_density(K3, 7)


def test_m2_spot_values():
    assert m2(K3) == 2
    assert m2(rg.cycle_graph(5)) == Fraction(4, 3)
    assert m2(rg.path_graph(4)) == 1
    # a dense core dominates pendant decoration
    assert m2(rg.Graph.of(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])) == 2


def test_max_density_witness():
    g = rg.Graph.of(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
    report = max_density(g, 2)
    assert report.value == 2
    assert report.witness == (0, 1, 2)  # smallest, lexicographically first


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.data())
def test_max_matches_brute_force(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = data.draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    g = Graph.of(n, edges)
    for kind in (0, 1, 2):
        assert max_density(g, kind).value == brute_max(g, kind)


def test_vertex_cap_guard():
    big = rg.complete_graph(18)
    with pytest.raises(BudgetExceededError):
        m2(big)
    assert m2(big, cap=18) == Fraction(17 * 18 // 2 - 1, 16)


def test_balancedness_examples():
    assert balancedness(K3, 2, strict=True)
    assert balancedness(rg.cycle_graph(4), 2, strict=True)
    # triangle with a pendant edge attains m2 only on the proper triangle
    pendant = rg.Graph.of(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert not balancedness(pendant, 2)
    assert not balancedness(pendant, 2, strict=True)
    with pytest.raises(DomainError):
        balancedness(rg.empty_graph(3), 2)


def test_strict_balance_detects_tied_subgraph():
    # two triangles sharing an edge: each triangle ties the whole graph's d2
    diamond = rg.Graph.of(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert balancedness(diamond, 2)
    assert not balancedness(diamond, 2, strict=True)


def test_m2_decreasing_edge():
    assert find_m2_decreasing_edge(K3) == (0, 1)
    # the triangle-on-every-edge product has no single critical edge
    prod = rg.edge_rooted_product(K3, rg.RootedGraph(K3, (0, 1)), 1).graph
    assert find_m2_decreasing_edge(prod) is None
    with pytest.raises(DomainError):
        find_m2_decreasing_edge(rg.empty_graph(2))


def test_strictly_2_balanced_graphs_have_decreasing_edge():
    # in a strictly 2-balanced graph every edge removal lowers m2
    for G in nx.graph_atlas_g():
        if not (3 <= len(G) <= 6) or len(G.edges()) < 2:
            continue
        g = Graph.of(len(G), list(G.edges()))
        if m2(g) > Fraction(1, 2) and balancedness(g, 2, strict=True):
            assert find_m2_decreasing_edge(g) is not None, g


def test_density_ordering():
    # d <= d1 always; m monotone under taking kinds on connected dense graphs
    for g in (K3, rg.cycle_graph(4), rg.complete_graph(5)):
        assert local_density(g, 0) <= local_density(g, 1)
        assert m(g) <= m1(g) <= m2(g) + 1  # crude sanity ordering
