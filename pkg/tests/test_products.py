import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ramseygame as rg
from ramseygame.errors import DomainError
from ramseygame.graphs import are_isomorphic
from ramseygame.products import (RootedGraph, edge_rooted_product,
                                 reduced_edge_rooted_product)

K3 = rg.complete_graph(3)
C4 = rg.cycle_graph(4)


def test_rooted_graph_validates_root():
    with pytest.raises(DomainError):
        RootedGraph(K3, (0, 3))
    assert RootedGraph(K3, (1, 0)).root == (0, 1)


def test_single_fold_product_with_one_edge_centre():
    # gluing one triangle onto a single edge just gives a triangle back
    k2 = rg.complete_graph(2)
    prod = edge_rooted_product(k2, RootedGraph(K3, (0, 1)), 1)
    assert are_isomorphic(prod.graph, K3)
    assert prod.central_edges == frozenset({(0, 1)})
    assert len(prod.attachments) == 1


def test_double_product_counts():
    prod = edge_rooted_product(C4, RootedGraph(K3, (0, 1)), 2)
    assert (prod.graph.n, prod.graph.e) == (12, 20)
    red = reduced_edge_rooted_product(C4, RootedGraph(K3, (0, 1)), 2)
    assert (red.graph.n, red.graph.e) == (12, 16)
    assert red.reduced and not prod.reduced
    # reduced form = full form minus exactly the central edges
    assert red.graph.edges == prod.graph.edges - prod.central_edges


def test_attachments_record_the_glued_copies():
    prod = edge_rooted_product(K3, RootedGraph(K3, (0, 1)), 1)
    assert (prod.graph.n, prod.graph.e) == (6, 9)
    for (central, i), att in prod.attachments.items():
        assert i == 1
        assert len(att.new_vertices) == 1
        assert len(att.edges) == 2  # triangle minus its root edge
        assert att.edges <= prod.graph.edges


def test_guards():
    with pytest.raises(DomainError):
        edge_rooted_product(K3, RootedGraph(K3, (0, 1)), 0)
    with pytest.raises(DomainError):
        edge_rooted_product(rg.empty_graph(3), RootedGraph(K3, (0, 1)), 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=3), st.integers(min_value=3, max_value=5))
def test_size_formulas(k, hn):
    g = rg.cycle_graph(4)
    h = rg.complete_graph(hn)
    rooted = RootedGraph(h, (0, 1))
    full = edge_rooted_product(g, rooted, k).graph
    assert full.n == g.n + k * g.e * (h.n - 2)
    assert full.e == g.e + k * g.e * (h.e - 1)
    red = reduced_edge_rooted_product(g, rooted, k).graph
    assert red.n == full.n
    assert red.e == k * g.e * (h.e - 1)


def test_root_choice_immaterial_up_to_isomorphism():
    h = rg.Graph.of(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    prods = [edge_rooted_product(K3, RootedGraph(h, r), 1).graph
             for r in ((0, 1), (1, 2))]
    # both roots lie on the 4-cycle symmetrically around the chord
    assert are_isomorphic(prods[0], prods[1])
