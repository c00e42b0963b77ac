"""End-to-end acceptance gate.

Each test covers one numbered criterion and prints a single
"criterion N: PASS" line on success (visible with ``pytest -s`` or in the
captured output of a failing run).  Frozen numeric bands were produced by
independent pilot runs at larger trial counts; the derivation of each band is
noted next to the constant.
"""

import json
import random
import time
from fractions import Fraction

import networkx as nx
import pytest

import ramseygame as rg
from ramseygame.colouring import (FOUND, NONE_EXISTS, Colouring,
                                  check_forcing_structure, is_mono_free,
                                  monochromatic_copies,
                                  search_h_free_colouring,
                                  triangle_path_forcing_structure,
                                  two_triangles_joined_by_path)
from ramseygame.densities import balancedness, local_density, m2
from ramseygame.forcing import green_forced_pairs
from ramseygame.game import (EXTENDABLE, NOT_EXTENDABLE, GameConfig,
                             decide_extendability, monte_carlo,
                             naive_decide_extendability, play_two_round,
                             subgraph_count_statistics, sweep_rows_to_csv)
from ramseygame.graphs import Graph, are_isomorphic
from ramseygame.products import (RootedGraph, edge_rooted_product,
                                 reduced_edge_rooted_product)

K3 = rg.complete_graph(3)


def _atlas_graphs(max_n):
    """Connected-or-not atlas representatives with 1..max_n vertices."""
    out = []
    for G in nx.graph_atlas_g():
        if 1 <= len(G) <= max_n:
            out.append(rg.Graph.of(len(G), list(G.edges())))
    return out


def test_criterion_01_density_ground_truth():
    start = time.monotonic()
    triangle_pendant = rg.Graph.of(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert m2(rg.complete_graph(2)) == Fraction(1, 2)
    assert m2(K3) == 2
    assert m2(rg.cycle_graph(4)) == Fraction(3, 2)
    assert m2(rg.complete_graph(4)) == Fraction(5, 2)
    assert m2(triangle_pendant) == 2
    assert time.monotonic() - start < 1.0
    print("criterion 1: PASS")


def test_criterion_02_two_balanced_implies_one_balanced_sweep():
    # every connected graph on <= 7 vertices that is 2-balanced with
    # 2-density > 1 must be strictly 1-balanced and strictly balanced
    checked = 0
    counterexamples = []
    for G in nx.graph_atlas_g():
        if not (1 <= len(G) <= 7) or len(G.edges()) == 0:
            continue
        if not nx.is_connected(G):
            continue
        g = rg.Graph.of(len(G), list(G.edges()))
        if local_density(g, 2) <= 1 or not balancedness(g, 2):
            continue
        checked += 1
        if not (balancedness(g, 1, strict=True) and balancedness(g, 0, strict=True)):
            counterexamples.append(g)
    assert checked > 50  # the hypothesis class is far from empty
    assert counterexamples == []
    print(f"criterion 2: PASS ({checked} graphs checked)")


def test_criterion_03_product_density_sweep():
    # over all (G, H, h, k) with <= 5 vertices each, both of density >= 1
    # (the identity needs both factors dense), k <= 2 and product <= 16 vertices:
    # m2 of the full product equals max(m2(G), m2(H)), and the reduced
    # product drops strictly below m2(H) whenever removing the root does
    small = _atlas_graphs(5)
    gs = [g for g in small if g.e >= 1 and local_density(g, 0) >= 1]
    hs = [g for g in small if g.n >= 3 and g.e >= 1 and local_density(g, 0) >= 1]
    cache = {}

    def m2c(g):
        key = (g.n, g.edges)
        if key not in cache:
            cache[key] = m2(g)
        return cache[key]

    done = 0
    bad = []
    for g in gs:
        for h in hs:
            m2h = m2c(h)
            for root in h.sorted_edges():
                rooted = RootedGraph(h, root)
                m2_minus = m2c(h.without_edge(root))
                for k in (1, 2):
                    if g.n + k * g.e * (h.n - 2) > 16:
                        continue
                    full = edge_rooted_product(g, rooted, k).graph
                    if m2c(full) != max(m2c(g), m2h):
                        bad.append(("full", g, h, root, k))
                    if m2_minus < m2h:
                        reduced = reduced_edge_rooted_product(g, rooted, k).graph
                        if not m2c(reduced) < m2h:
                            bad.append(("reduced", g, h, root, k))
                    done += 1
    assert done == 723  # frozen tuple count for this grid
    assert bad == []
    print(f"criterion 3: PASS ({done} tuples, 0 counterexamples)")


def test_criterion_04_double_product_of_c4_and_triangle():
    c4 = rg.cycle_graph(4)
    rooted = RootedGraph(K3, (0, 1))
    full = edge_rooted_product(c4, rooted, 2).graph
    reduced = reduced_edge_rooted_product(c4, rooted, 2).graph
    assert (full.n, full.e) == (12, 20)
    assert (reduced.n, reduced.e) == (12, 16)
    # the reduced product is exactly two internally-disjoint cherries
    # (paths of length 2) across each C4 edge
    edges = []
    nxt = 4
    for x, y in rg.cycle_graph(4).sorted_edges():
        for _ in range(2):
            edges += [(x, nxt), (nxt, y)]
            nxt += 1
    assert are_isomorphic(reduced, rg.Graph.of(12, edges))
    print("criterion 4: PASS")


def test_criterion_05_ramsey_number_sanity():
    start = time.monotonic()
    res5 = search_h_free_colouring(rg.complete_graph(5), K3, 2)
    assert res5.status == FOUND
    assert res5.colouring.total
    for colour in res5.colouring.used_colours():
        assert monochromatic_copies(res5.colouring, K3, colour) == []
    res6 = search_h_free_colouring(rg.complete_graph(6), K3, 2)
    assert res6.status == NONE_EXISTS
    assert time.monotonic() - start < 60.0
    print("criterion 5: PASS")


def _random_gadget_instance(rnd):
    """A mono-triangle-free red/blue colouring on <= 12 vertices containing a
    planted pair of cherries (one red, one blue) over the same endpoints."""
    n = rnd.randint(6, 12)
    x, y, a, b = 0, 1, 2, 3
    assignment = {(x, a): "red", (a, y): "red" if a < y else "red",
                  (x, b): "blue", (b, y): "blue"}
    assignment = {tuple(sorted(e)): c for e, c in assignment.items()}
    edges = set(assignment)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)
             if (i, j) not in edges and (i, j) != (x, y)]
    rnd.shuffle(pairs)
    for e in pairs[:rnd.randint(0, 2 * n)]:
        for colour in rnd.sample(["red", "blue"], 2):
            trial = dict(assignment)
            trial[e] = colour
            g = Graph(n, frozenset(trial))
            if is_mono_free(Colouring(g, trial), K3):
                assignment = trial
                edges.add(e)
                break
    g = Graph(n, frozenset(edges))
    return g, Colouring(g, assignment), (x, y)


def test_criterion_06_forcing_soundness_suite():
    rnd = random.Random(20260824)
    agree = 0
    for _ in range(200):
        g, col, planted = _random_gadget_instance(rnd)
        forced = green_forced_pairs(col, K3)
        assert planted in forced
        for pair in forced:
            if pair in g.edges:
                continue
            verdict = decide_extendability(g, col, [pair], K3, palette=2)
            assert verdict.status == NOT_EXTENDABLE
        # oracle equivalence on a random batch of <= 8 new edges
        non_edges = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)
                     if (i, j) not in g.edges]
        rnd.shuffle(non_edges)
        new_edges = non_edges[:rnd.randint(0, min(8, len(non_edges)))]
        verdict = decide_extendability(g, col, new_edges, K3, palette=2)
        oracle = naive_decide_extendability(g, col, new_edges, K3, palette=2)
        assert verdict.status == oracle
        agree += 1
    assert agree == 200
    print("criterion 6: PASS (200 instances, 100% agreement)")


def test_criterion_07_forcing_structure_examples():
    for ell in (2, 3):
        pattern = two_triangles_joined_by_path(ell)
        report = check_forcing_structure(pattern, triangle_path_forcing_structure(ell))
        assert report.holds, (ell, report)

    # two disjoint triangles, empty matching: no 2-density gap
    tri_pair = rg.Graph.of(6, [(0, 1), (0, 2), (1, 2)])
    tri_blue = rg.Graph.of(6, [(3, 4), (3, 5), (4, 5)])
    s_gap = rg.ForcingStructure(n=6, red_vertices=frozenset({0, 1, 2}), red=tri_pair,
                                blue_vertices=frozenset({3, 4, 5}), blue=tri_blue,
                                matching=frozenset())
    report = check_forcing_structure(K3, s_gap)
    assert (report.holds, report.violated) == (False, "ii")

    # single edge per side, one matching pair: a split leaves no triangle
    s_split = rg.ForcingStructure(
        n=4,
        red_vertices=frozenset({0, 1, 2}), red=rg.Graph.of(4, [(0, 2)]),
        blue_vertices=frozenset({0, 1, 3}), blue=rg.Graph.of(4, [(1, 3)]),
        matching=frozenset({(0, 1)}))
    report = check_forcing_structure(K3, s_split)
    assert (report.holds, report.violated) == (False, "iv")
    print("criterion 7: PASS")


def test_criterion_08_triangle_count_tail_bound():
    stats = subgraph_count_statistics(K3, n=50, prob=0.3, trials=200, seed=7,
                                      bound_coefficient=10.0)
    # Markov gives at most 1/K = 0.1; allow 3 sigma of sampling slack
    assert stats.violation_fraction <= 0.15
    print(f"criterion 8: PASS (violation fraction {stats.violation_fraction})")


# Band frozen from a 1000-trial pilot with master seed 1914 on this exact
# configuration: mean 3.34, population sd 2.9709257816377708.
PILOT_MASTER_SEED = 1914
PILOT_MEAN = 3.34
PILOT_SD = 2.9709257816377708


def test_criterion_09_forced_pair_count_band():
    start = time.monotonic()
    cfg = GameConfig(n=60, pattern=K3, palette=2, c=0.6, q_coeff=5.0,
                     colouring_source="adversarial-greedy")
    rows = monte_carlo([cfg], trials=50, master_seed=PILOT_MASTER_SEED)
    mean = rows[0]["mean_forced_pairs"]
    assert PILOT_MEAN - 3 * PILOT_SD <= mean <= PILOT_MEAN + 3 * PILOT_SD
    assert mean > 0
    assert time.monotonic() - start < 600.0
    print(f"criterion 9: PASS (mean green-forced pairs {mean})")


def test_criterion_10_determinism():
    cfg = GameConfig(n=20, pattern=K3, palette=2, c=0.6, q_coeff=3.0,
                     colouring_source="adversarial-greedy")
    csv_a = sweep_rows_to_csv(monte_carlo([cfg], trials=5, master_seed=11))
    csv_b = sweep_rows_to_csv(monte_carlo([cfg], trials=5, master_seed=11))
    assert csv_a == csv_b

    cfg_t = GameConfig(n=15, pattern=K3, palette=2, c=0.8, q_coeff=3.0,
                       colouring_source="search", seed=99)
    t_a = json.dumps(play_two_round(cfg_t).to_json_obj(), sort_keys=True)
    t_b = json.dumps(play_two_round(cfg_t).to_json_obj(), sort_keys=True)
    assert t_a == t_b
    print("criterion 10: PASS")
