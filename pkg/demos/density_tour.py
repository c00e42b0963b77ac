"""Tour of the exact density invariants.

Run with:  python3 demos/density_tour.py
"""

import ramseygame as rg
from ramseygame.densities import balancedness, find_m2_decreasing_edge, m2, max_density

named = {
    "single edge K2": rg.complete_graph(2),
    "triangle K3": rg.complete_graph(3),
    "4-cycle C4": rg.cycle_graph(4),
    "K4": rg.complete_graph(4),
    "triangle + pendant": rg.Graph.of(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
}

print("2-density maxima (exact rationals):")
for name, g in named.items():
    print(f"  m2({name}) = {m2(g)}")

print("\nWitness subgraphs attaining the maximum:")
for name, g in named.items():
    report = max_density(g, 2)
    print(f"  {name}: value {report.value} on vertices {report.witness}")

print("\nBalancedness:")
for name, g in named.items():
    flags = []
    if balancedness(g, 2):
        flags.append("2-balanced")
    if balancedness(g, 2, strict=True):
        flags.append("strictly")
    print(f"  {name}: {' '.join(flags) or 'not 2-balanced'}")

print("\nEdges whose removal lowers m2:")
for name, g in named.items():
    print(f"  {name}: {find_m2_decreasing_edge(g)}")
