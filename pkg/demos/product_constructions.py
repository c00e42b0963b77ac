"""Edge-rooted products and the density identity they satisfy.

The k-fold edge-rooted product glues k copies of a rooted graph (H, h) onto
every edge of a central graph G; the reduced form then deletes the central
edges.  For dense G and H the full product's m2 equals max(m2(G), m2(H)),
while the reduced form drops strictly below m2(H) whenever the root edge is
m2-critical in H.

Run with:  python3 demos/product_constructions.py
"""

import ramseygame as rg
from ramseygame.densities import m2
from ramseygame.products import (RootedGraph, edge_rooted_product,
                                 reduced_edge_rooted_product)

c4 = rg.cycle_graph(4)
k3 = rg.complete_graph(3)
rooted = RootedGraph(k3, (0, 1))

full = edge_rooted_product(c4, rooted, 2)
reduced = reduced_edge_rooted_product(c4, rooted, 2)

print("2-fold product of C4 with a rooted triangle:")
print(f"  full:    {full.graph.n} vertices, {full.graph.e} edges")
print(f"  reduced: {reduced.graph.n} vertices, {reduced.graph.e} edges")
print(f"  m2(C4) = {m2(c4)},  m2(K3) = {m2(k3)}")
print(f"  m2(full product) = {m2(full.graph)}  (= max of the two)")
print(f"  m2(reduced product) = {m2(reduced.graph)}  (< m2(K3))")

print("\nEach central edge carries two glued copies:")
for (central, i), att in sorted(full.attachments.items())[:4]:
    print(f"  edge {central}, copy {i}: new vertex {att.new_vertices},"
          f" edges {sorted(att.edges)}")
