"""Monochromatic-free colourings, forced pairs, and unextendable positions.

Run with:  python3 demos/ramsey_colourings.py
"""

import ramseygame as rg
from ramseygame.colouring import Colouring, search_h_free_colouring
from ramseygame.forcing import colour_bases, forced_set
from ramseygame.game import decide_extendability
from ramseygame.graphs import Graph

k3 = rg.complete_graph(3)

# K5 admits a triangle-free 2-colouring (two edge-disjoint 5-cycles); K6 does not.
for n in (5, 6):
    res = search_h_free_colouring(rg.complete_graph(n), k3, 2)
    print(f"K{n} with 2 colours, forbidden K3: {res.status} ({res.nodes} nodes)")

# A pair of cherries over the same endpoints makes the pair green-forced:
# red on it closes a red triangle, blue closes a blue one.
g = Graph.of(4, [(0, 2), (1, 2), (0, 3), (1, 3)])
col = Colouring(g, {(0, 2): "red", (1, 2): "red", (0, 3): "blue", (1, 3): "blue"})
fs = forced_set(colour_bases(col, k3), 2, k3, g.n)
print(f"\ngadget green-forced pairs: {fs.forced_pairs['green']}")

verdict = decide_extendability(g, col, [(0, 1)], k3, palette=2)
print(f"adding the forced pair as a new edge: {verdict.status}"
      f" (certificate {verdict.certificate})")

verdict3 = decide_extendability(g, col, [(0, 1)], k3, palette=3)
print(f"same position with a third colour available: {verdict3.status}")
