"""k-fold edge-rooted graph products and their reduced forms.

The product starts from a central copy of G and glues k copies of a rooted
graph (H, h) onto every central edge, the root edge landing on the central
edge.  The reduced form then deletes the central edges.  For a central edge
{x, y} with x < y, x always plays the smaller root endpoint: the root edge is
symmetric enough that the orientation choice is immaterial up to isomorphism,
and fixing it makes the construction deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graphs import Edge, Graph, _norm_edge


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: Edge

    def __post_init__(self):
        root = _norm_edge(*self.root)
        if root not in self.graph.edges:
            raise DomainError(f"root {self.root} is not an edge of the graph")
        object.__setattr__(self, "root", root)


@dataclass(frozen=True)
class Attachment:
    """One glued copy of H: its fresh vertices and its edges other than the root."""

    new_vertices: tuple
    edges: frozenset


@dataclass
class ProductGraph:
    graph: Graph
    central_vertices: tuple
    central_edges: frozenset
    attachments: dict  # (central edge, copy index 1..k) -> Attachment
    reduced: bool


def edge_rooted_product(g: Graph, rooted: RootedGraph, k: int) -> ProductGraph:
    """The k-fold edge-rooted product of g with (H, h)."""
    return _build(g, rooted, k, reduced=False)


def reduced_edge_rooted_product(g: Graph, rooted: RootedGraph, k: int) -> ProductGraph:
    """As the full product, but with the central copy's edges deleted."""
    return _build(g, rooted, k, reduced=True)


def _build(g: Graph, rooted: RootedGraph, k: int, reduced: bool) -> ProductGraph:
    if k < 1:
        raise DomainError("k must be a positive integer")
    if g.e == 0:
        raise DomainError("central graph needs at least one edge")
    h = rooted.graph
    if h.n <= 2:
        raise DomainError("rooted graph needs at least 3 vertices")
    ru, rv = rooted.root

    edges = set() if reduced else set(g.edges)
    attachments = {}
    fresh = g.n
    others = [w for w in h.vertices if w not in (ru, rv)]
    for central in g.sorted_edges():
        x, y = central  # x < y: x plays ru, y plays rv
        for i in range(1, k + 1):
            vmap = {ru: x, rv: y}
            new_vertices = []
            for w in others:
                vmap[w] = fresh
                new_vertices.append(fresh)
                fresh += 1
            copy_edges = set()
            for a, b in h.sorted_edges():
                if (a, b) == rooted.root:
                    continue
                copy_edges.add(_norm_edge(vmap[a], vmap[b]))
            edges |= copy_edges
            attachments[(central, i)] = Attachment(tuple(new_vertices),
                                                   frozenset(copy_edges))
    graph = Graph.of(fresh, edges)
    return ProductGraph(graph=graph,
                        central_vertices=tuple(range(g.n)),
                        central_edges=frozenset(g.edges),
                        attachments=attachments,
                        reduced=reduced)
