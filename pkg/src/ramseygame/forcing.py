"""Colour bases and colour-forced pairs and copies.

A pair {x, y} is a chi-base of a colouring when some chi-monochromatic copy of
the pattern minus one edge is supported on it, the pair playing the missing
edge.  A pair is chi-forced when it is a base in every palette colour other
than chi; a chi-forced copy of the pattern is one all of whose pairs are
chi-forced.  Bases are computed over all n-choose-2 pairs: the game's second
round can add edges anywhere.  One witness copy is stored per (pair, colour).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .colouring import COLOURS, Colouring, palette_colours
from .errors import DomainError
from .graphs import Copy, Graph, _norm_edge, find_copies, find_embeddings


@dataclass(frozen=True)
class BaseWitness:
    colour: str
    missing_edge: tuple  # the removed pattern edge
    copy_edges: frozenset  # host edges of the monochromatic copy of pattern-minus-edge
    copy_vertices: tuple


@dataclass
class BaseMap:
    n: int
    pairs: dict  # pair -> set of colours
    witnesses: dict  # (pair, colour) -> BaseWitness
    existing_edges: frozenset  # pairs already present in the host, kept but flagged

    def colours_of(self, pair) -> set:
        return self.pairs.get(_norm_edge(*pair), set())


@dataclass
class ForcedSet:
    forced_pairs: dict  # colour -> sorted list of pairs
    forced_copies: dict  # colour -> list of Copy (copies of the pattern in K_n)


def colour_bases(col: Colouring, pattern: Graph,
                 root_policy="all_edges") -> BaseMap:
    """Compute the chi-bases of a total colouring.

    ``root_policy`` is either the string ``"all_edges"`` (the missing edge
    ranges over every pattern edge) or a single pattern edge (a fixed-root
    convention).
    """
    if not col.total:
        raise DomainError("colouring must be total")
    if root_policy == "all_edges":
        roots = pattern.sorted_edges()
    else:
        root = _norm_edge(*root_policy)
        if root not in pattern.edges:
            raise DomainError(f"fixed root {root_policy} is not a pattern edge")
        roots = [root]

    pairs: dict = {}
    witnesses: dict = {}
    for colour in COLOURS:
        sub = col.colour_class(colour)
        if sub.e + 1 < pattern.e:
            continue
        for root in roots:
            a, b = root
            reduced = Graph(pattern.n, pattern.edges - {root})
            for mapping in find_embeddings(reduced, sub):
                pair = _norm_edge(mapping[a], mapping[b])
                key = (pair, colour)
                if key in witnesses:
                    continue
                copy_edges = frozenset(_norm_edge(mapping[u], mapping[v])
                                       for u, v in reduced.edges)
                witnesses[key] = BaseWitness(colour, root, copy_edges,
                                             tuple(sorted(mapping.values())))
                pairs.setdefault(pair, set()).add(colour)
    return BaseMap(n=col.host.n, pairs=pairs, witnesses=witnesses,
                   existing_edges=frozenset(p for p in pairs if p in col.host.edges))


def forced_set(bases: BaseMap, palette: int, pattern: Graph, n: int) -> ForcedSet:
    """Forced pairs and forced copies of the pattern in K_n for every colour."""
    active = palette_colours(palette)
    forced_pairs = {}
    forced_copies = {}
    for chi in COLOURS:
        required = [c for c in active if c != chi]
        if not required:
            continue
        pairs = sorted(p for p, cs in bases.pairs.items()
                       if all(c in cs for c in required))
        forced_pairs[chi] = pairs
        forced_graph = Graph.of(n, pairs)
        forced_copies[chi] = find_copies(pattern, forced_graph)
    return ForcedSet(forced_pairs=forced_pairs, forced_copies=forced_copies)


def green_forced_pairs(col: Colouring, pattern: Graph) -> list:
    """Pairs that are simultaneously red and blue bases (two-colour fast path)."""
    bases = colour_bases(col, pattern)
    return sorted(p for p, cs in bases.pairs.items() if RED_BLUE <= cs)


RED_BLUE = {"red", "blue"}
