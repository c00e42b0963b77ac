"""Edge colourings, monochromatic-copy search and the forcing-structure check.

Colours are the strings ``red``, ``blue`` and ``green``; two-colour contexts
restrict to red and blue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .densities import m2
from .errors import DomainError
from .graphs import (Copy, Edge, Graph, _norm_edge, find_copies, has_copy,
                     has_copy_using_edge, induced_subgraph, union_graphs)

RED = "red"
BLUE = "blue"
GREEN = "green"
COLOURS = (RED, BLUE, GREEN)


def palette_colours(palette: int) -> tuple:
    if palette == 2:
        return (RED, BLUE)
    if palette == 3:
        return COLOURS
    raise DomainError(f"palette must be 2 or 3, got {palette}")


@dataclass(frozen=True)
class Colouring:
    """Total or partial assignment of host edges to colours."""

    host: Graph
    assignment: dict

    def __post_init__(self):
        norm = {_norm_edge(*e): c for e, c in self.assignment.items()}
        for e, c in norm.items():
            if e not in self.host.edges:
                raise DomainError(f"coloured pair {e} is not a host edge")
            if c not in COLOURS:
                raise DomainError(f"unknown colour {c!r}")
        object.__setattr__(self, "assignment", norm)

    @property
    def total(self) -> bool:
        return len(self.assignment) == self.host.e

    def colour_of(self, edge) -> Optional[str]:
        return self.assignment.get(_norm_edge(*edge))

    def colour_class(self, colour: str) -> Graph:
        """Subgraph formed by the edges of one colour."""
        return Graph(self.host.n,
                     frozenset(e for e, c in self.assignment.items() if c == colour))

    def used_colours(self) -> set:
        return set(self.assignment.values())

    def to_json_obj(self) -> dict:
        return {"edges": [{"u": u, "v": v, "colour": self.assignment[(u, v)]}
                          for u, v in sorted(self.assignment)]}

    @classmethod
    def from_json_obj(cls, host: Graph, obj: dict) -> "Colouring":
        assignment = {}
        for item in obj["edges"]:
            assignment[(item["u"], item["v"])] = item["colour"]
        return cls(host, assignment)


def monochromatic_copies(col: Colouring, pattern: Graph, colour: str) -> list[Copy]:
    """All copies of the pattern inside one colour class of a total colouring."""
    if not col.total:
        raise DomainError("colouring must be total")
    return find_copies(pattern, col.colour_class(colour))


def is_mono_free(col: Colouring, pattern: Graph) -> bool:
    return all(not monochromatic_copies(col, pattern, c) for c in col.used_colours())


# ---------------------------------------------------------------------------
# Search for monochromatic-H-free colourings

FOUND = "found"
NONE_EXISTS = "none-exists"
UNKNOWN = "unknown"


@dataclass
class SearchResult:
    status: str
    colouring: Optional[Colouring]
    nodes: int


def search_h_free_colouring(g: Graph, pattern: Graph, r: int,
                            budget: int = 10_000_000) -> SearchResult:
    """Backtracking search for a total r-colouring of g with no monochromatic pattern.

    Edges are assigned in descending order of the number of pattern copies
    through them (fail-first); only copies completed by the newest edge are
    checked; the first edge is pinned to one colour by colour symmetry.
    """
    if pattern.e < 2:
        raise DomainError("pattern needs at least 2 edges")
    if budget <= 0:
        raise DomainError("budget must be positive")
    colours = palette_colours(r)

    copies = find_copies(pattern, g)
    edge_order = _fail_first_edge_order(g, copies)
    edge_index = {e: i for i, e in enumerate(edge_order)}
    copy_sets = [frozenset(edge_index[e] for e in c.edges) for c in copies]
    by_edge: list[list[frozenset]] = [[] for _ in edge_order]
    for cs in copy_sets:
        for i in cs:
            by_edge[i].append(cs)

    assign: list[Optional[str]] = [None] * len(edge_order)
    nodes = 0

    def conflict(i: int, colour: str) -> bool:
        for cs in by_edge[i]:
            if all(assign[j] == colour for j in cs if j != i):
                return True
        return False

    def rec(i: int) -> Optional[str]:
        nonlocal nodes
        if i == len(edge_order):
            return FOUND
        options = colours[:1] if i == 0 else colours
        for colour in options:
            nodes += 1
            if nodes > budget:
                return UNKNOWN
            if conflict(i, colour):
                continue
            assign[i] = colour
            out = rec(i + 1)
            if out is not None:
                if out == FOUND:
                    return FOUND
                assign[i] = None
                return out
            assign[i] = None
        return None

    out = rec(0)
    if out == FOUND:
        col = Colouring(g, {edge_order[i]: assign[i] for i in range(len(edge_order))})
        return SearchResult(FOUND, col, nodes)
    if out == UNKNOWN:
        return SearchResult(UNKNOWN, None, nodes)
    return SearchResult(NONE_EXISTS, None, nodes)


def _fail_first_edge_order(g: Graph, copies: list[Copy]) -> list[Edge]:
    weight = {e: 0 for e in g.edges}
    for c in copies:
        for e in c.edges:
            weight[e] += 1
    return sorted(g.edges, key=lambda e: (-weight[e], e))


# ---------------------------------------------------------------------------
# The greedy third-colour extension strategy

def greedy_third_colour_extension(col: Colouring, new_edges: list,
                                  pattern: Graph) -> Colouring:
    """Process new edges in order: green unless that completes a green pattern copy,
    in which case red.  By construction the result has no green copy of the pattern.
    """
    if not col.total:
        raise DomainError("base colouring must be total")
    if GREEN in col.used_colours():
        raise DomainError("base colouring already uses green")
    new_edges = [_norm_edge(*e) for e in new_edges]
    if set(new_edges) & col.host.edges:
        raise DomainError("new edges must be disjoint from the host's edges")

    n = col.host.n
    all_edges = col.host.edges | set(new_edges)
    result = dict(col.assignment)
    green_edges: set = set()
    for e in new_edges:
        candidate = Graph(n, frozenset(green_edges | {e}))
        if has_copy_using_edge(pattern, candidate, e):
            result[e] = RED
        else:
            result[e] = GREEN
            green_edges.add(e)
    return Colouring(Graph(n, frozenset(all_edges)), result)


# ---------------------------------------------------------------------------
# Forcing structures (the four-condition predicate)

@dataclass(frozen=True)
class ForcingStructure:
    """Two overlapping edge-coloured gadgets plus the matching that joins them.

    All three live on a common universe of ``n`` labelled vertices.  The red and
    blue sides carry explicit vertex sets (which may include isolated vertices)
    so that the intersection condition is meaningful.
    """

    n: int
    red_vertices: frozenset
    red: Graph
    blue_vertices: frozenset
    blue: Graph
    matching: frozenset  # of disjoint vertex pairs

    def __post_init__(self):
        object.__setattr__(self, "matching",
                           frozenset(_norm_edge(*p) for p in self.matching))

    def matching_vertices(self) -> frozenset:
        return frozenset(v for p in self.matching for v in p)


@dataclass
class ForcingReport:
    holds: bool
    violated: Optional[str]  # "i" | "ii" | "iii" | "iv"
    witness: Optional[object]
    notes: list = field(default_factory=list)


def check_forcing_structure(pattern: Graph, s: ForcingStructure,
                            cap: int = 26) -> ForcingReport:
    """Check the four forcing-structure conditions against the pattern.

    (i) structural validity of the matching and the side overlap;
    (ii) the pattern's 2-density strictly exceeds that of the union;
    (iii) a density bound over all subgraphs containing the matching vertices
    (scanned as induced subgraphs on vertex supersets, which maximize the edge
    count at fixed vertex set); (iv) every red/blue split of the matching
    leaves the pattern inside one augmented side.
    """
    notes: list = []
    vm = s.matching_vertices()

    # (i) matching disjointness, side overlap, independence
    if 2 * len(s.matching) != len(vm):
        return ForcingReport(False, "i", "matching pairs are not disjoint", notes)
    for g, vs, name in ((s.red, s.red_vertices, "red"), (s.blue, s.blue_vertices, "blue")):
        if not g.support() <= vs:
            return ForcingReport(False, "i", f"{name} edges leave the {name} vertex set", notes)
    if s.red_vertices & s.blue_vertices != vm:
        return ForcingReport(False, "i",
                             "side vertex sets do not intersect exactly in the matching vertices",
                             notes)
    for g, name in ((s.red, "red"), (s.blue, "blue")):
        for u, v in g.edges:
            if u in vm and v in vm:
                return ForcingReport(False, "i",
                                     f"matching vertices not independent in {name}: edge {(u, v)}",
                                     notes)

    union = union_graphs(s.red, s.blue)
    support = sorted(s.red_vertices | s.blue_vertices)

    # (ii) strict 2-density gap
    m2_pattern = m2(pattern, cap=cap)
    union_on_support = induced_subgraph(union, support)
    m2_union = m2(union_on_support, cap=cap)
    if not m2_pattern > m2_union:
        return ForcingReport(False, "ii",
                             {"m2_pattern": str(m2_pattern), "m2_union": str(m2_union)},
                             notes)

    # (iii) density bound over supersets of the matching vertices
    bad = _condition_iii_violation(union, support, vm, m2_pattern, notes)
    if bad is not None:
        return ForcingReport(False, "iii", bad, notes)

    # (iv) pattern containment for every matching split
    pairs = sorted(s.matching)
    for split in range(1 << len(pairs)):
        red_side = Graph(s.n, s.red.edges | frozenset(
            p for j, p in enumerate(pairs) if split >> j & 1))
        blue_side = Graph(s.n, s.blue.edges | frozenset(
            p for j, p in enumerate(pairs) if not split >> j & 1))
        if not (has_copy(pattern, red_side) or has_copy(pattern, blue_side)):
            witness = {"matching_red": sorted(p for j, p in enumerate(pairs) if split >> j & 1),
                       "matching_blue": sorted(p for j, p in enumerate(pairs) if not split >> j & 1)}
            return ForcingReport(False, "iv", witness, notes)

    return ForcingReport(True, None, None, notes)


def _condition_iii_violation(union: Graph, support: list, vm: frozenset,
                             m2_pattern: Fraction, notes: list):
    """First subset violating the ratio bound, or None.  Flags equality cases."""
    free = [v for v in support if v not in vm]
    base = sorted(vm)
    a, b = m2_pattern.numerator, m2_pattern.denominator
    edges = union.sorted_edges()
    mcount = len(vm)
    nbits = len(free)
    tight = False
    for mask in range(1 << nbits):
        subset = base + [free[j] for j in range(nbits) if mask >> j & 1]
        sset = set(subset)
        e = sum(1 for u, v in edges if u in sset and v in sset)
        if e < 1:
            continue
        v = len(subset)
        # require m2_pattern >= e/(v - |V(M)|), i.e. a*(v-mcount) >= b*e
        lhs, rhs = a * (v - mcount), b * e
        if lhs < rhs:
            return {"vertices": sorted(subset), "edges": e,
                    "ratio": f"{e}/{v - mcount}"}
        if lhs == rhs:
            tight = True
    if tight:
        notes.append("condition (iii) holds with equality for some subgraph")
    return None


# ---------------------------------------------------------------------------
# The worked example: two triangles joined by a path

def two_triangles_joined_by_path(ell: int) -> Graph:
    """Two vertex-disjoint triangles whose apexes are joined by a path of length ell."""
    if ell < 1:
        raise DomainError("path length must be at least 1")
    # triangle 0-1-2 (apex 2), triangle 3-4-5 (apex 5), path 2 - 6 - ... - 5
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    inner = list(range(6, 6 + ell - 1))
    chain = [2] + inner + [5]
    edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return Graph.of(6 + ell - 1, edges)


def triangle_path_forcing_structure(ell: int) -> ForcingStructure:
    """The standard forcing structure for two triangles joined by a path of length ell.

    Three matching pairs, each supporting a red apex and a blue apex, with the
    red apexes joined pairwise by red paths of length ell and likewise in blue.
    """
    if ell < 2:
        raise DomainError("construction needs path length at least 2")
    # vertices: pairs (u_i, v_i) = (2i, 2i+1) for i in 0..2, red apexes 6..8,
    # blue apexes 9..11, then path interiors
    matching = [(2 * i, 2 * i + 1) for i in range(3)]
    red_edges = []
    blue_edges = []
    red_verts = set(v for p in matching for v in p)
    blue_verts = set(red_verts)
    for i in range(3):
        x, y = 6 + i, 9 + i
        red_edges += [(2 * i, x), (2 * i + 1, x)]
        blue_edges += [(2 * i, y), (2 * i + 1, y)]
        red_verts.add(x)
        blue_verts.add(y)
    nxt = 12
    for i in range(3):
        for j in range(i + 1, 3):
            for side, edges, verts in (("red", red_edges, red_verts),
                                       ("blue", blue_edges, blue_verts)):
                a = (6 + i) if side == "red" else (9 + i)
                b = (6 + j) if side == "red" else (9 + j)
                chain = [a] + list(range(nxt, nxt + ell - 1)) + [b]
                verts.update(chain)
                nxt += ell - 1
                edges += [(chain[t], chain[t + 1]) for t in range(len(chain) - 1)]
    n = nxt
    return ForcingStructure(
        n=n,
        red_vertices=frozenset(red_verts),
        red=Graph.of(n, red_edges),
        blue_vertices=frozenset(blue_verts),
        blue=Graph.of(n, blue_edges),
        matching=frozenset(matching),
    )
