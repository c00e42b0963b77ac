"""Simple undirected graphs, copy enumeration and edge-disjoint copy packing.

Graphs live on vertices ``0..n-1`` with a set of unordered edges.  Copies of a
pattern inside a host are unlabelled images: two embeddings with the same image
vertex-and-edge set count as one copy.  Containment is plain subgraph
containment, never induced (a copy of C4 exists inside K4).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceededError, DomainError, GraphParseError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("vertex count must be non-negative")
        for e in self.edges:
            u, v = e
            if u == v:
                raise DomainError(f"loop edge {e}")
            if not (0 <= u < v < self.n):
                raise DomainError(f"edge {e} out of range or not normalized for n={self.n}")

    @classmethod
    def of(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing edge orientation and collapsing duplicates."""
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges))

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(adjacency(self)[v])

    def support(self) -> frozenset:
        """Vertices incident to at least one edge."""
        return frozenset(v for e in self.edges for v in e)

    def without_edge(self, edge: tuple[int, int]) -> "Graph":
        edge = _norm_edge(*edge)
        if edge not in self.edges:
            raise DomainError(f"edge {edge} not present")
        return Graph(self.n, self.edges - {edge})


@lru_cache(maxsize=4096)
def adjacency(g: Graph) -> tuple[frozenset, ...]:
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return tuple(frozenset(s) for s in adj)


# ---------------------------------------------------------------------------
# Construction helpers

def complete_graph(n: int) -> Graph:
    return Graph.of(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs at least 3 vertices")
    return Graph.of(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on n vertices (n-1 edges)."""
    return Graph.of(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def relabel(g: Graph, perm: dict) -> Graph:
    """Apply a vertex permutation (dict old -> new)."""
    return Graph.of(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def union_graphs(a: Graph, b: Graph) -> Graph:
    if a.n != b.n:
        raise DomainError("union requires graphs on the same vertex set")
    return Graph(a.n, a.edges | b.edges)


def induced_subgraph(g: Graph, subset: Iterable[int]) -> Graph:
    """Induced subgraph on ``subset``, relabelled by the order-preserving map."""
    verts = sorted(set(subset))
    for v in verts:
        if not (0 <= v < g.n):
            raise DomainError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(verts)}
    vset = set(verts)
    return Graph.of(len(verts), [(index[u], index[v]) for u, v in g.edges
                                 if u in vset and v in vset])


# ---------------------------------------------------------------------------
# Parsing and serialization

def parse_graph(text: str) -> Graph:
    """Parse a graph from edge-list text or the JSON form.

    Edge-list form: a header line with the vertex count, then one ``u v``
    pair per line.  JSON form: ``{"n": int, "edges": [[u, v], ...]}``.
    Duplicate edges collapse to one.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    return _parse_edge_list(text)


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj:
        raise GraphParseError("JSON graph must be an object with an 'n' field")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphParseError(f"bad vertex count {n!r}")
    edges = []
    for item in obj.get("edges", []):
        if not (isinstance(item, list) and len(item) == 2):
            raise GraphParseError(f"bad edge entry {item!r}")
        u, v = item
        _check_endpoints(u, v, n, repr(item))
        edges.append((u, v))
    return Graph.of(n, edges)


def _parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphParseError("empty graph description")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphParseError(f"bad header line {lines[0]!r}") from None
    if n < 0:
        raise GraphParseError(f"bad vertex count {n}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"malformed edge line {ln!r}") from None
        _check_endpoints(u, v, n, ln)
        edges.append((u, v))
    return Graph.of(n, edges)


def _check_endpoints(u, v, n, token):
    if not isinstance(u, int) or not isinstance(v, int):
        raise GraphParseError(f"non-integer endpoint in {token}")
    if u == v:
        raise GraphParseError(f"loop edge in {token}")
    if u < 0 or v < 0 or u >= n or v >= n:
        raise GraphParseError(f"endpoint out of range in {token}")


def serialize_graph(g: Graph) -> str:
    """Edge-list text form; parse_graph(serialize_graph(g)) == g."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def graph_to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges()]}


def serialize_graph_json(g: Graph) -> str:
    return json.dumps(graph_to_json_obj(g), sort_keys=True)


# ---------------------------------------------------------------------------
# Copy enumeration

@dataclass(frozen=True)
class Copy:
    """Unlabelled image of a pattern: the host vertices and host edges it occupies."""

    vertices: tuple
    edges: frozenset

    def sorted_edge_list(self) -> tuple:
        return tuple(sorted(self.edges))

    def sort_key(self):
        return (self.sorted_edge_list(), self.vertices)


def _search_order(pattern: Graph) -> list[int]:
    # Fail-first: start from the highest-degree vertex, then always pick the
    # vertex with the most already-placed neighbours.
    adj = adjacency(pattern)
    remaining = set(pattern.vertices)
    order = []
    while remaining:
        if order:
            placed = set(order)
            nxt = max(remaining,
                      key=lambda v: (len(adj[v] & placed), len(adj[v]), -v))
        else:
            nxt = max(remaining, key=lambda v: (len(adj[v]), -v))
        order.append(nxt)
        remaining.discard(nxt)
    return order


def find_embeddings(pattern: Graph, host: Graph,
                    seed: Optional[dict] = None) -> Iterator[dict]:
    """Yield all injective maps pattern -> host sending edges to edges.

    ``seed`` optionally fixes part of the map in advance.
    """
    padj = adjacency(pattern)
    hadj = adjacency(host)
    seed = dict(seed or {})
    if len(set(seed.values())) != len(seed):
        return
    order = [v for v in _search_order(pattern) if v not in seed]
    mapping = dict(seed)
    used = set(seed.values())

    for a, ha in seed.items():
        if host.n <= ha or len(hadj[ha]) < len(padj[a]):
            return
        for b in padj[a]:
            if b in seed and seed[b] not in hadj[ha]:
                return

    def extend(i: int) -> Iterator[dict]:
        if i == len(order):
            yield dict(mapping)
            return
        a = order[i]
        mapped_nbrs = [b for b in padj[a] if b in mapping]
        if mapped_nbrs:
            cands = set(hadj[mapping[mapped_nbrs[0]]])
            for b in mapped_nbrs[1:]:
                cands &= hadj[mapping[b]]
            cands = sorted(cands)
        else:
            cands = range(host.n)
        deg_a = len(padj[a])
        for hv in cands:
            if hv in used or len(hadj[hv]) < deg_a:
                continue
            mapping[a] = hv
            used.add(hv)
            yield from extend(i + 1)
            del mapping[a]
            used.discard(hv)

    yield from extend(0)


def _copy_from_mapping(pattern: Graph, mapping: dict) -> Copy:
    verts = tuple(sorted(mapping.values()))
    edges = frozenset(_norm_edge(mapping[a], mapping[b]) for a, b in pattern.edges)
    return Copy(verts, edges)


def find_copies(pattern: Graph, host: Graph) -> list[Copy]:
    """All distinct unlabelled copies of pattern in host, in deterministic order."""
    seen = {}
    for mapping in find_embeddings(pattern, host):
        c = _copy_from_mapping(pattern, mapping)
        seen[(c.vertices, c.edges)] = c
    return sorted(seen.values(), key=Copy.sort_key)


def has_copy(pattern: Graph, host: Graph) -> bool:
    for _ in find_embeddings(pattern, host):
        return True
    return False


def has_copy_using_edge(pattern: Graph, host: Graph, edge: tuple[int, int]) -> bool:
    """Does host contain a copy of pattern whose image uses the given host edge?"""
    x, y = _norm_edge(*edge)
    if not host.has_edge(x, y):
        return False
    for a, b in pattern.edges:
        for seed in ({a: x, b: y}, {a: y, b: x}):
            for _ in find_embeddings(pattern, host, seed=seed):
                return True
    return False


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Isomorphism test via embedding search (equal counts + any embedding)."""
    if a.n != b.n or a.e != b.e:
        return False
    if sorted(len(s) for s in adjacency(a)) != sorted(len(s) for s in adjacency(b)):
        return False
    return has_copy(a, b)


# ---------------------------------------------------------------------------
# Edge-disjoint copy packing

@dataclass(frozen=True)
class CopyPacking:
    copies: tuple

    @property
    def size(self) -> int:
        return len(self.copies)


def max_edge_disjoint_copies(pattern: Graph, host: Graph, mode: str = "exact",
                             cap: int = 5000) -> CopyPacking:
    """Edge-disjoint copies of pattern in host.

    ``exact`` returns a maximum packing (branch and bound over the full copy
    list, refused above ``cap`` copies); ``greedy`` returns a maximal packing
    built by scanning copies in deterministic order.
    """
    if pattern.e == 0:
        raise DomainError("packing needs a pattern with at least one edge")
    copies = find_copies(pattern, host)
    if mode == "greedy":
        chosen = []
        used = set()
        for c in copies:
            if not (c.edges & used):
                chosen.append(c)
                used |= c.edges
        return CopyPacking(tuple(chosen))
    if mode != "exact":
        raise DomainError(f"unknown packing mode {mode!r}")
    if len(copies) > cap:
        raise BudgetExceededError(
            f"{len(copies)} copies exceeds exact-mode cap {cap}; use greedy mode")

    best: list = []
    pe = pattern.e
    he = host.e

    def rec(i: int, chosen: list, used: frozenset):
        nonlocal best
        bound = min(len(copies) - i, (he - len(used)) // pe)
        if len(chosen) + bound <= len(best):
            return
        if i == len(copies):
            if len(chosen) > len(best):
                best = list(chosen)
            return
        c = copies[i]
        if not (c.edges & used):
            chosen.append(c)
            rec(i + 1, chosen, used | c.edges)
            chosen.pop()
        rec(i + 1, chosen, used)
        if len(chosen) > len(best):
            best = list(chosen)

    rec(0, [], frozenset())
    return CopyPacking(tuple(best))
