"""Exact graph-density invariants: d, d1, d2 and their subgraph maxima m, m1, m2.

All values are ``fractions.Fraction``; no floating point ever enters a density
comparison.  The subgraph maximization scans every vertex subset (it suffices
to scan induced subgraphs, since adding edges on a fixed vertex set never
decreases any of the three densities), so inputs are guarded by a vertex cap.

Density kinds are numbered 0, 1, 2:

    kind 0:  d(G)  = e/v
    kind 1:  d1(G) = e/(v-1), 0 for edgeless graphs
    kind 2:  d2(G) = (e-1)/(v-2), with 0 for edgeless graphs and 1/2 for K2
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import BudgetExceededError, DomainError
from .graphs import Graph, induced_subgraph

DEFAULT_VERTEX_CAP = 16

_CHUNK_BITS = 20


def local_density(g: Graph, kind: int) -> Fraction:
    """Density of the graph itself (no subgraph maximization)."""
    if kind not in (0, 1, 2):
        raise DomainError(f"unknown density kind {kind}")
    v, e = g.n, g.e
    if kind == 0:
        if v == 0:
            raise DomainError("d undefined on the 0-vertex graph")
        return Fraction(e, v)
    if e == 0:
        return Fraction(0)
    if kind == 1:
        return Fraction(e, v - 1)
    if v == 2:
        # a simple graph on 2 vertices with an edge is exactly K2
        return Fraction(1, 2)
    return Fraction(e - 1, v - 2)


@dataclass(frozen=True)
class DensityReport:
    value: Fraction
    witness: tuple
    kind: int


@lru_cache(maxsize=4096)
def _max_edges_by_size(g: Graph, cap: int) -> tuple:
    """For each subset size v, the maximum induced edge count over size-v subsets."""
    n = g.n
    if n > cap:
        raise BudgetExceededError(
            f"subset scan over {n} vertices exceeds cap {cap}; raise the cap explicitly")
    maxe = [0] * (n + 1)
    edges = g.sorted_edges()
    for lo in range(0, 1 << n, 1 << _CHUNK_BITS):
        hi = min(lo + (1 << _CHUNK_BITS), 1 << n)
        masks = np.arange(lo, hi, dtype=np.uint32)
        vc = np.bitwise_count(masks)
        ec = np.zeros(hi - lo, dtype=np.int16)
        for u, v in edges:
            ec += ((masks >> np.uint32(u)) & (masks >> np.uint32(v)) & np.uint32(1)).astype(np.int16)
        for size in range(n + 1):
            sel = ec[vc == size]
            if sel.size:
                maxe[size] = max(maxe[size], int(sel.max()))
    return tuple(maxe)


def _kind_value(size: int, e: int, kind: int) -> Fraction:
    if kind == 0:
        return Fraction(e, size)
    if e == 0:
        return Fraction(0)
    if kind == 1:
        return Fraction(e, size - 1)
    if size == 2:
        return Fraction(1, 2)
    return Fraction(e - 1, size - 2)


def _candidate_sizes(n: int, kind: int):
    return range(1 if kind == 0 else 0, n + 1)


def max_density(g: Graph, kind: int, cap: int = DEFAULT_VERTEX_CAP) -> DensityReport:
    """Maximum of ``local_density`` over induced subgraphs on every vertex subset.

    Ties break to the smallest witness cardinality, then lexicographically.
    """
    if kind not in (0, 1, 2):
        raise DomainError(f"unknown density kind {kind}")
    if kind == 0 and g.n == 0:
        raise DomainError("d undefined on the 0-vertex graph")
    maxe = _max_edges_by_size(g, cap)
    best_val = None
    best_size = None
    for size in _candidate_sizes(g.n, kind):
        val = _kind_value(size, maxe[size], kind)
        if best_val is None or val > best_val:
            best_val, best_size = val, size
    witness = _lex_smallest_witness(g, best_size, maxe[best_size], cap)
    return DensityReport(best_val, witness, kind)


def _lex_smallest_witness(g: Graph, size: int, ecount: int, cap: int) -> tuple:
    if size == 0:
        return ()
    n = g.n
    edges = g.sorted_edges()
    best = None
    for lo in range(0, 1 << n, 1 << _CHUNK_BITS):
        hi = min(lo + (1 << _CHUNK_BITS), 1 << n)
        masks = np.arange(lo, hi, dtype=np.uint32)
        vc = np.bitwise_count(masks)
        ec = np.zeros(hi - lo, dtype=np.int16)
        for u, v in edges:
            ec += ((masks >> np.uint32(u)) & (masks >> np.uint32(v)) & np.uint32(1)).astype(np.int16)
        hits = np.nonzero((vc == size) & (ec == ecount))[0]
        for idx in hits:
            cand = tuple(b for b in range(n) if (lo + int(idx)) >> b & 1)
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def balancedness(g: Graph, kind: int, strict: bool = False,
                 cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """Is the graph (strictly) balanced for the given density kind?

    Non-strict: the graph itself attains its subgraph maximum.  Strict:
    additionally every proper subgraph with at least one edge (and, for
    kind 2, at least 3 vertices) has strictly smaller local density; proper
    subgraphs are covered by induced subgraphs on proper vertex subsets plus
    single-edge deletions of the graph itself.
    """
    if g.e == 0:
        raise DomainError("balancedness needs a graph with at least one edge")
    loc = local_density(g, kind)
    maxe = _max_edges_by_size(g, cap)
    for size in _candidate_sizes(g.n, kind):
        if _kind_value(size, maxe[size], kind) > loc:
            return False
    if not strict:
        return True
    min_size = 3 if kind == 2 else (1 if kind == 0 else 2)
    for size in range(min_size, g.n):
        e = maxe[size]
        if e >= 1 and _kind_value(size, e, kind) >= loc:
            return False
    # single-edge deletions of g on the full vertex set
    if g.e >= 2 or kind == 0:
        e = g.e - 1
        if (e >= 1 or kind == 0) and _kind_value(g.n, e, kind) >= loc:
            return False
    return True


def _max_value(g: Graph, kind: int, cap: int) -> Fraction:
    # value-only variant of max_density, skipping the witness rescan
    if kind == 0 and g.n == 0:
        raise DomainError("d undefined on the 0-vertex graph")
    maxe = _max_edges_by_size(g, cap)
    return max(_kind_value(size, maxe[size], kind)
               for size in _candidate_sizes(g.n, kind))


def find_m2_decreasing_edge(h: Graph, cap: int = DEFAULT_VERTEX_CAP):
    """Lexicographically first edge whose removal lowers m2, or None."""
    if h.e == 0:
        raise DomainError("graph has no edges")
    m2h = _max_value(h, 2, cap)
    for edge in h.sorted_edges():
        if _max_value(h.without_edge(edge), 2, cap) < m2h:
            return edge
    return None


# Convenience aliases used throughout the package.

def m2(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> Fraction:
    return _max_value(g, 2, cap)


def m1(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> Fraction:
    return _max_value(g, 1, cap)


def m(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> Fraction:
    return _max_value(g, 0, cap)
