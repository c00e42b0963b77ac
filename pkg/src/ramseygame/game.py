"""The two-round Ramsey game: sampling, adjudication and Monte Carlo sweeps.

Round one samples G(n, p) with p = c * n^(-1/m2(H)) and an adversary supplies a
monochromatic-H-free colouring.  Round two samples extra edges G(n, q); the
engine decides whether the colouring extends without a monochromatic H.

Randomness contract: all sampling is driven by numpy's PCG64 generator.  A
64-bit stream seed is derived from the master seed and a label as the first
8 bytes of SHA-256 over ``"<master>|<label>|..."``; sweeps derive per-trial
seeds from (master seed, grid point, trial index) the same way.  Identical
configuration and master seed give identical results on every platform.
"""

from __future__ import annotations

import hashlib
import itertools
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import sqrt
from typing import Optional

import numpy as np

from .colouring import (COLOURS, Colouring, SearchResult, UNKNOWN, FOUND,
                        NONE_EXISTS, is_mono_free, palette_colours,
                        search_h_free_colouring)
from .densities import m as density_m, m2
from .errors import DomainError
from .forcing import BaseMap, ForcedSet, colour_bases, forced_set
from .graphs import (Graph, _norm_edge, find_copies, graph_to_json_obj,
                     max_edge_disjoint_copies, parse_graph, union_graphs)

EXTENDABLE = "extendable"
NOT_EXTENDABLE = "not-extendable"

ROUND_ONE_NONE_EXISTS = "round-one-none-exists"
ROUND_ONE_UNKNOWN = "round-one-unknown"
ROUND_ONE_REJECTED = "round-one-rejected"


def derive_seed(master: int, *labels) -> int:
    """First 8 bytes of SHA-256 over the pipe-joined labels, as an integer."""
    text = "|".join([str(master)] + [str(x) for x in labels])
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


def sample_gnp(n: int, prob: float, seed: int) -> Graph:
    """Binomial random graph: each pair appears independently with probability prob."""
    if not 0.0 <= prob <= 1.0:
        raise DomainError(f"edge probability must satisfy 0 <= p <= 1, got {prob}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.random(len(pairs))
    return Graph(n, frozenset(p for p, u in zip(pairs, draws) if u < prob))


# ---------------------------------------------------------------------------
# Configuration

@dataclass(frozen=True)
class GameConfig:
    n: int
    pattern: Graph
    palette: int
    c: Optional[float] = None
    p: Optional[float] = None
    q: Optional[float] = None
    q_coeff: Optional[float] = None
    colouring_source: str = "search"
    supplied_colouring: Optional[dict] = None
    search_budget: int = 2_000_000
    extend_budget: int = 2_000_000
    seed: int = 0

    def __post_init__(self):
        if self.palette not in (2, 3):
            raise DomainError("palette must be 2 or 3")
        if (self.c is None) == (self.p is None):
            raise DomainError("exactly one of c and p must be given")
        if (self.q is None) == (self.q_coeff is None):
            raise DomainError("exactly one of q and q_coeff must be given")
        if self.colouring_source not in ("search", "supplied", "adversarial-greedy"):
            raise DomainError(f"unknown colouring source {self.colouring_source!r}")
        if self.colouring_source == "supplied" and self.supplied_colouring is None:
            raise DomainError("supplied colouring source needs a colouring")
        if self.p is not None and not 0.0 <= self.p <= 1.0:
            raise DomainError(f"round-one probability must satisfy 0 <= p <= 1, got {self.p}")
        if self.q is not None and not 0.0 <= self.q <= 1.0:
            raise DomainError(f"round-two probability must satisfy 0 <= q <= 1, got {self.q}")

    def round_one_probability(self) -> float:
        if self.p is not None:
            return self.p
        exponent = -1 / m2(self.pattern)  # exact Fraction
        val = self.c * self.n ** float(exponent)
        return min(1.0, max(0.0, val))

    def round_two_probability(self) -> float:
        if self.q is not None:
            return self.q
        if self.palette == 2:
            exponent = Fraction(-2)
        else:
            exponent = -1 / density_m(self.pattern)
        val = self.q_coeff * self.n ** float(exponent)
        return min(1.0, max(0.0, val))

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "pattern": graph_to_json_obj(self.pattern),
            "palette": self.palette,
            "c": self.c,
            "p": self.p,
            "q": self.q,
            "q_coeff": self.q_coeff,
            "colouring_source": self.colouring_source,
            "supplied_colouring": self.supplied_colouring,
            "search_budget": self.search_budget,
            "extend_budget": self.extend_budget,
            "seed": self.seed,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GameConfig":
        pattern = obj["pattern"]
        if isinstance(pattern, dict):
            pattern = Graph.of(pattern["n"], pattern.get("edges", []))
        else:
            pattern = parse_graph(pattern)
        kwargs = {k: obj[k] for k in ("c", "p", "q", "q_coeff", "colouring_source",
                                      "supplied_colouring", "search_budget",
                                      "extend_budget", "seed") if k in obj}
        return cls(n=obj["n"], pattern=pattern, palette=obj["palette"], **kwargs)

    def grid_key(self) -> str:
        return f"n={self.n};c={self.c};p={self.p};q={self.q};q_coeff={self.q_coeff};palette={self.palette}"


# ---------------------------------------------------------------------------
# Extendability

@dataclass
class ExtendVerdict:
    status: str  # extendable | not-extendable | unknown
    witness: Optional[Colouring] = None
    certificate: Optional[dict] = None
    nodes: int = 0


def decide_extendability(g: Graph, col: Colouring, new_edges, pattern: Graph,
                         palette: int, budget: int = 2_000_000,
                         use_fast_path: bool = True,
                         precomputed_forced: Optional[ForcedSet] = None) -> ExtendVerdict:
    """Can the colouring extend over the new edges without a monochromatic pattern?

    Fast path: a green-forced pair among the new edges (two colours) or a
    chi-forced pattern copy wholly inside them (three colours) certifies
    non-extendability outright.  Otherwise a backtracking search over colour
    assignments with incremental monochromatic-copy pruning decides; budget
    exhaustion yields the distinct verdict "unknown".
    """
    if not col.total:
        raise DomainError("round-one colouring must be total")
    if not is_mono_free(col, pattern):
        raise DomainError("round-one colouring contains a monochromatic pattern copy")
    new_edges = sorted({_norm_edge(*e) for e in new_edges})
    if set(new_edges) & col.host.edges:
        raise DomainError("new edges must be disjoint from round-one edges")

    if use_fast_path:
        cert = _fast_path_certificate(col, new_edges, pattern, palette,
                                      precomputed_forced)
        if cert is not None:
            return ExtendVerdict(NOT_EXTENDABLE, certificate=cert)

    return _backtrack_extension(col, new_edges, pattern, palette, budget)


def _fast_path_certificate(col, new_edges, pattern, palette, forced):
    if forced is None:
        bases = colour_bases(col, pattern)
        forced = forced_set(bases, palette, pattern, col.host.n)
    if palette == 2:
        green = set(forced.forced_pairs.get("green", []))
        for e in new_edges:
            if e in green:
                return {"type": "forced-pair", "pair": list(e)}
    else:
        new_set = set(new_edges)
        for chi in COLOURS:
            for copy in forced.forced_copies.get(chi, []):
                if copy.edges <= new_set:
                    return {"type": "forced-copy", "colour": chi,
                            "edges": sorted(list(e) for e in copy.edges)}
    return None


def _relevant_copies(col, new_edges, pattern):
    """Copies of the pattern in the union that touch a new edge, with their
    forced colour from the round-one part (None when fully inside new edges);
    copies whose round-one edges mix colours can never become monochromatic."""
    union = union_graphs(col.host, Graph(col.host.n, frozenset(new_edges)))
    new_index = {e: i for i, e in enumerate(new_edges)}
    out = []
    for copy in find_copies(pattern, union):
        new_ids = [new_index[e] for e in copy.edges if e in new_index]
        if not new_ids:
            continue
        old_cols = {col.assignment[e] for e in copy.edges if e not in new_index}
        if len(old_cols) > 1:
            continue
        out.append((frozenset(new_ids), old_cols.pop() if old_cols else None))
    return out


def _backtrack_extension(col, new_edges, pattern, palette, budget) -> ExtendVerdict:
    colours = palette_colours(palette)
    copies = _relevant_copies(col, new_edges, pattern)
    weight = [0] * len(new_edges)
    for ids, _ in copies:
        for i in ids:
            weight[i] += 1
    order = sorted(range(len(new_edges)), key=lambda i: (-weight[i], new_edges[i]))
    pos = {edge_id: rank for rank, edge_id in enumerate(order)}
    by_rank: list[list] = [[] for _ in new_edges]
    indexed = [(tuple(sorted(pos[i] for i in ids)), forced_col)
               for ids, forced_col in copies]
    for ranks, forced_col in indexed:
        by_rank[ranks[-1]].append((ranks, forced_col))

    assign: list[Optional[str]] = [None] * len(new_edges)
    nodes = 0

    def conflict(rank, colour):
        # only copies whose last (deepest) new edge is this one are fully
        # decided now; earlier partial copies were checked at their own depth
        for ranks, forced_col in by_rank[rank]:
            if forced_col is not None and forced_col != colour:
                continue
            if all(assign[r] == colour for r in ranks[:-1]):
                return True
        return False

    def rec(rank):
        nonlocal nodes
        if rank == len(new_edges):
            return FOUND
        for colour in colours:
            nodes += 1
            if nodes > budget:
                return UNKNOWN
            if conflict(rank, colour):
                continue
            assign[rank] = colour
            out = rec(rank + 1)
            if out == FOUND:
                return FOUND
            assign[rank] = None
            if out == UNKNOWN:
                return UNKNOWN
        return None

    out = rec(0)
    if out == FOUND:
        full = dict(col.assignment)
        for rank, edge_id in [(pos[i], i) for i in range(len(new_edges))]:
            full[new_edges[edge_id]] = assign[rank]
        host = union_graphs(col.host, Graph(col.host.n, frozenset(new_edges)))
        return ExtendVerdict(EXTENDABLE, witness=Colouring(host, full), nodes=nodes)
    if out == UNKNOWN:
        return ExtendVerdict(UNKNOWN, nodes=nodes)
    return ExtendVerdict(NOT_EXTENDABLE, certificate={"type": "exhaustive"}, nodes=nodes)


def naive_decide_extendability(g: Graph, col: Colouring, new_edges, pattern: Graph,
                               palette: int) -> str:
    """Oracle: enumerate every total extension directly."""
    new_edges = sorted({_norm_edge(*e) for e in new_edges})
    colours = palette_colours(palette)
    host = union_graphs(col.host, Graph(col.host.n, frozenset(new_edges)))
    for combo in itertools.product(colours, repeat=len(new_edges)):
        full = dict(col.assignment)
        full.update(zip(new_edges, combo))
        if is_mono_free(Colouring(host, full), pattern):
            return EXTENDABLE
    return NOT_EXTENDABLE


# ---------------------------------------------------------------------------
# Round-one colouring strategies

def adversarial_greedy_colouring(g: Graph, pattern: Graph, palette: int):
    """Heuristic round-one colouring: each edge takes the colour creating the
    fewest monochromatic copies, then the fewest one-edge-short copies; ties go
    to the earliest palette colour.  Returns (colouring, ok)."""
    colours = palette_colours(palette)
    copies = find_copies(pattern, g)
    by_edge = {e: [] for e in g.edges}
    for c in copies:
        for e in c.edges:
            by_edge[e].append(c)
    assignment: dict = {}
    ok = True
    for e in g.sorted_edges():
        scores = []
        for colour in colours:
            mono = near = 0
            for c in by_edge[e]:
                others = [assignment.get(f) for f in c.edges if f != e]
                unassigned = sum(1 for x in others if x is None)
                if any(x is not None and x != colour for x in others):
                    continue
                if unassigned == 0:
                    mono += 1
                elif unassigned == 1:
                    near += 1
            scores.append((mono, near))
        best = min(range(len(colours)), key=lambda i: scores[i])
        if scores[best][0] > 0:
            ok = False
        assignment[e] = colours[best]
    return Colouring(g, assignment), ok


# ---------------------------------------------------------------------------
# Playing the game

@dataclass
class GameTranscript:
    config: GameConfig
    round_one_graph: Graph
    colouring: Optional[Colouring]
    colouring_source_used: str
    forced_pair_counts: dict
    forced_copy_counts: dict
    round_two_edges: list
    verdict: str
    certificate: Optional[dict]
    witness: Optional[Colouring]
    nodes: int
    elapsed_seconds: float

    def to_json_obj(self) -> dict:
        return {
            "config": self.config.to_json_obj(),
            "round_one_graph": graph_to_json_obj(self.round_one_graph),
            "colouring": self.colouring.to_json_obj() if self.colouring else None,
            "colouring_source_used": self.colouring_source_used,
            "forced_pair_counts": self.forced_pair_counts,
            "forced_copy_counts": self.forced_copy_counts,
            "round_two_edges": [list(e) for e in self.round_two_edges],
            "verdict": self.verdict,
            "certificate": self.certificate,
            "witness": self.witness.to_json_obj() if self.witness else None,
            "nodes": self.nodes,
        }


def play_two_round(config: GameConfig) -> GameTranscript:
    start = time.monotonic()
    p = config.round_one_probability()
    q = config.round_two_probability()
    g = sample_gnp(config.n, p, derive_seed(config.seed, "round1"))

    col = None
    verdict = None
    nodes = 0
    source_used = config.colouring_source
    if config.colouring_source == "search":
        res = search_h_free_colouring(g, config.pattern, min(config.palette, 3),
                                      budget=config.search_budget)
        nodes += res.nodes
        if res.status == FOUND:
            col = res.colouring
        elif res.status == NONE_EXISTS:
            verdict = ROUND_ONE_NONE_EXISTS
        else:
            verdict = ROUND_ONE_UNKNOWN
    elif config.colouring_source == "adversarial-greedy":
        col, ok = adversarial_greedy_colouring(g, config.pattern, config.palette)
        if not ok:
            col, verdict = None, ROUND_ONE_REJECTED
    else:
        col = Colouring.from_json_obj(g, config.supplied_colouring)
        if not col.total:
            raise DomainError("supplied colouring is not total on the sampled graph")
        if not is_mono_free(col, config.pattern):
            bad = next(c for ch in col.used_colours()
                       for c in find_copies(config.pattern, col.colour_class(ch)))
            raise DomainError(f"supplied colouring has a monochromatic copy: {sorted(bad.edges)}")

    forced_pair_counts: dict = {}
    forced_copy_counts: dict = {}
    round_two = []
    certificate = None
    witness = None
    if col is not None:
        bases = colour_bases(col, config.pattern)
        forced = forced_set(bases, config.palette, config.pattern, config.n)
        forced_pair_counts = {c: len(v) for c, v in forced.forced_pairs.items()}
        forced_copy_counts = {c: len(v) for c, v in forced.forced_copies.items()}

        extra = sample_gnp(config.n, q, derive_seed(config.seed, "round2"))
        round_two = sorted(extra.edges - g.edges)
        result = decide_extendability(g, col, round_two, config.pattern,
                                      config.palette, budget=config.extend_budget,
                                      precomputed_forced=forced)
        nodes += result.nodes
        verdict = result.status
        certificate = result.certificate
        witness = result.witness

    return GameTranscript(
        config=config,
        round_one_graph=g,
        colouring=col,
        colouring_source_used=source_used,
        forced_pair_counts=forced_pair_counts,
        forced_copy_counts=forced_copy_counts,
        round_two_edges=round_two,
        verdict=verdict,
        certificate=certificate,
        witness=witness,
        nodes=nodes,
        elapsed_seconds=time.monotonic() - start,
    )


# ---------------------------------------------------------------------------
# Monte Carlo sweeps

SWEEP_COLUMNS = ["n", "c", "q_coeff", "palette", "trials", "frac_extendable",
                 "frac_not_extendable", "frac_unknown", "mean_forced_pairs",
                 "mean_forced_copies", "ci_halfwidth"]


def _forced_pair_stat(transcript: GameTranscript, palette: int) -> int:
    counts = transcript.forced_pair_counts
    if palette == 2:
        return counts.get("green", 0)
    return sum(counts.values())


def _forced_copy_stat(transcript: GameTranscript, palette: int) -> int:
    counts = transcript.forced_copy_counts
    if palette == 2:
        return counts.get("green", 0)
    return sum(counts.values())


def monte_carlo(configs: list, trials: int, master_seed: int = 0) -> list:
    """Independent trials per grid point; per-trial seeds are pure functions of
    (master seed, grid point, trial index), so any execution order gives the
    identical table.  Round-one terminal trials count as unknown."""
    if trials < 1:
        raise DomainError("trials must be at least 1")
    rows = []
    for config in configs:
        tallies = {EXTENDABLE: 0, NOT_EXTENDABLE: 0, UNKNOWN: 0}
        pair_counts = []
        copy_counts = []
        for t in range(trials):
            seed = derive_seed(master_seed, config.grid_key(), t)
            tr = play_two_round(replace(config, seed=seed))
            if tr.verdict in tallies:
                tallies[tr.verdict] += 1
            else:
                tallies[UNKNOWN] += 1
            pair_counts.append(_forced_pair_stat(tr, config.palette))
            copy_counts.append(_forced_copy_stat(tr, config.palette))
        fe = tallies[EXTENDABLE] / trials
        rows.append({
            "n": config.n,
            "c": config.c if config.c is not None else "",
            "q_coeff": config.q_coeff if config.q_coeff is not None else "",
            "palette": config.palette,
            "trials": trials,
            "frac_extendable": fe,
            "frac_not_extendable": tallies[NOT_EXTENDABLE] / trials,
            "frac_unknown": tallies[UNKNOWN] / trials,
            "mean_forced_pairs": sum(pair_counts) / trials,
            "mean_forced_copies": sum(copy_counts) / trials,
            "ci_halfwidth": 1.96 * sqrt(fe * (1 - fe) / trials),
        })
    return rows


def sweep_rows_to_csv(rows: list) -> str:
    lines = [",".join(SWEEP_COLUMNS)]
    for row in rows:
        cells = []
        for col in SWEEP_COLUMNS:
            val = row[col]
            if isinstance(val, float):
                cells.append(f"{val:.6f}")
            else:
                cells.append(str(val))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Empirical subgraph statistics

@dataclass
class SubgraphStatistics:
    pattern: Graph
    n: int
    prob: float
    trials: int
    bound_coefficient: float
    expected_bound: float
    per_trial: list
    violation_fraction: float


def subgraph_count_statistics(pattern: Graph, n: int, prob: float, trials: int,
                              seed: int, bound_coefficient: float = 10.0,
                              family_size: int = 10) -> SubgraphStatistics:
    """Per-trial copy counts, greedy edge-disjoint packing sizes and induced
    edge densities over a fixed seed-derived family of vertex sets, plus the
    fraction of trials whose copy count breaks the Markov-style bound
    ``K * n^v * p^e``."""
    if trials < 1:
        raise DomainError("trials must be at least 1")
    bound = bound_coefficient * n ** pattern.n * prob ** pattern.e
    rng = np.random.Generator(np.random.PCG64(derive_seed(seed, "family")))
    size = max(2, n // 4)
    family = [sorted(rng.choice(n, size=size, replace=False).tolist())
              for _ in range(family_size)]
    per_trial = []
    violations = 0
    for t in range(trials):
        g = sample_gnp(n, prob, derive_seed(seed, "trial", t))
        copies = find_copies(pattern, g)
        count = len(copies)
        if count > bound:
            violations += 1
        packing = max_edge_disjoint_copies(pattern, g, mode="greedy").size \
            if pattern.e >= 1 else 0
        dens = []
        for subset in family:
            sset = set(subset)
            e_in = sum(1 for u, v in g.edges if u in sset and v in sset)
            dens.append(e_in / (size * (size - 1) / 2))
        per_trial.append({
            "copy_count": count,
            "greedy_packing": packing,
            "min_density": min(dens),
            "max_density": max(dens),
        })
    return SubgraphStatistics(pattern, n, prob, trials, bound_coefficient, bound,
                              per_trial, violations / trials)
