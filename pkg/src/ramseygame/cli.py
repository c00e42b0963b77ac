"""Command-line entry point.

Subcommands: density, check, product, colour-search, check-forcing, forced,
simulate, sweep.  Structured artifacts are JSON (CSV for sweep tables); every
run also emits a RunManifest describing the resolved configuration.  Exit
codes: 0 success, 2 domain error, 3 budget exhaustion, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from . import __version__
from .colouring import (Colouring, ForcingStructure, check_forcing_structure,
                        search_h_free_colouring, FOUND, NONE_EXISTS)
from .densities import (balancedness, find_m2_decreasing_edge, local_density,
                        max_density)
from .errors import BudgetExceededError, DomainError, GraphParseError
from .forcing import colour_bases, forced_set
from .game import (GameConfig, monte_carlo, play_two_round, sweep_rows_to_csv,
                   ROUND_ONE_UNKNOWN)
from .graphs import Graph, graph_to_json_obj, parse_graph
from .products import RootedGraph, edge_rooted_product, reduced_edge_rooted_product

SPEC_VERSION = "1"

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64


def _load_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


class _Output:
    """Collects output text; writes to --out (or stdout for '-'/unset) plus a
    manifest alongside file outputs (stderr otherwise)."""

    def __init__(self, args, command: str):
        self.out_path = getattr(args, "out", None)
        self.quiet = getattr(args, "quiet", False)
        self.manifest = {
            "tool_version": __version__,
            "spec_version": SPEC_VERSION,
            "subcommand": command,
            "config": {k: v for k, v in vars(args).items() if k != "func"},
            "seed": getattr(args, "seed", None),
            "started": datetime.now(timezone.utc).isoformat(),
        }

    def emit(self, text: str):
        self.manifest["finished"] = datetime.now(timezone.utc).isoformat()
        manifest_text = json.dumps(self.manifest, indent=2, default=str) + "\n"
        if self.out_path and self.out_path != "-":
            with open(self.out_path, "w") as fh:
                fh.write(text)
            with open(self.out_path + ".manifest.json", "w") as fh:
                fh.write(manifest_text)
        else:
            sys.stdout.write(text)
            if not self.quiet:
                sys.stderr.write(manifest_text)


_KIND_BY_NAME = {"d": 0, "d1": 1, "d2": 2, "m": 0, "m1": 1, "m2": 2}


def cmd_density(args) -> int:
    g = _load_graph(args.graph)
    kind = _KIND_BY_NAME[args.kind]
    out = _Output(args, "density")
    if args.kind.startswith("m"):
        report = max_density(g, kind)
        value = report.value
        text = f"{value.numerator}/{value.denominator}\nwitness: {' '.join(map(str, report.witness))}\n"
    else:
        value = local_density(g, kind)
        text = f"{value.numerator}/{value.denominator}\n"
    out.emit(text)
    return EXIT_OK


_PREDICATES = {
    "balanced": (0, False),
    "strictly-balanced": (0, True),
    "1-balanced": (1, False),
    "strictly-1-balanced": (1, True),
    "2-balanced": (2, False),
    "strictly-2-balanced": (2, True),
}


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    out = _Output(args, "check")
    if args.predicate == "m2-decreasing-edge":
        edge = find_m2_decreasing_edge(g)
        if edge is None:
            out.emit("none\n")
        else:
            out.emit(f"edge: {edge[0]} {edge[1]}\n")
        return EXIT_OK
    kind, strict = _PREDICATES[args.predicate]
    verdict = balancedness(g, kind, strict=strict)
    if verdict:
        out.emit("true\n")
    else:
        report = max_density(g, kind)
        out.emit(f"false\ncounterexample witness: {' '.join(map(str, report.witness))}\n")
    return EXIT_OK


def cmd_product(args) -> int:
    g = _load_graph(args.g)
    h = _load_graph(args.h)
    u, v = (int(x) for x in args.root.split(","))
    rooted = RootedGraph(h, (u, v))
    build = reduced_edge_rooted_product if args.reduced else edge_rooted_product
    prod = build(g, rooted, args.k)
    obj = {
        "graph": graph_to_json_obj(prod.graph),
        "central_vertices": list(prod.central_vertices),
        "central_edges": [list(e) for e in sorted(prod.central_edges)],
        "reduced": prod.reduced,
        "attachments": [
            {"central_edge": list(ce), "copy": i,
             "new_vertices": list(att.new_vertices),
             "edges": [list(e) for e in sorted(att.edges)]}
            for (ce, i), att in sorted(prod.attachments.items())
        ],
    }
    _Output(args, "product").emit(json.dumps(obj, indent=2) + "\n")
    return EXIT_OK


def cmd_colour_search(args) -> int:
    g = _load_graph(args.g)
    h = _load_graph(args.h)
    res = search_h_free_colouring(g, h, args.colours, budget=args.budget)
    obj = {"status": res.status, "nodes": res.nodes,
           "colouring": res.colouring.to_json_obj() if res.colouring else None}
    _Output(args, "colour-search").emit(json.dumps(obj, indent=2) + "\n")
    if res.status not in (FOUND, NONE_EXISTS):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_check_forcing(args) -> int:
    h = _load_graph(args.h)
    obj = _load_json(args.structure)
    s = ForcingStructure(
        n=obj["n"],
        red_vertices=frozenset(obj["red"]["vertices"]),
        red=Graph.of(obj["n"], obj["red"]["edges"]),
        blue_vertices=frozenset(obj["blue"]["vertices"]),
        blue=Graph.of(obj["n"], obj["blue"]["edges"]),
        matching=frozenset(tuple(p) for p in obj["matching"]),
    )
    report = check_forcing_structure(h, s)
    out = {"holds": report.holds, "violated_condition": report.violated,
           "witness": report.witness, "notes": report.notes}
    _Output(args, "check-forcing").emit(json.dumps(out, indent=2, default=str) + "\n")
    return EXIT_OK


def cmd_forced(args) -> int:
    g = _load_graph(args.g)
    h = _load_graph(args.h)
    col = Colouring.from_json_obj(g, _load_json(args.colouring))
    policy = "all_edges"
    if args.root:
        u, v = (int(x) for x in args.root.split(","))
        policy = (u, v)
    bases = colour_bases(col, h, root_policy=policy)
    fs = forced_set(bases, args.palette, h, g.n)
    obj = {
        "forced_pairs": {c: [list(p) for p in ps] for c, ps in fs.forced_pairs.items()},
        "forced_copy_counts": {c: len(cs) for c, cs in fs.forced_copies.items()},
    }
    if args.witnesses:
        obj["forced_copies"] = {
            c: [[list(e) for e in sorted(copy.edges)] for copy in cs]
            for c, cs in fs.forced_copies.items()}
        obj["base_witnesses"] = [
            {"pair": list(pair), "colour": w.colour,
             "missing_edge": list(w.missing_edge),
             "copy_edges": [list(e) for e in sorted(w.copy_edges)]}
            for (pair, _), w in sorted(bases.witnesses.items())]
    _Output(args, "forced").emit(json.dumps(obj, indent=2) + "\n")
    return EXIT_OK


def cmd_simulate(args) -> int:
    obj = _load_json(args.config)
    if args.seed is not None:
        obj["seed"] = args.seed
    config = GameConfig.from_json_obj(obj)
    if args.trials and args.trials > 1:
        rows = monte_carlo([config], args.trials, master_seed=config.seed)
        _Output(args, "simulate").emit(json.dumps(rows, indent=2) + "\n")
        return EXIT_OK
    transcript = play_two_round(config)
    _Output(args, "simulate").emit(json.dumps(transcript.to_json_obj(), indent=2) + "\n")
    if transcript.verdict in ("unknown", ROUND_ONE_UNKNOWN):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_sweep(args) -> int:
    obj = _load_json(args.config)
    master = obj.get("seed", 0) if args.seed is None else args.seed
    trials = args.trials if args.trials else obj.get("trials", 10)
    base = {k: v for k, v in obj.items() if k not in ("grid", "trials", "seed")}
    configs = []
    for point in obj["grid"]:
        merged = dict(base)
        merged.update(point)
        merged.setdefault("seed", 0)
        configs.append(GameConfig.from_json_obj(merged))
    rows = monte_carlo(configs, trials, master_seed=master)
    _Output(args, "sweep").emit(sweep_rows_to_csv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramseygame", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None, help="output path, '-' for stdout")
        p.add_argument("--quiet", action="store_true")
        p.add_argument("--threads", type=int, default=1,
                       help="max parallel trials (results are schedule-independent)")

    p = sub.add_parser("density", help="exact density invariant of a graph")
    p.add_argument("graph")
    p.add_argument("--kind", required=True, choices=sorted(_KIND_BY_NAME))
    common(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("check", help="balancedness predicates")
    p.add_argument("graph")
    p.add_argument("--predicate", required=True,
                   choices=sorted(_PREDICATES) + ["m2-decreasing-edge"])
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("product", help="k-fold edge-rooted product")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--root", required=True, help="root edge as u,v")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--reduced", action="store_true")
    common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("colour-search", help="search for a monochromatic-free colouring")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--colours", type=int, required=True, choices=(2, 3))
    p.add_argument("--budget", type=int, default=10_000_000)
    common(p)
    p.set_defaults(func=cmd_colour_search)

    p = sub.add_parser("check-forcing", help="check the four forcing-structure conditions")
    p.add_argument("h")
    p.add_argument("structure", help="JSON file with n, red, blue, matching")
    common(p)
    p.set_defaults(func=cmd_check_forcing)

    p = sub.add_parser("forced", help="colour bases and forced pairs/copies")
    p.add_argument("g")
    p.add_argument("colouring")
    p.add_argument("h")
    p.add_argument("--palette", type=int, required=True, choices=(2, 3))
    p.add_argument("--root", default=None, help="fixed root edge as u,v")
    p.add_argument("--witnesses", action="store_true")
    common(p)
    p.set_defaults(func=cmd_forced)

    p = sub.add_parser("simulate", help="play the two-round game")
    p.add_argument("--config", required=True)
    p.add_argument("--trials", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="Monte Carlo sweep over a config grid")
    p.add_argument("--config", required=True)
    p.add_argument("--trials", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (DomainError, GraphParseError) as exc:
        sys.stderr.write(f"error in {args.command}: {exc}\n")
        return EXIT_DOMAIN
    except BudgetExceededError as exc:
        sys.stderr.write(f"budget exceeded in {args.command}: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
