"""Exact density invariants, edge-rooted products, colour forcing and a
two-round Ramsey game simulator for random graphs."""

from .graphs import (Graph, Copy, CopyPacking, parse_graph, serialize_graph,
                     find_copies, find_embeddings, max_edge_disjoint_copies,
                     induced_subgraph, complete_graph, cycle_graph, path_graph,
                     empty_graph, are_isomorphic)
from .densities import (DensityReport, local_density, max_density, balancedness,
                        find_m2_decreasing_edge, m, m1, m2)
from .products import (RootedGraph, ProductGraph, edge_rooted_product,
                       reduced_edge_rooted_product)
from .colouring import (RED, BLUE, GREEN, Colouring, monochromatic_copies,
                        search_h_free_colouring, greedy_third_colour_extension,
                        ForcingStructure, check_forcing_structure,
                        two_triangles_joined_by_path,
                        triangle_path_forcing_structure)
from .forcing import BaseMap, ForcedSet, colour_bases, forced_set
from .game import (GameConfig, GameTranscript, sample_gnp, decide_extendability,
                   naive_decide_extendability, play_two_round, monte_carlo,
                   subgraph_count_statistics, derive_seed)
from .errors import GraphParseError, DomainError, BudgetExceededError

__version__ = "0.1.0"
