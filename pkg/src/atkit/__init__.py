"""Vertex orderings of AT-free graphs: convexity-guided BFS, two-sweep pipelines and verifiers."""

from .convexity import (
    BetweennessOracle, ConvexSet, admissible_vertices, anti_exchange_holds, build_oracle,
    convex_hull, find_asteroidal_triple, interval, is_between, is_convex, is_halfspace,
    is_transitive_betweenness,
)
from .errors import *  # noqa: F401,F403
from .graph import Graph, LayerDecomposition, Path, bfs_layers, components_avoiding, path_avoiding
from .io import fixtures, parse_graph, serialise_graph, to_dot
from .pipelines import (
    ClawWitness, badclawfree_atfree_order, clawfree_atfree_order, find_bad_claw, find_claw,
    layers_are_cliques, lemma3_check,
)
from .searches import (
    Ordering, SearchTrace, bfs, bfs_conv, bfs_conv_augmented, bfs_conv_minhull, bfs_plus, lbfs,
    lbfs_plus,
)
from .verifiers import (
    Violation, exists_atfree_bfs_order_bruteforce, exists_atfree_order_bruteforce,
    exists_bilateral_order_bruteforce, has_spine_property, is_atfree_order,
    is_bfs_order, is_bilateral_atfree_order, is_dominating_pair, is_lbfs_order,
    is_monotone_dp_order, spine_property_hereditary,
)

__version__ = "0.1.0"
