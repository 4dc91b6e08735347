"""Matroid intersection coloring.

Colors the common independent sets of one arbitrary matroid and any
number of partition matroids with at most ``1 + sum(chromatic_i - 1)``
colors, via augmenting paths in an exchange digraph.  Ships the
single-matroid colorer it builds on, two applications (rainbow covers
of disjoint independent blocks, and graph-matroid strong coloring via
edge coloring), brute-force verification oracles, instance file I/O,
seeded generators, and a CLI.
"""

from .edmonds import (
    Coloring,
    ExchangeDigraph,
    apply_path,
    build_digraph,
    chromatic_number,
    color_single,
    is_color_chordless,
    verify_coloring,
)
from .errors import (
    ContractError,
    FormatError,
    InputError,
    InvariantViolationError,
    ValidationError,
)
from .applications import (
    RainbowInstance,
    SimpleGraph,
    edge_color,
    matching_to_partition,
    rainbow_cover,
    strong_color,
)
from .brute import brute_chromatic
from .intersection import (
    IntersectionInstance,
    LayeredSubgraph,
    build_layered_subgraph,
    color_intersection,
    find_path,
    greedy_baseline,
)
from .matroids import (
    CountingMatroid,
    ExplicitMatroid,
    GraphicMatroid,
    GroundSet,
    LaminarMatroid,
    Matroid,
    PartitionMatroid,
    TransversalMatroid,
    UniformMatroid,
    axiom_check,
    partition_chromatic,
)

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "ContractError",
    "CountingMatroid",
    "ExchangeDigraph",
    "ExplicitMatroid",
    "FormatError",
    "GraphicMatroid",
    "GroundSet",
    "InputError",
    "IntersectionInstance",
    "InvariantViolationError",
    "LaminarMatroid",
    "LayeredSubgraph",
    "Matroid",
    "PartitionMatroid",
    "RainbowInstance",
    "SimpleGraph",
    "TransversalMatroid",
    "UniformMatroid",
    "ValidationError",
    "apply_path",
    "axiom_check",
    "brute_chromatic",
    "build_digraph",
    "build_layered_subgraph",
    "chromatic_number",
    "color_intersection",
    "color_single",
    "edge_color",
    "find_path",
    "greedy_baseline",
    "is_color_chordless",
    "matching_to_partition",
    "partition_chromatic",
    "rainbow_cover",
    "strong_color",
    "verify_coloring",
]
