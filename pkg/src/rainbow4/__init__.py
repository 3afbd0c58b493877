"""rainbow4: proper edge colorings with rainbow 4-cycles on planar graphs.

A B-coloring is a proper edge coloring in which every 4-cycle carries four
distinct colors; the library provides exact minimum-palette oracles, the
constructive colorers for planar / bipartite-planar / subcubic-planar /
2-connected outerplanar graphs, recognition of those classes, generators for
the relevant graph families, and a CLI tying it together.
"""

from .bcolor import (
    BoundReport,
    MatchingDecomposition,
    VerifyReport,
    color_auto,
    color_bipartite_planar,
    color_outerplanar,
    color_planar,
    color_subcubic,
    forbidden_colors,
    konig_edge_coloring,
    proper_edge_color,
    qb_exact,
    qb_exact_direct,
    verify_bcoloring,
)
from .generators import FamilySpec, cartesian_product, gen_named, random_outerplanar, random_planar
from .graph import EdgeColoring, FourCycle, Graph, blocks, c4_through_edge, enumerate_c4, is_bipartite
from .lineplus import LinePlusGraph, build_line_plus, chromatic_number, clique_number, omega_f
from .recognition import (
    ClassLabel,
    KuratowskiWitness,
    OuterplanarLayout,
    classify,
    is_outerplanar,
    is_planar,
    outer_cycle,
)

__version__ = "0.1.0"
