"""Verifier, exact oracles, and the constructive colorers."""

from .auto import BoundReport, color_auto, theoretical_bound
from .bipartite import color_bipartite_planar, matching_conflict_graph
from .edgecolor import MatchingDecomposition, konig_edge_coloring, proper_edge_color
from .exact import qb_exact, qb_exact_direct
from .outerplanar import color_outerplanar
from .planar import color_planar
from .subcubic import color_subcubic
from .verify import VerifyReport, Violation, forbidden_colors, verify_bcoloring

__all__ = [
    "BoundReport",
    "MatchingDecomposition",
    "VerifyReport",
    "Violation",
    "color_auto",
    "color_bipartite_planar",
    "color_outerplanar",
    "color_planar",
    "color_subcubic",
    "forbidden_colors",
    "konig_edge_coloring",
    "matching_conflict_graph",
    "proper_edge_color",
    "qb_exact",
    "qb_exact_direct",
    "theoretical_bound",
    "verify_bcoloring",
]
