"""Coloring bipartite planar graphs with at most twice the maximum degree.

Route: split the edges into max-degree matchings, then give each matching a
private color pair.  Inside one matching the only remaining hazard is a
4-cycle carrying two of its edges (as an opposite pair); the conflict graph
recording those pairs contains no odd cycle when the host graph is planar
and bipartite, so a 2-coloring of it finishes the job.
"""

from __future__ import annotations

from ..errors import FMNotBipartite, NotBipartite, NotPlanar
from ..graph import EdgeColoring, Graph, enumerate_c4, is_bipartite
from ..recognition import is_planar
from .edgecolor import konig_edge_coloring


def matching_conflict_graph(g: Graph, matching: frozenset[int]) -> dict[int, set[int]]:
    """Adjacency over the matching's edges: two edges conflict when they are
    an opposite pair of some 4-cycle of g."""
    conflicts: dict[int, set[int]] = {e: set() for e in matching}
    for cyc in enumerate_c4(g):
        for e, f in cyc.opposite_pairs:
            if e in matching and f in matching:
                conflicts[e].add(f)
                conflicts[f].add(e)
    return conflicts


def two_color_conflicts(conflicts: dict[int, set[int]]) -> dict[int, int]:
    """2-color the conflict graph (sides 0/1); odd cycles are impossible for
    valid inputs, so one aborts loudly."""
    side: dict[int, int] = {}
    for root in sorted(conflicts):
        if root in side:
            continue
        side[root] = 0
        queue = [root]
        while queue:
            x = queue.pop()
            for y in conflicts[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    raise FMNotBipartite(
                        "odd conflict cycle inside a matching; input is not "
                        "bipartite planar or there is a bug"
                    )
    return side


def color_bipartite_planar(g: Graph) -> EdgeColoring:
    """B-coloring of a bipartite planar graph with at most 2*max-degree colors."""
    if is_bipartite(g)[0] is None:
        raise NotBipartite("color_bipartite_planar needs a bipartite graph")
    if not is_planar(g)[0]:
        raise NotPlanar("color_bipartite_planar needs a planar graph")
    decomposition = konig_edge_coloring(g)
    coloring = EdgeColoring(g.m)
    for i, matching in enumerate(decomposition.matchings):
        conflicts = matching_conflict_graph(g, matching)
        side = two_color_conflicts(conflicts)
        for e in matching:
            coloring.set(e, 2 * i + 1 + side[e])
    return coloring.normalized()
