"""Coloring planar graphs with at most 2*max-degree + 8 colors.

Elimination: pick a vertex of current degree at most five (one always exists
in a planar graph), peel off all of its current edges one by one, choosing
the neighbor by how entangled it is inside the picked vertex's neighborhood
(an unentangled neighbor first, then a barely-entangled one, then the rest);
repeat until no edges remain.  Recoloring replays the sequence backwards,
giving each edge the smallest color outside its forbidden set.

Peeling a vertex completely before moving on matters: it guarantees that
when an edge (v,w) is recolored, every colored opposite partner on a 4-cycle
through (v,w) joins the current neighborhoods of v and w, which is exactly
the configuration whose forbidden-color count stays below 2*max-degree + 8.
"""

from __future__ import annotations

from ..errors import BoundViolated, NotPlanar
from ..graph import EdgeColoring, Graph
from ..recognition import is_planar
from .verify import forbidden_colors


def color_planar(g: Graph) -> EdgeColoring:
    if not is_planar(g)[0]:
        raise NotPlanar("color_planar needs a planar graph")
    delta = g.max_degree()
    palette = 2 * delta + 8
    order = _elimination_order(g)
    assert len(order) == g.m
    coloring = EdgeColoring(g.m)
    for e in reversed(order):
        taken = forbidden_colors(g, coloring, e)
        c = next((c for c in range(1, palette + 1) if c not in taken), None)
        if c is None:
            raise BoundViolated(
                f"forbidden set saturated the {palette}-color palette at edge {e}"
            )
        coloring.set(e, c)
    return coloring.normalized()


def _elimination_order(g: Graph) -> list[int]:
    adj: list[set[int]] = [set(g.neighbor_sets[v]) for v in range(g.n)]
    order: list[int] = []
    alive = g.m
    while alive:
        v = min(
            (x for x in range(g.n) if adj[x]),
            key=lambda x: (len(adj[x]), x),
        )
        if len(adj[v]) > 5:
            raise NotPlanar("no vertex of degree at most five; graph is not planar")
        while adj[v]:
            w = _pick_neighbor(adj, v)
            e = g.edge_id(v, w)
            assert e is not None
            order.append(e)
            adj[v].discard(w)
            adj[w].discard(v)
            alive -= 1
    return order


def _pick_neighbor(adj: list[set[int]], v: int) -> int:
    """Neighbor choice: prefer a neighbor with no neighbors inside N(v), then
    one with exactly one, then (when all have two) any, then one with three
    or more.  Ties go to the smallest id."""
    w_set = adj[v]
    inner = {w: len(adj[w] & w_set) for w in w_set}
    for target in (0, 1):
        cands = [w for w, d in inner.items() if d == target]
        if cands:
            return min(cands)
    heavy = [w for w, d in inner.items() if d >= 3]
    if heavy:
        return min(heavy)
    return min(w_set)
