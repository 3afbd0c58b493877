"""Classical edge-coloring subroutines.

konig_edge_coloring splits a bipartite graph's edges into max-degree many
matchings by incremental insertion with alternating-path swaps.
proper_edge_color is the fan-and-path recoloring algorithm giving a proper
coloring with at most max-degree+1 colors on any simple graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotBipartite
from ..graph import EdgeColoring, Graph, is_bipartite


@dataclass(frozen=True)
class MatchingDecomposition:
    """E(G) partitioned into max-degree many matchings."""

    matchings: tuple[frozenset[int], ...]

    def as_coloring(self, m: int) -> EdgeColoring:
        return EdgeColoring(
            m, {e: i + 1 for i, cls in enumerate(self.matchings) for e in cls}
        )


def konig_edge_coloring(g: Graph) -> MatchingDecomposition:
    """Partition the edges of a bipartite graph into max-degree matchings.

    Inserts edges one at a time; when no color is free at both endpoints,
    swaps an alternating two-color path to make one free.
    """
    parts, _ = is_bipartite(g)
    if parts is None:
        raise NotBipartite("konig_edge_coloring needs a bipartite graph")
    delta = g.max_degree()
    at: list[dict[int, int]] = [{} for _ in range(g.n)]  # vertex -> color -> edge

    def free(v: int) -> int:
        for c in range(1, delta + 1):
            if c not in at[v]:
                return c
        raise AssertionError("no free color at a vertex below max degree")

    color = [0] * g.m
    for e, (u, v) in enumerate(g.edges):
        fu, fv = free(u), free(v)
        if fu == fv or fu not in at[v]:
            c = fu
        elif fv not in at[u]:
            c = fv
        else:
            # swap colors fu/fv on the alternating path starting at v
            path = []
            x, want = v, fu
            while want in at[x]:
                e2 = at[x][want]
                path.append(e2)
                x = g.other(e2, x)
                want = fv if want == fu else fu
            for e2 in path:
                old = color[e2]
                new = fv if old == fu else fu
                color[e2] = new
                for y in g.endpoints(e2):
                    del at[y][old]
            for e2 in path:
                for y in g.endpoints(e2):
                    at[y][color[e2]] = e2
            c = fu
        color[e] = c
        at[u][c] = e
        at[v][c] = e
    classes = [frozenset(e for e in range(g.m) if color[e] == c) for c in range(1, delta + 1)]
    assert all(classes) or g.m == 0
    return MatchingDecomposition(matchings=tuple(classes))


def proper_edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most max-degree+1 colors (fan-and-path)."""
    k = g.max_degree() + 1
    at: list[dict[int, int]] = [{} for _ in range(g.n)]
    color = [0] * g.m

    def free_colors(v: int) -> list[int]:
        return [c for c in range(1, k + 1) if c not in at[v]]

    def uncolor(e: int) -> None:
        old = color[e]
        if old:
            u, v = g.endpoints(e)
            del at[u][old]
            del at[v][old]
            color[e] = 0

    def set_color(e: int, c: int) -> None:
        assert color[e] == 0
        u, v = g.endpoints(e)
        color[e] = c
        at[u][c] = e
        at[v][c] = e

    def invert_path(start: int, c: int, d: int) -> None:
        """Swap colors c/d along the maximal alternating path from start,
        whose first edge is colored d."""
        path = []
        x, want = start, d
        while want in at[x]:
            e2 = at[x][want]
            path.append(e2)
            x = g.other(e2, x)
            want = c if want == d else d
        for e2 in path:
            old = color[e2]
            for y in g.endpoints(e2):
                del at[y][old]
        for e2 in path:
            color[e2] = c if color[e2] == d else d
        for e2 in path:
            for y in g.endpoints(e2):
                at[y][color[e2]] = e2

    for e0 in range(g.m):
        u, v = g.endpoints(e0)
        # maximal fan of u starting at v
        fan = [v]
        fan_edges = [e0]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for c in free_colors(last):
                f = at[u].get(c)
                if f is not None:
                    w = g.other(f, u)
                    if w not in in_fan:
                        nxt = (w, f)
                        break
            if nxt is None:
                break
            fan.append(nxt[0])
            fan_edges.append(nxt[1])
            in_fan.add(nxt[0])
        c = free_colors(u)[0]
        d = free_colors(fan[-1])[0]
        if c != d and d in at[u]:
            invert_path(u, c, d)
        # smallest fan prefix, valid under the current colors, whose end
        # vertex has d free; existence is the fan-and-path theorem
        j = None
        for i, w in enumerate(fan):
            if i > 0 and color[fan_edges[i]] in at[fan[i - 1]]:
                break
            if d not in at[w]:
                j = i
                break
        assert j is not None, "no rotatable fan prefix (bug)"
        # rotate the prefix: each edge takes its successor's color, the last
        # takes d
        shifted = [color[fan_edges[i]] for i in range(j + 1)]
        for i in range(j + 1):
            uncolor(fan_edges[i])
        for i in range(j):
            set_color(fan_edges[i], shifted[i + 1])
        set_color(fan_edges[j], d)

    out = EdgeColoring(g.m, {e: c for e, c in enumerate(color)})
    return out.normalized()
