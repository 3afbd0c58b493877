"""Core graph representation, 4-cycle machinery, and structural decompositions.

Vertices are the integers 0..n-1.  Edges carry stable integer ids 0..m-1
assigned at construction; every coloring and every derived structure keys on
edge ids, never on endpoint pairs, so colorings survive the subgraph and
deletion operations used by the inductive colorers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional

from .errors import InvalidParams, PartialColoring, UnknownEdge


class SubgraphMap(NamedTuple):
    """Back-maps from a derived graph to its parent.

    vertex_to_parent[i] is the parent id of vertex i; edge_to_parent[j] is the
    parent edge id of edge j.
    """

    vertex_to_parent: tuple[int, ...]
    edge_to_parent: tuple[int, ...]


class Graph:
    """A simple undirected graph: no self-loops, no parallel edges.

    Immutable after construction; the mutation-style operations return a new
    graph together with a :class:`SubgraphMap`.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InvalidParams(f"vertex count must be nonnegative, got {n}")
        self.n = n
        pairs = []
        index: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParams(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidParams(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise InvalidParams(f"parallel edge ({u},{v})")
            index[key] = len(pairs)
            pairs.append(key)
        self.edges: tuple[tuple[int, int], ...] = tuple(pairs)
        self.m = len(pairs)
        self._eid = index
        adj: list[list[int]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(pairs):
            adj[u].append(eid)
            adj[v].append(eid)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)

    # -- basic queries ------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def endpoints(self, e: int) -> tuple[int, int]:
        if not 0 <= e < self.m:
            raise UnknownEdge(f"edge id {e} not in graph with m={self.m}")
        return self.edges[e]

    def other(self, e: int, v: int) -> int:
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise UnknownEdge(f"vertex {v} not an endpoint of edge {e}")

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._eid.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) is not None

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.adj[v]]

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.neighbors(v)) for v in range(self.n))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- 4-cycle machinery --------------------------------------------------

    @cached_property
    def _four_cycles(self) -> tuple["FourCycle", ...]:
        found: dict[tuple[int, int, int, int], FourCycle] = {}
        nbr = self.neighbor_sets
        for u in range(self.n):
            for w in range(u + 1, self.n):
                common = sorted(nbr[u] & nbr[w])
                for i in range(len(common)):
                    for j in range(i + 1, len(common)):
                        x, y = common[i], common[j]
                        quad = _canonical_quad(u, x, w, y)
                        if quad not in found:
                            found[quad] = self._make_cycle(quad)
        return tuple(found[k] for k in sorted(found))

    def _make_cycle(self, quad: tuple[int, int, int, int]) -> "FourCycle":
        a, b, c, d = quad
        eids = (
            self.edge_id(a, b),
            self.edge_id(b, c),
            self.edge_id(c, d),
            self.edge_id(d, a),
        )
        assert all(e is not None for e in eids)
        return FourCycle(vertices=quad, edge_ids=eids)  # type: ignore[arg-type]

    @cached_property
    def _c4_by_edge(self) -> tuple[tuple["FourCycle", ...], ...]:
        per_edge: list[list[FourCycle]] = [[] for _ in range(self.m)]
        for cyc in self._four_cycles:
            for e in cyc.edge_ids:
                per_edge[e].append(cyc)
        return tuple(tuple(cs) for cs in per_edge)

    # -- derived graphs -----------------------------------------------------

    def delete_edges(self, edge_ids: Iterable[int]) -> tuple["Graph", SubgraphMap]:
        drop = set(edge_ids)
        for e in drop:
            if not 0 <= e < self.m:
                raise UnknownEdge(f"edge id {e} not in graph with m={self.m}")
        keep = [e for e in range(self.m) if e not in drop]
        g = Graph(self.n, [self.edges[e] for e in keep])
        return g, SubgraphMap(tuple(range(self.n)), tuple(keep))

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Graph", SubgraphMap]:
        drop = set(vertices)
        keep_v = [v for v in range(self.n) if v not in drop]
        remap = {v: i for i, v in enumerate(keep_v)}
        keep_e = [
            e for e, (u, v) in enumerate(self.edges) if u not in drop and v not in drop
        ]
        g = Graph(
            len(keep_v), [(remap[self.edges[e][0]], remap[self.edges[e][1]]) for e in keep_e]
        )
        return g, SubgraphMap(tuple(keep_v), tuple(keep_e))

    def subgraph_on_edges(self, edge_ids: Iterable[int]) -> tuple["Graph", SubgraphMap]:
        """Graph spanned by the given edges; vertices are the covered ones."""
        keep_e = sorted(set(edge_ids))
        verts = sorted({v for e in keep_e for v in self.endpoints(e)})
        remap = {v: i for i, v in enumerate(verts)}
        g = Graph(
            len(verts), [(remap[self.edges[e][0]], remap[self.edges[e][1]]) for e in keep_e]
        )
        return g, SubgraphMap(tuple(verts), tuple(keep_e))

    def add_isolated_vertex(self) -> "Graph":
        return Graph(self.n + 1, self.edges)


def _canonical_quad(a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    """Lexicographically smallest of the 8 rotations/reflections of (a,b,c,d)."""
    seq = (a, b, c, d)
    best = None
    for rot in range(4):
        fwd = tuple(seq[(rot + i) % 4] for i in range(4))
        rev = tuple(seq[(rot - i) % 4] for i in range(4))
        for cand in (fwd, rev):
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


@dataclass(frozen=True)
class FourCycle:
    """A 4-cycle in canonical form.

    vertices are in cycle order (a,b,c,d); edge_ids are the ids of
    (a,b),(b,c),(c,d),(d,a).  The two opposite (independent) edge pairs are
    {(a,b),(c,d)} and {(b,c),(d,a)}.
    """

    vertices: tuple[int, int, int, int]
    edge_ids: tuple[int, int, int, int]

    @property
    def opposite_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        e = self.edge_ids
        return (e[0], e[2]), (e[1], e[3])

    def other_edges(self, e: int) -> tuple[int, ...]:
        return tuple(x for x in self.edge_ids if x != e)


class EdgeColoring:
    """A total or partial map edge-id -> positive color."""

    def __init__(self, m: int, assignment: Optional[dict[int, int]] = None):
        self.m = m
        self._colors: list[Optional[int]] = [None] * m
        if assignment:
            for e, c in assignment.items():
                self.set(e, c)

    def set(self, e: int, color: int) -> None:
        if not 0 <= e < self.m:
            raise UnknownEdge(f"edge id {e} out of range")
        if color < 1:
            raise InvalidParams(f"colors are positive integers, got {color}")
        self._colors[e] = color

    def unset(self, e: int) -> None:
        self._colors[e] = None

    def get(self, e: int) -> Optional[int]:
        if not 0 <= e < self.m:
            raise UnknownEdge(f"edge id {e} out of range")
        return self._colors[e]

    def __getitem__(self, e: int) -> int:
        c = self.get(e)
        if c is None:
            raise PartialColoring(f"edge {e} is uncolored")
        return c

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self._colors)

    @property
    def palette_size(self) -> int:
        return max((c for c in self._colors if c is not None), default=0)

    def assigned(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self._colors) if c is not None}

    def copy(self) -> "EdgeColoring":
        return EdgeColoring(self.m, self.assigned())

    def normalized(self) -> "EdgeColoring":
        """Remap colors onto 1..k with no gaps, preserving relative order."""
        used = sorted({c for c in self._colors if c is not None})
        remap = {c: i + 1 for i, c in enumerate(used)}
        return EdgeColoring(
            self.m, {e: remap[c] for e, c in enumerate(self._colors) if c is not None}
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeColoring)
            and self.m == other.m
            and self._colors == other._colors
        )

    def __repr__(self) -> str:
        return f"EdgeColoring(m={self.m}, palette={self.palette_size})"


# -- module-level operations ------------------------------------------------


def enumerate_c4(g: Graph) -> list[FourCycle]:
    """Every 4-cycle of g exactly once, in sorted canonical order."""
    return list(g._four_cycles)


def c4_through_edge(g: Graph, e: int) -> list[FourCycle]:
    """The 4-cycles of g containing edge e."""
    if not 0 <= e < g.m:
        raise UnknownEdge(f"edge id {e} not in graph with m={g.m}")
    return list(g._c4_by_edge[e])


def blocks(g: Graph) -> list[tuple[Graph, SubgraphMap]]:
    """2-connected blocks and bridge edges, each with back-maps to g.

    Every edge appears in exactly one block.  Iterative Hopcroft-Tarjan with
    an explicit edge stack.
    """
    visited = [False] * g.n
    disc = [0] * g.n
    low = [0] * g.n
    out: list[list[int]] = []
    timer = 0
    for root in range(g.n):
        if visited[root] or g.degree(root) == 0:
            continue
        estack: list[int] = []
        # stack frames: (vertex, parent edge id, iterator position)
        stack = [(root, -1, 0)]
        visited[root] = True
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pe, i = stack[-1]
            if i < len(g.adj[v]):
                stack[-1] = (v, pe, i + 1)
                e = g.adj[v][i]
                if e == pe:
                    continue
                w = g.other(e, v)
                if not visited[w]:
                    visited[w] = True
                    disc[w] = low[w] = timer
                    timer += 1
                    estack.append(e)
                    stack.append((w, e, 0))
                elif disc[w] < disc[v]:
                    estack.append(e)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        comp = []
                        while estack:
                            comp.append(estack.pop())
                            if comp[-1] == pe:
                                break
                        out.append(comp)
        assert not estack
    return [g.subgraph_on_edges(comp) for comp in sorted(out, key=min)]


def is_bipartite(
    g: Graph,
) -> tuple[Optional[tuple[frozenset[int], frozenset[int]]], Optional[list[int]]]:
    """Return (bipartition, None) or (None, odd closed walk), never both.

    The walk is a vertex sequence w0,...,wk with w0 == wk, consecutive
    vertices adjacent, and k odd.
    """
    side: list[Optional[int]] = [None] * g.n
    parent: list[int] = [-1] * g.n
    for root in range(g.n):
        if side[root] is not None:
            continue
        side[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w in g.neighbors(v):
                if side[w] is None:
                    side[w] = 1 - side[v]  # type: ignore[operator]
                    parent[w] = v
                    queue.append(w)
                elif side[w] == side[v]:
                    return None, _odd_walk(parent, v, w)
    left = frozenset(v for v in range(g.n) if side[v] == 0)
    right = frozenset(v for v in range(g.n) if side[v] == 1)
    return (left, right), None


def _odd_walk(parent: list[int], v: int, w: int) -> list[int]:
    """Closed odd walk through the conflict edge (v,w) via BFS-tree paths."""
    pv = _root_path(parent, v)
    pw = _root_path(parent, w)
    # drop the common prefix up to the lowest common ancestor
    k = 0
    while k < min(len(pv), len(pw)) and pv[k] == pw[k]:
        k += 1
    walk = pv[k - 1 :] + list(reversed(pw[k - 1 :]))
    # walk = lca..v, w..lca ; closing edge (v,w) sits in the middle
    assert walk[0] == walk[-1] and len(walk) % 2 == 0
    return walk


def _root_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    path.reverse()
    return path
