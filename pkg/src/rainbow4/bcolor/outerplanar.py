"""Coloring 2-connected outerplanar graphs with max-degree + 1 colors.

Exceptions first: the 4-cycle needs four colors and the 4-cycle with a chord
needs five.  Everything else is colored by peeling boundary faces (a chord
plus a chordless stretch of the outer cycle): color the rest recursively,
then extend over the stretch.  A boundary triangle resists extension only
when both chord ends are at full degree and a second triangle leans on the
chord from inside; when every face is like that, two neighboring boundary
triangles share their inner triangle, the five vertices they span collapse
to three, and an explicit recoloring finishes the job (forcing max degree
four along the way).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import CaseExhaustion, NotTwoConnected
from ..graph import EdgeColoring, Graph
from ..recognition import OuterplanarLayout, two_connected
from .verify import verify_bcoloring


def color_outerplanar(g: Graph, layout: OuterplanarLayout) -> EdgeColoring:
    layout.validate(g)
    if not two_connected(g):
        raise NotTwoConnected("color_outerplanar needs a 2-connected graph")
    if g.n == 4 and g.m == 4:
        return EdgeColoring(g.m, {e: e + 1 for e in range(4)})
    if g.n == 4 and g.m == 5:
        return EdgeColoring(g.m, {e: e + 1 for e in range(5)})
    delta = g.max_degree()
    k = delta + 1
    chords = {frozenset((layout.order[i], layout.order[j])) for _, i, j in layout.chords}
    colorer = _Colorer(g, k, delta)
    colorer.solve(tuple(layout.order), frozenset(chords))
    coloring = EdgeColoring(g.m, colorer.col)
    report = verify_bcoloring(g, coloring)
    if not report.valid or coloring.palette_size > k:
        raise CaseExhaustion("extension produced an invalid coloring (bug)")
    return coloring.normalized()


@dataclass
class _Face:
    """A boundary face: chord endpoints at cyclic positions (start, end) with
    only outer-cycle vertices strictly between them."""

    start: int
    interior: tuple[int, ...]
    end: int


class _Colorer:
    def __init__(self, g: Graph, k: int, delta: int):
        self.g = g
        self.k = k
        self.delta = delta
        self.col: dict[int, int] = {}

    # -- helpers over a (order, chords) state --------------------------------

    def eid(self, u: int, v: int) -> int:
        e = self.g.edge_id(u, v)
        assert e is not None
        return e

    def set(self, u: int, v: int, c: int) -> None:
        assert 1 <= c <= self.k
        self.col[self.eid(u, v)] = c

    def get(self, u: int, v: int) -> int:
        return self.col[self.eid(u, v)]

    @staticmethod
    def adjacency(order, chords) -> dict[int, set[int]]:
        n = len(order)
        adj: dict[int, set[int]] = {v: set() for v in order}
        for i in range(n):
            u, v = order[i], order[(i + 1) % n]
            adj[u].add(v)
            adj[v].add(u)
        for pair in chords:
            u, v = tuple(pair)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def colors_at(self, adj: dict[int, set[int]], v: int) -> set[int]:
        out = set()
        for w in adj[v]:
            c = self.col.get(self.g.edge_id(v, w))
            if c is not None:
                out.add(c)
        return out

    # -- main recursion -------------------------------------------------------

    def solve(self, order: tuple[int, ...], chords: frozenset) -> None:
        n = len(order)
        if not chords:
            self._color_plain_cycle(order)
            return
        if n == 4 and len(chords) == 1:
            assert self.k >= 5, "chorded 4-state needs a wider palette (bug)"
            pairs = [(order[i], order[(i + 1) % 4]) for i in range(4)]
            pairs.append(tuple(next(iter(chords))))
            for c, (u, v) in enumerate(pairs, start=1):
                self.set(u, v, c)
            return
        faces = self._boundary_faces(order, chords)
        assert faces, "a chorded state with no boundary face (bug)"
        adj = self.adjacency(order, chords)
        feasible = [f for f in faces if self._feasible(f, order, adj)]
        if feasible:
            face = feasible[0]
            self._peel_face(face, order, chords)
            return
        if self.delta != 4:
            raise CaseExhaustion(
                "blocked boundary faces outside the max-degree-4 regime"
            )
        self._twin_triangle_step(order, chords, adj)

    def _color_plain_cycle(self, order: tuple[int, ...]) -> None:
        n = len(order)
        if n == 4:
            assert self.k >= 4
            for i in range(4):
                self.set(order[i], order[(i + 1) % 4], i + 1)
            return
        for i in range(n):
            u, v = order[i], order[(i + 1) % n]
            if i == n - 1 and n % 2 == 1:
                self.set(u, v, 3)
            else:
                self.set(u, v, 1 + i % 2)

    def _boundary_faces(self, order, chords) -> list[_Face]:
        n = len(order)
        pos = {v: i for i, v in enumerate(order)}
        chord_positions = sorted(
            tuple(sorted((pos[u], pos[v]))) for u, v in map(tuple, chords)
        )
        endpoints = sorted(p for ij in chord_positions for p in ij)
        faces = []
        for i, j in chord_positions:
            if not any(i < p < j for p in endpoints):
                faces.append(_Face(start=i, interior=tuple(range(i + 1, j)), end=j))
            if not any(p < i or p > j for p in endpoints):
                outer = tuple(range(j + 1, n)) + tuple(range(0, i))
                faces.append(_Face(start=j, interior=outer, end=i))
        faces.sort(key=lambda f: (len(f.interior), f.start, f.end))
        return faces

    def _feasible(self, face: _Face, order, adj) -> bool:
        if len(face.interior) >= 2:
            return True
        u, w = order[face.start], order[face.end]
        if len(adj[u]) < self.delta or len(adj[w]) < self.delta:
            return True
        return self._inner_triangle(face, order, adj) is None

    def _inner_triangle(self, face: _Face, order, adj) -> Optional[int]:
        """Third vertex of the triangle leaning on the face's chord from the
        other side; unique when it exists."""
        u, w = order[face.start], order[face.end]
        p = order[face.interior[0]]
        common = (adj[u] & adj[w]) - {p}
        assert len(common) <= 1
        return next(iter(common)) if common else None

    def _peel_face(self, face: _Face, order, chords) -> None:
        n = len(order)
        u, w = order[face.start], order[face.end]
        interior = [order[i] for i in face.interior]
        new_order = tuple(v for v in order if v not in set(interior))
        new_chords = frozenset(c for c in chords if c != frozenset((u, w)))
        self.solve(new_order, new_chords)
        adj = self.adjacency(new_order, new_chords)
        path = [u] + interior + [w]
        edges = [(path[i], path[i + 1]) for i in range(len(path) - 1)]
        if len(edges) == 2:
            self._extend_triangle(u, w, interior[0], adj)
            return
        a = self._smallest(self.colors_at(adj, u))
        b = self._smallest(self.colors_at(adj, w), also_not={a})
        if len(edges) == 3:
            c = self._smallest({a, b, self.get(u, w)})
            plan = [a, c, b]
        else:
            plan = [a if i % 2 == 0 else b for i in range(len(edges))]
            plan[-1] = b
            if len(edges) % 2 == 1:
                plan[-2] = self._smallest({a, b})
        for (x, y), c in zip(edges, plan):
            self.set(x, y, c)

    def _extend_triangle(self, u: int, w: int, mid: int, adj) -> None:
        # the face is (u, mid, w); the chord (u, w) is an edge of the
        # already-colored reduced graph
        tri = adj[u] & adj[w]
        assert len(tri) <= 1
        tl = next(iter(tri)) if tri else None
        avoid_u = self.colors_at(adj, u)
        avoid_w = self.colors_at(adj, w)
        if tl is not None:
            avoid_u = avoid_u | {self.get(w, tl)}
            avoid_w = avoid_w | {self.get(u, tl)}
        free_u = [c for c in range(1, self.k + 1) if c not in avoid_u]
        free_w = [c for c in range(1, self.k + 1) if c not in avoid_w]
        if not free_u or not free_w:
            raise CaseExhaustion("no free color on a boundary triangle (bug)")
        if len(free_u) <= len(free_w):
            cu = free_u[0]
            cw = next((c for c in free_w if c != cu), None)
        else:
            cw = free_w[0]
            cu = next((c for c in free_u if c != cw), None)
        if cu is None or cw is None:
            raise CaseExhaustion("boundary triangle extension infeasible (bug)")
        self.set(u, mid, cu)
        self.set(mid, w, cw)

    def _smallest(self, avoid: set[int], also_not: set[int] = frozenset()) -> int:
        for c in range(1, self.k + 1):
            if c not in avoid and c not in also_not:
                return c
        raise CaseExhaustion("palette exhausted during extension (bug)")

    # -- the blocked regime ---------------------------------------------------

    def _twin_triangle_step(self, order, chords, adj) -> None:
        n = len(order)
        pos = {v: i for i, v in enumerate(order)}
        triangles = {}
        for face in self._boundary_faces(order, chords):
            if len(face.interior) == 1:
                triangles[face.start % n] = face
        start = None
        for p in sorted(triangles):
            f1 = triangles.get(p)
            f2 = triangles.get((p + 2) % n)
            if f1 is None or f2 is None:
                continue
            v = [order[(p + t) % n] for t in range(5)]
            if not self.g.has_edge(v[0], v[4]):
                continue
            if self._inner_triangle(f1, order, adj) != v[4]:
                continue
            if self._inner_triangle(f2, order, adj) != v[0]:
                continue
            start = p
            break
        if start is None:
            raise CaseExhaustion("blocked state without twin boundary triangles")
        rot = tuple(order[(start + t) % n] for t in range(n))
        v1, v2, v3, v4, v5 = rot[:5]
        vn = rot[-1]
        if n == 5:
            # the whole graph is the two triangles plus their shared inner one
            plan = {
                (v1, v3): 1,
                (v3, v5): 2,
                (v5, v1): 3,
                (v1, v2): 4,
                (v3, v4): 4,
                (v2, v3): 5,
                (v4, v5): 5,
            }
            for (x, y), c in plan.items():
                self.set(x, y, c)
            return
        drop = {v2, v3, v4}
        new_order = tuple(x for x in rot if x not in drop)
        new_chords = frozenset(
            c
            for c in chords
            if c not in (frozenset((v1, v3)), frozenset((v3, v5)), frozenset((v1, v5)))
        )
        self.solve(new_order, new_chords)
        new_adj = self.adjacency(new_order, new_chords)
        v6 = new_order[2]  # successor of v5 on the reduced cycle
        a = self.get(v1, v5)
        b = self.get(v1, vn)
        if self.get(v5, v6) == b:
            self._repair_before_extension(new_adj, v1, v5, v6, vn)
            a = self.get(v1, v5)
            b = self.get(v1, vn)
        c = self.get(v5, v6)
        assert c != a and c != b
        rest = [t for t in range(1, self.k + 1) if t not in (a, b, c)]
        assert len(rest) == 2
        d, e = rest
        for (x, y), t in (
            ((v1, v2), c),
            ((v3, v4), c),
            ((v2, v3), b),
            ((v4, v5), b),
            ((v1, v3), d),
            ((v3, v5), e),
        ):
            self.set(x, y, t)

    def _repair_before_extension(self, adj, v1, v5, v6, vn) -> None:
        """The reduced coloring has the same color on (v1,vn) and (v5,v6);
        recolor one edge (or swap around v5) so they differ, keeping the
        reduced coloring valid."""
        a = self.get(v1, v5)
        b = self.get(v1, vn)
        others = [t for t in range(1, self.k + 1) if t not in (a, b)]
        for u, w in ((v1, vn), (v5, v6)):
            for t in others:
                if self._try_recolor(adj, [(u, w, t)]):
                    return
        for t in others:
            if self._try_recolor(adj, [(v1, v5, t), (v5, v6, a)]):
                return
        raise CaseExhaustion("twin-triangle repair failed (bug)")

    def _try_recolor(self, adj, changes: list[tuple[int, int, int]]) -> bool:
        saved = [(u, w, self.get(u, w)) for u, w, _ in changes]
        for u, w, t in changes:
            self.col[self.eid(u, w)] = t
        if self._locally_valid(adj, [(u, w) for u, w, _ in changes]):
            return True
        for u, w, t in saved:
            self.col[self.eid(u, w)] = t
        return False

    def _locally_valid(self, adj, edges: list[tuple[int, int]]) -> bool:
        verts = {x for e in edges for x in e}
        for v in verts:
            seen = set()
            for w in adj[v]:
                c = self.col.get(self.g.edge_id(v, w))
                if c is None:
                    continue
                if c in seen:
                    return False
                seen.add(c)
        for x, y in edges:
            for z in adj[x] - {y}:
                for t in adj[y] - {x}:
                    if z == t or t not in adj[z]:
                        continue
                    cs = {
                        self.get(x, y),
                        self.get(y, t),
                        self.get(t, z),
                        self.get(z, x),
                    }
                    if len(cs) != 4:
                        return False
        return True
