"""Coloring subcubic planar graphs with at most six colors.

Induction: a graph with no 4-cycle takes a proper coloring with at most four
colors (properness is all that is required then).  Otherwise remove the four
vertices of some 4-cycle, color the rest recursively, and extend.  The
extension branches on how many edges the four removed vertices induce (six:
a complete component; five: a cycle with one diagonal; four: an induced
cycle) and, in the induced case, on the coincidence pattern of the fringe
vertices that the cycle's outgoing edges reach.
"""

from __future__ import annotations

from itertools import permutations
from typing import Optional

from ..errors import CaseExhaustion, NotPlanar, NotSubcubic
from ..graph import EdgeColoring, Graph, c4_through_edge, enumerate_c4
from ..recognition import is_planar
from .edgecolor import proper_edge_color

PALETTE = (1, 2, 3, 4, 5, 6)


def color_subcubic(g: Graph) -> EdgeColoring:
    if g.max_degree() > 3:
        raise NotSubcubic(f"max degree {g.max_degree()} exceeds 3")
    if not is_planar(g)[0]:
        raise NotPlanar("color_subcubic needs a planar graph")
    return _rec(g).normalized()


def _rec(g: Graph) -> EdgeColoring:
    cycles = enumerate_c4(g)
    if not cycles:
        return proper_edge_color(g)
    quad = cycles[0].vertices
    vset = set(quad)
    inner = [e for e, (u, v) in enumerate(g.edges) if u in vset and v in vset]
    h, hmap = g.delete_vertices(quad)
    hcol = _rec(h)
    col = EdgeColoring(g.m)
    for he in range(h.m):
        col.set(hmap.edge_to_parent[he], hcol[he])
    if len(inner) == 6:
        _extend_complete(g, col, inner)
    elif len(inner) == 5:
        _extend_with_diagonal(g, col, quad)
    else:
        _extend_induced(g, col, quad)
    kept = set(hmap.edge_to_parent)
    _check_extension(g, col, [e for e in range(g.m) if e not in kept])
    return col


def _colors_at(g: Graph, col: EdgeColoring, v: int) -> set[int]:
    return {col.get(e) for e in g.adj[v] if col.get(e) is not None}


def _smallest(excluded: set[int], also_not: tuple[int, ...] = ()) -> int:
    for c in PALETTE:
        if c not in excluded and c not in also_not:
            return c
    raise CaseExhaustion("six colors exhausted while extending (bug)")


def _third_edge(g: Graph, v: int, inner: set[int]) -> Optional[int]:
    extra = [e for e in g.adj[v] if e not in inner]
    assert len(extra) <= 1
    return extra[0] if extra else None


def _extend_complete(g: Graph, col: EdgeColoring, inner: list[int]) -> None:
    """Six induced edges: a complete component on four vertices."""
    for c, e in zip(PALETTE, sorted(inner)):
        col.set(e, c)


def _extend_with_diagonal(g: Graph, col: EdgeColoring, quad) -> None:
    """Five induced edges: the cycle plus one diagonal."""
    a0, b0, c0, d0 = quad
    if g.has_edge(a0, c0):
        v1, v2, v3, v4 = a0, b0, c0, d0
    else:
        assert g.has_edge(b0, d0)
        v1, v2, v3, v4 = b0, c0, d0, a0
    inner = {
        g.edge_id(v1, v2),
        g.edge_id(v2, v3),
        g.edge_id(v3, v4),
        g.edge_id(v4, v1),
        g.edge_id(v1, v3),
    }
    e1 = _third_edge(g, v2, inner)
    e2 = _third_edge(g, v4, inner)
    cycle_edges = [
        g.edge_id(v1, v2),
        g.edge_id(v2, v3),
        g.edge_id(v3, v4),
        g.edge_id(v4, v1),
    ]
    diag = g.edge_id(v1, v3)
    if e1 is not None and e2 is not None:
        x = g.other(e1, v2)
        y = g.other(e2, v4)
        if x != y:
            a = _smallest(_colors_at(g, col, x) | _colors_at(g, col, y))
            col.set(e1, a)
            col.set(e2, a)
            rest = [c for c in PALETTE if c != a]
            for c, e in zip(rest, cycle_edges + [diag]):
                col.set(e, c)
        else:
            seen = _colors_at(g, col, x)
            b = _smallest(seen)
            a = _smallest(seen, also_not=(b,))
            col.set(e1, b)
            col.set(e2, a)
            col.set(diag, a)
            rest = [c for c in PALETTE if c not in (a, b)]
            for c, e in zip(rest, cycle_edges):
                col.set(e, c)
    elif e1 is not None or e2 is not None:
        e = e1 if e1 is not None else e2
        anchor = v2 if e1 is not None else v4
        a = _smallest(_colors_at(g, col, g.other(e, anchor)))
        col.set(e, a)
        rest = [c for c in PALETTE if c != a]
        for c, f in zip(rest, cycle_edges + [diag]):
            col.set(f, c)
    else:
        for c, f in zip(PALETTE, cycle_edges + [diag]):
            col.set(f, c)


class _Fringe:
    """An induced 4-cycle (v[0..3]) with its outgoing edges and endpoints."""

    def __init__(self, g: Graph, vs: tuple[int, int, int, int]):
        self.g = g
        self.v = list(vs)
        inner = {g.edge_id(self.v[i], self.v[(i + 1) % 4]) for i in range(4)}
        self.out_edge: list[Optional[int]] = []
        self.x: list[Optional[int]] = []
        for i in range(4):
            e = _third_edge(g, self.v[i], inner)
            self.out_edge.append(e)
            self.x.append(g.other(e, self.v[i]) if e is not None else None)

    def apply(self, sigma: tuple[int, int, int, int]) -> "_Fringe":
        other = _Fringe.__new__(_Fringe)
        other.g = self.g
        other.v = [self.v[s] for s in sigma]
        other.out_edge = [self.out_edge[s] for s in sigma]
        other.x = [self.x[s] for s in sigma]
        return other

    def cycle_edge(self, i: int) -> int:
        e = self.g.edge_id(self.v[i], self.v[(i + 1) % 4])
        assert e is not None
        return e


_DIHEDRAL = [tuple((k + i) % 4 for i in range(4)) for k in range(4)] + [
    tuple((k - i) % 4 for i in range(4)) for k in range(4)
]


def _extend_induced(g: Graph, col: EdgeColoring, quad) -> None:
    """Four induced edges: an induced 4-cycle with up to four outgoing edges."""
    fr = _Fringe(g, quad)
    present = [i for i in range(4) if fr.out_edge[i] is not None]
    if len(present) < 4:
        if _search_extension(g, col, fr):
            return
        raise CaseExhaustion("no extension found for a partial fringe")
    xs = fr.x
    pattern = _coincidence_pattern(xs)
    if pattern == "all-distinct":
        _fringe_all_distinct(g, col, fr)
    elif pattern == "two-cross":
        _fringe_two_cross(g, col, fr)
    elif pattern == "two-adjacent":
        fr2 = _normalize(fr, lambda f: f.x[0] == f.x[1] and f.x[2] == f.x[3])
        _fringe_two_adjacent(g, col, fr2)
    elif pattern == "one-cross":
        fr2 = _normalize(
            fr,
            lambda f: f.x[0] == f.x[2]
            and f.x[1] != f.x[3]
            and not g.has_edge(f.x[0], f.x[3]),
        )
        _fringe_one_cross(g, col, fr2)
    elif pattern == "one-adjacent":
        fr2 = _normalize(
            fr,
            lambda f: f.x[2] == f.x[3]
            and f.x[0] != f.x[1]
            and f.x[0] != f.x[2]
            and f.x[1] != f.x[2]
            and not g.has_edge(f.x[0], f.x[2]),
        )
        _fringe_one_adjacent(g, col, fr2)
    elif pattern == "three-shared":
        fr2 = _normalize(
            fr, lambda f: f.x[0] == f.x[2] == f.x[3] and f.x[1] != f.x[0]
        )
        _fringe_three_shared(g, col, fr2)
    else:
        raise CaseExhaustion(f"unrecognized fringe pattern {xs}")


def _coincidence_pattern(xs) -> str:
    same = [(i, j) for i in range(4) for j in range(i + 1, 4) if xs[i] == xs[j]]
    if not same:
        return "all-distinct"
    if len(same) == 1:
        i, j = same[0]
        return "one-cross" if j - i == 2 else "one-adjacent"
    if len(same) == 2:
        return "two-cross" if same == [(0, 2), (1, 3)] else "two-adjacent"
    if len(same) == 3:
        return "three-shared"
    raise CaseExhaustion("all four outgoing edges reach one vertex (degree > 3)")


def _normalize(fr: _Fringe, pred) -> _Fringe:
    for sigma in _DIHEDRAL:
        cand = fr.apply(sigma)
        if pred(cand):
            return cand
    raise CaseExhaustion("no dihedral relabeling matches the fringe pattern")


def _h_edge_color(g: Graph, col: EdgeColoring, a: int, b: int) -> Optional[int]:
    e = g.edge_id(a, b)
    return col.get(e) if e is not None else None


def _assign_cycle(
    g: Graph,
    col: EdgeColoring,
    fr: _Fringe,
    colors: list[int],
    forbidden: list[set[int]],
) -> None:
    """Give the four cycle edges distinct colors from `colors`, avoiding the
    per-edge forbidden sets; tiny exhaustive search over orderings."""
    for perm in permutations(sorted(colors), 4):
        if all(perm[i] not in forbidden[i] for i in range(4)):
            for i in range(4):
                col.set(fr.cycle_edge(i), perm[i])
            return
    raise CaseExhaustion("no admissible assignment for the cycle edges")


def _fringe_all_distinct(g: Graph, col: EdgeColoring, fr: _Fringe) -> None:
    a = _smallest(_colors_at(g, col, fr.x[0]) | _colors_at(g, col, fr.x[2]))
    b = _smallest(
        _colors_at(g, col, fr.x[1]) | _colors_at(g, col, fr.x[3]), also_not=(a,)
    )
    for i, c in ((0, a), (2, a), (1, b), (3, b)):
        col.set(fr.out_edge[i], c)
    remaining = [c for c in PALETTE if c not in (a, b)]
    forbidden = []
    for i in range(4):
        h = _h_edge_color(g, col, fr.x[i], fr.x[(i + 1) % 4])
        forbidden.append({h} if h is not None else set())
    _assign_cycle(g, col, fr, remaining, forbidden)


def _fringe_two_cross(g: Graph, col: EdgeColoring, fr: _Fringe) -> None:
    seen = _colors_at(g, col, fr.x[0]) | _colors_at(g, col, fr.x[1])
    a = _smallest(seen)
    b = _smallest(seen, also_not=(a,))
    for i, c in ((0, a), (1, a), (2, b), (3, b)):
        col.set(fr.out_edge[i], c)
    remaining = [c for c in PALETTE if c not in (a, b)]
    _assign_cycle(g, col, fr, remaining, [set(), set(), set(), set()])


def _fringe_two_adjacent(g: Graph, col: EdgeColoring, fr: _Fringe) -> None:
    x, y = fr.x[0], fr.x[2]
    if g.has_edge(x, y):
        # the cycle plus the two shared fringe vertices form a 3-regular
        # component shaped like a triangular prism; color it outright
        exy = g.edge_id(x, y)
        plan = {
            fr.cycle_edge(0): 1,  # (v1,v2) inside triangle with x
            fr.out_edge[1]: 2,  # (v2,x)
            fr.out_edge[0]: 3,  # (x,v1)
            fr.cycle_edge(2): 2,  # (v3,v4)
            fr.out_edge[2]: 1,  # (v3,y)
            fr.out_edge[3]: 5,  # (y,v4)
            fr.cycle_edge(3): 4,  # rung (v4,v1)
            fr.cycle_edge(1): 5,  # rung (v2,v3)
            exy: 6,  # rung (x,y)
        }
        for e, c in plan.items():
            col.set(e, c)
        return
    seen = _colors_at(g, col, x) | _colors_at(g, col, y)
    a = _smallest(seen)
    b = _smallest(seen, also_not=(a,))
    for i, c in ((0, a), (2, a), (1, b), (3, b)):
        col.set(fr.out_edge[i], c)
    remaining = [c for c in PALETTE if c not in (a, b)]
    _assign_cycle(g, col, fr, remaining, [set(), set(), set(), set()])


def _fringe_one_cross(g: Graph, col: EdgeColoring, fr: _Fringe) -> None:
    # x[0] == x[2]; normalization guarantees (x[0], x[3]) is not an edge.
    # The shared vertex may carry one stray colored edge, so both colors
    # placed on it must dodge _colors_at(x[0]).
    h = _h_edge_color(g, col, fr.x[0], fr.x[1])
    shared = _colors_at(g, col, fr.x[0])
    a = _smallest(shared | _colors_at(g, col, fr.x[3]))
    b = _smallest(shared, also_not=(a,))
    c = _smallest(_colors_at(g, col, fr.x[1]), also_not=(a, b))
    col.set(fr.out_edge[0], a)
    col.set(fr.out_edge[2], b)
    col.set(fr.out_edge[3], a)
    col.set(fr.out_edge[1], c)
    col.set(fr.cycle_edge(3), c)  # (v4, v1)
    rest = [t for t in PALETTE if t not in (a, b, c)]
    block = {h} if h is not None else set()
    for perm in permutations(rest, 3):
        if perm[0] not in block and perm[1] not in block:
            for i in range(3):
                col.set(fr.cycle_edge(i), perm[i])
            return
    raise CaseExhaustion("no admissible assignment for the cycle edges")


def _fringe_one_adjacent(g: Graph, col: EdgeColoring, fr: _Fringe) -> None:
    # x[2] == x[3]; normalization guarantees (x[0], x[2]) is not an edge.
    # Both colors land on the shared vertex, so both dodge its stray edge.
    shared = _colors_at(g, col, fr.x[2])
    a = _smallest(shared | _colors_at(g, col, fr.x[0]))
    b = _smallest(shared | _colors_at(g, col, fr.x[1]), also_not=(a,))
    for i, t in ((0, a), (2, a), (1, b), (3, b)):
        col.set(fr.out_edge[i], t)
    remaining = [t for t in PALETTE if t not in (a, b)]
    h01 = _h_edge_color(g, col, fr.x[0], fr.x[1])
    h12 = _h_edge_color(g, col, fr.x[1], fr.x[2])
    forbidden = [
        {h01} if h01 is not None else set(),
        {h12} if h12 is not None else set(),
        set(),
        set(),
    ]
    _assign_cycle(g, col, fr, remaining, forbidden)


def _fringe_three_shared(g: Graph, col: EdgeColoring, fr: _Fringe) -> None:
    # x[0] == x[2] == x[3], x[1] different; (x[0], x[1]) cannot be an edge
    a = _smallest(_colors_at(g, col, fr.x[1]))
    b = _smallest(set(), also_not=(a,))
    c = _smallest(set(), also_not=(a, b))
    col.set(fr.out_edge[0], a)
    col.set(fr.out_edge[1], a)
    col.set(fr.out_edge[2], b)
    col.set(fr.out_edge[3], c)
    remaining = [t for t in PALETTE if t not in (a, b)]
    forbidden = [set(), set(), {c}, {c}]  # edges at v4 may not repeat c
    _assign_cycle(g, col, fr, remaining, forbidden)


def _search_extension(g: Graph, col: EdgeColoring, fr: _Fringe) -> bool:
    """Exhaustive extension for fringes with missing outgoing edges, where
    the full patterns degenerate.  Colors outgoing edges then the cycle,
    lexicographically smallest first."""
    present = [i for i in range(4) if fr.out_edge[i] is not None]
    base = {i: _colors_at(g, col, fr.x[i]) for i in present}

    def pair_conflict(i: int, j: int) -> bool:
        if fr.x[i] == fr.x[j]:
            return True
        if (j - i) % 2 == 1 and g.has_edge(fr.x[i], fr.x[j]):
            return True
        return False

    def cycle_forbidden(assign: dict[int, int]) -> list[set[int]]:
        forb: list[set[int]] = [set() for _ in range(4)]
        for i in range(4):
            for j in (i, (i + 1) % 4):  # endpoints v[i], v[i+1] of cycle edge i
                if j in assign:
                    forb[i].add(assign[j])
        for i in present:
            h = (
                _h_edge_color(g, col, fr.x[i], fr.x[(i + 1) % 4])
                if (i + 1) % 4 in present
                else None
            )
            if h is not None:
                forb[i].add(h)
        for i in present:
            j = (i + 2) % 4
            if j in present and fr.x[i] == fr.x[j]:
                # 4-cycles through both outgoing edges and two cycle edges
                forb[i].add(assign[j])
                forb[(i + 1) % 4].add(assign[i])
                forb[j].add(assign[i])
                forb[(j + 1) % 4].add(assign[j])
        return forb

    def try_assign(idx: int, assign: dict[int, int]) -> bool:
        if idx == len(present):
            forb = cycle_forbidden(assign)
            for perm in permutations(PALETTE, 4):
                if all(perm[i] not in forb[i] for i in range(4)):
                    for i in present:
                        col.set(fr.out_edge[i], assign[i])
                    for i in range(4):
                        col.set(fr.cycle_edge(i), perm[i])
                    return True
            return False
        i = present[idx]
        for t in PALETTE:
            if t in base[i]:
                continue
            if any(j in assign and assign[j] == t and pair_conflict(i, j) for j in present):
                continue
            assign[i] = t
            if try_assign(idx + 1, assign):
                return True
            del assign[i]
        return False

    return try_assign(0, {})


def _check_extension(g: Graph, col: EdgeColoring, new_edges: list[int]) -> None:
    touched = {v for e in new_edges for v in g.endpoints(e)}
    for v in touched:
        seen: set[int] = set()
        for e in g.adj[v]:
            c = col.get(e)
            assert c is not None
            if c in seen:
                raise CaseExhaustion(f"extension broke properness at vertex {v}")
            seen.add(c)
    for e in new_edges:
        for cyc in c4_through_edge(g, e):
            cs = [col.get(f) for f in cyc.edge_ids]
            if len(set(cs)) != 4:
                raise CaseExhaustion(f"extension broke a rainbow 4-cycle {cyc.vertices}")
