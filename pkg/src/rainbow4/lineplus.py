"""The extended line graph and exact clique/chromatic oracles over it.

The extended line graph of G has one vertex per edge of G; two vertices are
joined if the source edges share an endpoint (an L-edge) or are independent
but lie on a common 4-cycle of G (an F-edge).  A minimum proper vertex
coloring of it is exactly a minimum edge coloring of G that is proper and
rainbow on every 4-cycle, which is why the chromatic oracle below doubles as
the exact palette-size oracle.

Both oracles are exhaustive searches and refuse to run above a size cap
(default 64 vertices) so their exponential cost stays deliberate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import SizeCapExceeded
from .graph import Graph, enumerate_c4

DEFAULT_CAP = 64


def resolve_cap(cap: int | None) -> int:
    return DEFAULT_CAP if cap is None else cap


@dataclass(frozen=True)
class LinePlusGraph:
    """L-edges and F-edges kept separate, with a back-map to source edges.

    Vertex i of the derived graphs corresponds to source edge id
    back_map[i] (the identity in practice, kept explicit for clarity).
    """

    n_vertices: int
    l_edges: tuple[tuple[int, int], ...]
    f_edges: tuple[tuple[int, int], ...]
    back_map: tuple[int, ...]

    def union_graph(self) -> Graph:
        return Graph(self.n_vertices, list(self.l_edges) + list(self.f_edges))

    def f_graph(self) -> Graph:
        return Graph(self.n_vertices, list(self.f_edges))

    def l_graph(self) -> Graph:
        return Graph(self.n_vertices, list(self.l_edges))


def build_line_plus(g: Graph) -> LinePlusGraph:
    """Construct the extended line graph of g.

    F-edges come exclusively from the canonical 4-cycle enumeration, so
    every rainbow constraint has a single source of truth.
    """
    l_edges = set()
    for v in range(g.n):
        inc = g.adj[v]
        for a, b in combinations(sorted(inc), 2):
            l_edges.add((a, b))
    f_edges = set()
    for cyc in enumerate_c4(g):
        for e, f in cyc.opposite_pairs:
            f_edges.add((min(e, f), max(e, f)))
    assert not (l_edges & f_edges)
    return LinePlusGraph(
        n_vertices=g.m,
        l_edges=tuple(sorted(l_edges)),
        f_edges=tuple(sorted(f_edges)),
        back_map=tuple(range(g.m)),
    )


def clique_number(h: Graph, cap: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact clique number with a witness clique.

    Branch and bound over a degeneracy order with greedy-coloring upper
    bounds; the witness is re-checked before returning.
    """
    if h.n > resolve_cap(cap):
        raise SizeCapExceeded(f"{h.n} vertices exceeds cap {resolve_cap(cap)}")
    if h.n == 0:
        return 0, ()
    nbr = [set(h.neighbor_sets[v]) for v in range(h.n)]
    order = _degeneracy_order(nbr)
    best: list[int] = []

    def greedy_color_bound(cands: list[int]) -> int:
        classes: list[set[int]] = []
        for v in cands:
            for cls in classes:
                if not cls & nbr[v]:
                    cls.add(v)
                    break
            else:
                classes.append({v})
        return len(classes)

    def expand(cands: list[int], clique: list[int]) -> None:
        nonlocal best
        if not cands:
            if len(clique) > len(best):
                best = clique.copy()
            return
        if len(clique) + greedy_color_bound(cands) <= len(best):
            return
        for i, v in enumerate(cands):
            if len(clique) + len(cands) - i <= len(best):
                return
            clique.append(v)
            expand([u for u in cands[i + 1 :] if u in nbr[v]], clique)
            clique.pop()

    # later vertices in a degeneracy order have few later neighbors
    expand(order, [])
    assert all(b in nbr[a] for a, b in combinations(best, 2))
    return len(best), tuple(sorted(best))


def _degeneracy_order(nbr: list[set[int]]) -> list[int]:
    n = len(nbr)
    deg = [len(s) for s in nbr]
    removed = [False] * n
    order = []
    for _ in range(n):
        v = min((x for x in range(n) if not removed[x]), key=lambda x: (deg[x], x))
        removed[v] = True
        order.append(v)
        for u in nbr[v]:
            if not removed[u]:
                deg[u] -= 1
    return order


def chromatic_number(
    h: Graph, upper_bound_hint: int | None = None, cap: int | None = None
) -> tuple[int, list[int]]:
    """Exact chromatic number with a witness coloring (colors 1..k).

    Iterates k upward from the clique number; the backtracking search
    pre-colors a maximum clique and only ever introduces new colors in
    order, which kills color-permutation symmetry.
    """
    if h.n > resolve_cap(cap):
        raise SizeCapExceeded(f"{h.n} vertices exceeds cap {resolve_cap(cap)}")
    if h.n == 0:
        return 0, []
    omega, clique = clique_number(h, cap=cap)
    nbr = [set(h.neighbor_sets[v]) for v in range(h.n)]

    greedy = _greedy_coloring(nbr)
    upper = max(greedy.values())
    if upper_bound_hint is not None:
        upper = min(upper, upper_bound_hint)
    if upper == omega:
        colors = [greedy[v] for v in range(h.n)]
        _check_coloring(nbr, colors)
        return omega, colors

    k = omega
    while True:
        found = _try_k_coloring(nbr, clique, k)
        if found is not None:
            _check_coloring(nbr, found)
            return k, found
        k += 1
        if k > h.n:
            raise AssertionError("chromatic search exceeded vertex count")


def _greedy_coloring(nbr: list[set[int]]) -> dict[int, int]:
    n = len(nbr)
    order = sorted(range(n), key=lambda v: -len(nbr[v]))
    colors: dict[int, int] = {}
    for v in order:
        taken = {colors[u] for u in nbr[v] if u in colors}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def _try_k_coloring(nbr: list[set[int]], clique: tuple[int, ...], k: int) -> list[int] | None:
    """Backtracking k-coloring with a pre-colored clique and DSATUR-style
    vertex selection.  Returns colors (1-based) or None."""
    n = len(nbr)
    if len(clique) > k:
        return None
    colors = [0] * n
    for i, v in enumerate(clique):
        colors[v] = i + 1
    uncolored = [v for v in range(n) if colors[v] == 0]

    def select() -> int:
        best_v, best_key = -1, (-1, -1)
        for v in uncolored:
            if colors[v]:
                continue
            sat = len({colors[u] for u in nbr[v] if colors[u]})
            key = (sat, len(nbr[v]))
            if key > best_key:
                best_v, best_key = v, key
        return best_v

    def backtrack(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        v = select()
        taken = {colors[u] for u in nbr[v] if colors[u]}
        limit = min(k, used + 1)
        for c in range(1, limit + 1):
            if c in taken:
                continue
            colors[v] = c
            if backtrack(remaining - 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    if backtrack(len(uncolored), len(clique)):
        return colors
    return None


def _check_coloring(nbr: list[set[int]], colors: list[int]) -> None:
    for v, ns in enumerate(nbr):
        assert colors[v] >= 1
        for u in ns:
            assert colors[u] != colors[v]


def omega_f(g: Graph, cap: int | None = None) -> int:
    """Clique number of the F-edge subgraph (on all edge-vertices)."""
    if g.m > resolve_cap(cap):
        raise SizeCapExceeded(f"{g.m} edges exceeds cap {resolve_cap(cap)}")
    lp = build_line_plus(g)
    size, _ = clique_number(lp.f_graph(), cap=cap)
    return size
