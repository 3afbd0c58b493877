"""Exact minimum-palette oracles.

qb_exact goes through the extended line graph: the minimum number of colors
in a proper-and-rainbow-on-4-cycles edge coloring equals the chromatic
number of that graph.  qb_exact_direct never builds it; it backtracks over
edge color assignments directly and exists purely as an independent
cross-check for the first oracle.
"""

from __future__ import annotations

from ..errors import SizeCapExceeded
from ..graph import EdgeColoring, Graph, enumerate_c4
from ..lineplus import build_line_plus, chromatic_number, resolve_cap
from .verify import verify_bcoloring

DIRECT_CAP = 20


def qb_exact(g: Graph, cap: int | None = None) -> tuple[int, EdgeColoring]:
    """Exact minimum palette and an optimal coloring, via the extended line
    graph's chromatic number.  The witness is verified before returning."""
    if g.m > resolve_cap(cap):
        raise SizeCapExceeded(f"{g.m} edges exceeds cap {resolve_cap(cap)}")
    if g.m == 0:
        return 0, EdgeColoring(0)
    lp = build_line_plus(g)
    k, vertex_colors = chromatic_number(lp.union_graph(), cap=cap)
    coloring = EdgeColoring(g.m, {lp.back_map[i]: c for i, c in enumerate(vertex_colors)})
    coloring = coloring.normalized()
    report = verify_bcoloring(g, coloring)
    assert report.valid and report.colors_used == k
    return k, coloring


def qb_exact_direct(g: Graph, cap: int | None = None) -> tuple[int, EdgeColoring]:
    """Independent oracle: direct backtracking over edge assignments with
    properness and rainbow pruning.  Tight cap (default 20 edges)."""
    limit = DIRECT_CAP if cap is None else cap
    if g.m > limit:
        raise SizeCapExceeded(f"{g.m} edges exceeds direct-search cap {limit}")
    if g.m == 0:
        return 0, EdgeColoring(0)

    # conflict lists against lower-numbered edges only
    adjacent: list[set[int]] = [set() for _ in range(g.m)]
    for v in range(g.n):
        inc = g.adj[v]
        for i, e in enumerate(inc):
            for f in inc[:i]:
                adjacent[max(e, f)].add(min(e, f))
    opposite: list[set[int]] = [set() for _ in range(g.m)]
    for cyc in enumerate_c4(g):
        for e, f in cyc.opposite_pairs:
            opposite[max(e, f)].add(min(e, f))

    colors = [0] * g.m

    def feasible(k: int, e: int, used: int) -> bool:
        if e == g.m:
            return True
        taken = {colors[f] for f in adjacent[e]} | {colors[f] for f in opposite[e]}
        limit_c = min(k, used + 1)
        for c in range(1, limit_c + 1):
            if c in taken:
                continue
            colors[e] = c
            if feasible(k, e + 1, max(used, c)):
                return True
        colors[e] = 0
        return False

    k = g.max_degree()
    while not feasible(k, 0, 0):
        k += 1
        assert k <= g.m
    coloring = EdgeColoring(g.m, {e: c for e, c in enumerate(colors)})
    report = verify_bcoloring(g, coloring)
    assert report.valid
    return k, coloring.normalized()
