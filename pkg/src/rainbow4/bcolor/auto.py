"""Dispatch: classify, color block by block, reconcile palettes at cut
vertices, fall back to the exact oracle when a constructive colorer gives up.

Every 4-cycle lives inside a single 2-connected block, so stitching block
colorings together only has to keep colors distinct around each cut vertex;
a palette injection per block (chosen greedily, smallest colors first) does
that.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from ..errors import BoundViolated, CaseExhaustion, SizeCapExceeded, Unsupported
from ..graph import EdgeColoring, Graph, blocks
from ..lineplus import resolve_cap
from ..recognition import classify, outer_cycle
from .bipartite import color_bipartite_planar
from .exact import qb_exact
from .outerplanar import color_outerplanar
from .planar import color_planar
from .subcubic import color_subcubic
from .verify import verify_bcoloring


@dataclass
class BoundReport:
    instance: str
    class_label: str
    n: int
    m: int
    delta: int
    algorithm: str
    colors_used: int
    bound: Optional[int]
    verified: bool
    wall_ms: float
    seed: Optional[int] = None
    fallbacks: int = 0

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "class": self.class_label,
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "algorithm": self.algorithm,
            "colorsUsed": self.colors_used,
            "bound": self.bound,
            "verified": self.verified,
            "wallMs": round(self.wall_ms, 3),
            "seed": self.seed,
            "fallbacks": self.fallbacks,
        }


def theoretical_bound(label: str, delta: int, n: int, m: int) -> Optional[int]:
    """Palette bound promised for a class, with the two small exceptions."""
    if label == "outerplanar":
        if n == 4 and m == 4:
            return 4
        if n == 4 and m == 5:
            return 5
        return delta + 1
    if label == "subcubic-planar":
        return 6
    if label == "bipartite-planar":
        return 2 * delta
    if label == "planar":
        return 2 * delta + 8
    return None


def color_auto(
    g: Graph,
    cap: int | None = None,
    instance: str = "graph",
    seed: Optional[int] = None,
) -> tuple[EdgeColoring, BoundReport]:
    """Color each 2-connected block with the best colorer for its class and
    join the pieces at cut vertices."""
    t0 = time.perf_counter()
    label = classify(g).label
    coloring = EdgeColoring(g.m)
    fallbacks = 0
    colors_at_vertex: dict[int, set[int]] = {v: set() for v in range(g.n)}

    block_list = blocks(g)
    placed = [False] * len(block_list)
    vertex_to_blocks: dict[int, list[int]] = {}
    for bi, (_, bmap) in enumerate(block_list):
        for v in bmap.vertex_to_parent:
            vertex_to_blocks.setdefault(v, []).append(bi)

    for root in range(len(block_list)):
        if placed[root]:
            continue
        queue = [root]
        placed[root] = True
        while queue:
            bi = queue.pop(0)
            block, bmap = block_list[bi]
            local, used_fallback = _color_block(block, cap)
            fallbacks += used_fallback
            _place_block(g, coloring, colors_at_vertex, block, bmap, local)
            for v in bmap.vertex_to_parent:
                for bj in vertex_to_blocks[v]:
                    if not placed[bj]:
                        placed[bj] = True
                        queue.append(bj)

    report_coloring = coloring.normalized()
    verified = g.m == 0 or verify_bcoloring(g, report_coloring).valid
    delta = g.max_degree()
    report = BoundReport(
        instance=instance,
        class_label=label,
        n=g.n,
        m=g.m,
        delta=delta,
        algorithm="auto",
        colors_used=report_coloring.palette_size,
        bound=theoretical_bound(label, delta, g.n, g.m),
        verified=verified,
        wall_ms=(time.perf_counter() - t0) * 1000.0,
        seed=seed,
        fallbacks=fallbacks,
    )
    return report_coloring, report


def _color_block(block: Graph, cap: int | None) -> tuple[EdgeColoring, int]:
    if block.m == 1:
        return EdgeColoring(1, {0: 1}), 0
    label = classify(block).label
    try:
        if label == "outerplanar":
            return color_outerplanar(block, outer_cycle(block)), 0
        if label == "subcubic-planar":
            return color_subcubic(block), 0
        if label == "bipartite-planar":
            return color_bipartite_planar(block), 0
        if label == "planar":
            return color_planar(block), 0
    except (CaseExhaustion, BoundViolated) as exc:
        if block.m <= resolve_cap(cap):
            return qb_exact(block, cap=cap)[1], 1
        raise Unsupported(
            f"constructive colorer failed ({exc}) and block has {block.m} "
            f"edges, above the exact cap"
        ) from exc
    # nonplanar: exact or nothing
    try:
        return qb_exact(block, cap=cap)[1], 0
    except SizeCapExceeded as exc:
        raise Unsupported(
            f"nonplanar block with {block.m} edges exceeds the exact cap"
        ) from exc


def _place_block(g, coloring, colors_at_vertex, block, bmap, local) -> None:
    """Inject the block's palette so nothing clashes at the cut vertices."""
    anchored: dict[int, int] = {}  # block color -> final color
    taken: set[int] = set()
    # colors meeting already-colored edges, grouped by shared vertex
    for lv, pv in enumerate(bmap.vertex_to_parent):
        outside = colors_at_vertex[pv]
        if not outside:
            continue
        for e in block.adj[lv]:
            c = local[e]
            if c in anchored:
                continue
            avoid = outside | taken
            newc = 1
            while newc in avoid:
                newc += 1
            anchored[c] = newc
            taken.add(newc)
    remap: dict[int, int] = dict(anchored)
    for c in sorted({local[e] for e in range(block.m)}):
        if c not in remap:
            newc = 1
            while newc in set(remap.values()):
                newc += 1
            remap[c] = newc
    for le in range(block.m):
        pe = bmap.edge_to_parent[le]
        final = remap[local[le]]
        coloring.set(pe, final)
        u, v = g.endpoints(pe)
        colors_at_vertex[u].add(final)
        colors_at_vertex[v].add(final)
