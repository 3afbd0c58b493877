"""Checking colorings: properness, rainbow 4-cycles, and forbidden colors."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from ..errors import PartialColoring, UnknownEdge
from ..graph import EdgeColoring, Graph, c4_through_edge, enumerate_c4


@dataclass
class Violation:
    kind: str  # "adjacent-same-color" or "repeated-color-on-C4"
    edges: tuple[int, ...]
    cycle: Optional[tuple[int, int, int, int]] = None

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "edges": list(self.edges)}
        if self.cycle is not None:
            out["cycle"] = list(self.cycle)
        return out


@dataclass
class VerifyReport:
    proper: bool
    rainbow: bool
    violations: list[Violation] = field(default_factory=list)
    colors_used: int = 0

    @property
    def valid(self) -> bool:
        return self.proper and self.rainbow

    def to_dict(self) -> dict:
        return {
            "proper": self.proper,
            "rainbow": self.rainbow,
            "violations": [v.to_dict() for v in self.violations],
            "colorsUsed": self.colors_used,
        }


def verify_bcoloring(g: Graph, coloring: EdgeColoring) -> VerifyReport:
    """Check a total coloring for properness and rainbow 4-cycles.

    Every violation is reported with a witness; the coloring is valid iff
    the violation list is empty.
    """
    if coloring.m != g.m or not coloring.is_total:
        raise PartialColoring("verify_bcoloring needs a total coloring of E(g)")
    violations: list[Violation] = []
    for v in range(g.n):
        by_color: dict[int, int] = {}
        for e in g.adj[v]:
            c = coloring[e]
            if c in by_color:
                violations.append(
                    Violation(kind="adjacent-same-color", edges=(by_color[c], e))
                )
            else:
                by_color[c] = e
    proper = all(v.kind != "adjacent-same-color" for v in violations)
    for cyc in enumerate_c4(g):
        for e, f in combinations(cyc.edge_ids, 2):
            if coloring[e] == coloring[f]:
                violations.append(
                    Violation(
                        kind="repeated-color-on-C4",
                        edges=(e, f),
                        cycle=cyc.vertices,
                    )
                )
    rainbow = all(v.kind != "repeated-color-on-C4" for v in violations)
    return VerifyReport(
        proper=proper,
        rainbow=rainbow,
        violations=violations,
        colors_used=coloring.palette_size,
    )


def forbidden_colors(g: Graph, partial: EdgeColoring, e: int) -> set[int]:
    """Colors that cannot extend `partial` to edge e.

    The union of the colors on colored edges sharing a vertex with e and the
    colors on the other three edges of every 4-cycle of g through e (only
    colored edges contribute).
    """
    if not 0 <= e < g.m:
        raise UnknownEdge(f"edge id {e} not in graph with m={g.m}")
    out: set[int] = set()
    for v in g.endpoints(e):
        for f in g.adj[v]:
            if f != e:
                c = partial.get(f)
                if c is not None:
                    out.add(c)
    for cyc in c4_through_edge(g, e):
        for f in cyc.other_edges(e):
            c = partial.get(f)
            if c is not None:
                out.add(c)
    return out
