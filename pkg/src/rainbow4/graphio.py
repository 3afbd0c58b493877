"""The shared graph and coloring text formats.

Graph format: first significant line is ``n m``, followed by m lines ``u v``.
Lines starting with ``#`` are comments; two comment forms are directives:

    # class: outerplanar|planar|bipartite-planar|subcubic
    # outer-cycle: v0 v1 ... v_{n-1}

Coloring format: ``# colors: k`` and ``# algorithm: <name>`` headers followed
by m lines ``u v color`` in edge-id order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import FormatError
from .graph import EdgeColoring, Graph

CLASS_DIRECTIVES = ("outerplanar", "planar", "bipartite-planar", "subcubic")


@dataclass
class GraphDirectives:
    class_label: Optional[str] = None
    outer_cycle: Optional[tuple[int, ...]] = None
    comments: list[str] = field(default_factory=list)


def parse_graph_text(text: str) -> tuple[Graph, GraphDirectives]:
    directives = GraphDirectives()
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            _parse_directive(line, directives, lineno)
            continue
        rows.append(line.split())
    if not rows:
        raise FormatError("empty graph file")
    header = rows[0]
    if len(header) != 2:
        raise FormatError(f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(f"non-integer header: {exc}") from exc
    if len(rows) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise FormatError(f"edge line must be 'u v', got {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError as exc:
            raise FormatError(f"non-integer edge endpoint: {exc}") from exc
    try:
        g = Graph(n, edges)
    except Exception as exc:
        raise FormatError(f"invalid graph: {exc}") from exc
    if directives.outer_cycle is not None and len(directives.outer_cycle) != n:
        raise FormatError("outer-cycle directive must list every vertex once")
    return g, directives


def _parse_directive(line: str, directives: GraphDirectives, lineno: int) -> None:
    body = line[1:].strip()
    if body.startswith("class:"):
        label = body[len("class:") :].strip()
        if label not in CLASS_DIRECTIVES:
            raise FormatError(f"line {lineno}: unknown class {label!r}")
        directives.class_label = label
    elif body.startswith("outer-cycle:"):
        try:
            directives.outer_cycle = tuple(
                int(tok) for tok in body[len("outer-cycle:") :].split()
            )
        except ValueError as exc:
            raise FormatError(f"line {lineno}: bad outer-cycle: {exc}") from exc
    else:
        directives.comments.append(body)


def write_graph_text(g: Graph, directives: Optional[GraphDirectives] = None) -> str:
    lines = []
    if directives is not None:
        if directives.class_label is not None:
            lines.append(f"# class: {directives.class_label}")
        if directives.outer_cycle is not None:
            lines.append("# outer-cycle: " + " ".join(map(str, directives.outer_cycle)))
        lines.extend(f"# {c}" for c in directives.comments)
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_coloring_text(text: str, g: Graph) -> tuple[EdgeColoring, Optional[str]]:
    """Parse a coloring file against its graph; returns (coloring, algorithm)."""
    algorithm = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("algorithm:"):
                algorithm = body[len("algorithm:") :].strip()
            continue
        rows.append((lineno, line.split()))
    if len(rows) != g.m:
        raise FormatError(f"expected {g.m} colored edges, found {len(rows)}")
    coloring = EdgeColoring(g.m)
    for eid, (lineno, row) in enumerate(rows):
        if len(row) != 3:
            raise FormatError(f"line {lineno}: expected 'u v color'")
        try:
            u, v, c = (int(t) for t in row)
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
        if g.edge_id(u, v) != eid:
            raise FormatError(
                f"line {lineno}: edge ({u},{v}) does not match edge id {eid}"
            )
        if c < 1:
            raise FormatError(f"line {lineno}: colors are positive, got {c}")
        coloring.set(eid, c)
    return coloring, algorithm


def write_coloring_text(g: Graph, coloring: EdgeColoring, algorithm: str) -> str:
    if not coloring.is_total:
        from .errors import PartialColoring

        raise PartialColoring("cannot serialize a partial coloring")
    lines = [f"# colors: {coloring.palette_size}", f"# algorithm: {algorithm}"]
    for e, (u, v) in enumerate(g.edges):
        lines.append(f"{u} {v} {coloring[e]}")
    return "\n".join(lines) + "\n"
