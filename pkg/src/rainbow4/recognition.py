"""Graph-class recognition and outer-cycle extraction.

Planarity is decided by networkx's left-right (DFS) planarity test; the
obstruction witnesses it returns are re-checked here as genuine K5/K33
subdivisions.  Outerplanarity is the classical apex reduction: a graph is
outerplanar iff adding a vertex adjacent to everything leaves it planar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
from networkx.algorithms.planarity import get_counterexample

from .errors import (
    DirectiveContradiction,
    InvalidDeclaredCycle,
    LayoutMismatch,
    NotOuterplanar,
    NotTwoConnected,
)
from .graph import Graph, blocks, is_bipartite
from .graphio import GraphDirectives


@dataclass(frozen=True)
class OuterplanarLayout:
    """Cyclic outer order plus the chords of a 2-connected outerplanar graph.

    Each chord is stored as (edge_id, i, j) with i < j the outer-order
    positions of its endpoints.
    """

    order: tuple[int, ...]
    chords: tuple[tuple[int, int, int], ...] = field(default=())

    def validate(self, g: Graph) -> None:
        n = len(self.order)
        if sorted(self.order) != list(range(g.n)):
            raise LayoutMismatch("outer order is not a permutation of the vertices")
        cycle_eids = set()
        for i in range(n):
            u, v = self.order[i], self.order[(i + 1) % n]
            e = g.edge_id(u, v)
            if e is None:
                raise LayoutMismatch(f"outer order breaks at ({u},{v}): not an edge")
            cycle_eids.add(e)
        chord_eids = set()
        for e, i, j in self.chords:
            if not (0 <= i < j < n):
                raise LayoutMismatch(f"bad chord positions ({i},{j})")
            expect = g.edge_id(self.order[i], self.order[j])
            if expect != e:
                raise LayoutMismatch(f"chord {e} does not join positions {i},{j}")
            if e in cycle_eids:
                raise LayoutMismatch(f"edge {e} is both an outer edge and a chord")
            chord_eids.add(e)
        if len(cycle_eids) + len(chord_eids) != g.m:
            raise LayoutMismatch("some edge is neither an outer edge nor a chord")
        spans = sorted((i, j) for _, i, j in self.chords)
        for a in range(len(spans)):
            for b in range(a + 1, len(spans)):
                (i, j), (k, l) = spans[a], spans[b]
                if i < k < j < l:
                    raise LayoutMismatch(f"chords ({i},{j}) and ({k},{l}) cross")


@dataclass(frozen=True)
class KuratowskiWitness:
    """A subdivision of K5 or K_{3,3} inside a nonplanar graph."""

    kind: str  # "K5" or "K33"
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ClassLabel:
    label: str  # outerplanar | subcubic-planar | bipartite-planar | planar | nonplanar
    witness: Optional[object] = None


def _to_networkx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_planar(g: Graph) -> tuple[bool, Optional[KuratowskiWitness]]:
    """Planarity plus, when nonplanar, an independently checkable witness."""
    nxg = _to_networkx(g)
    planar, _ = nx.check_planarity(nxg)
    if planar:
        return True, None
    sub = get_counterexample(nxg)
    witness = witness_from_edges(tuple(sorted((min(u, v), max(u, v)) for u, v in sub.edges())))
    return False, witness


def is_outerplanar(g: Graph) -> bool:
    """Apex reduction: add a vertex adjacent to all of V(g), test planarity."""
    apex = g.n
    edges = list(g.edges) + [(v, apex) for v in range(g.n)]
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n + 1))
    nxg.add_edges_from(edges)
    planar, _ = nx.check_planarity(nxg)
    return planar


def witness_from_edges(edges: tuple[tuple[int, int], ...]) -> Optional[KuratowskiWitness]:
    """Interpret an edge set as a K5 or K33 subdivision, or return None."""
    from collections import defaultdict

    adj = defaultdict(set)
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    degs = {v: len(ns) for v, ns in adj.items()}
    branch = sorted(v for v, d in degs.items() if d >= 3)
    if any(d < 2 for d in degs.values()):
        return None
    if sorted(degs[b] for b in branch) == [4] * 5 and len(branch) == 5:
        kind, expected_pairs = "K5", 10
    elif sorted(degs[b] for b in branch) == [3] * 6 and len(branch) == 6:
        kind, expected_pairs = "K33", 9
    else:
        return None
    # walk the degree-2 chains between branch vertices
    used = set()
    pairs = set()
    for b in branch:
        for first in sorted(adj[b]):
            if (b, first) in used:
                continue
            prev, cur = b, first
            used.add((prev, cur))
            while degs[cur] == 2:
                nxt = next(iter(adj[cur] - {prev}))
                prev, cur = cur, nxt
                used.add((prev, cur))
            if cur == b or (min(b, cur), max(b, cur)) in pairs:
                return None
            pairs.add((min(b, cur), max(b, cur)))
            used.add((cur, prev))
    if len(pairs) != expected_pairs:
        return None
    if kind == "K5":
        want = {(branch[a], branch[c]) for a in range(5) for c in range(a + 1, 5)}
        if pairs != want:
            return None
    else:
        # the branch graph must be K_{3,3}: 3-regular and bipartite-complete
        part0 = {branch[0]}
        part1 = {v for v in branch if (min(branch[0], v), max(branch[0], v)) in pairs}
        part0 = set(branch) - part1
        if len(part0) != 3 or len(part1) != 3:
            return None
        want = {(min(a, c), max(a, c)) for a in part0 for c in part1}
        if pairs != want:
            return None
    return KuratowskiWitness(kind=kind, edges=edges)


def check_witness(g: Graph, witness: KuratowskiWitness) -> bool:
    """Independent check: witness edges lie in g and form a K5/K33 subdivision."""
    if not all(g.has_edge(u, v) for u, v in witness.edges):
        return False
    rebuilt = witness_from_edges(witness.edges)
    return rebuilt is not None and rebuilt.kind == witness.kind


def two_connected(g: Graph) -> bool:
    if g.n < 3:
        return False
    bs = blocks(g)
    return len(bs) == 1 and bs[0][0].n == g.n


def outer_cycle(g: Graph, declared: Optional[tuple[int, ...]] = None) -> OuterplanarLayout:
    """The outer Hamiltonian cycle and chord set of a 2-connected outerplanar
    graph, found by repeated degree-2 reduction; a declared order is validated
    and used verbatim."""
    if declared is not None:
        try:
            layout = layout_from_order(g, tuple(declared))
            layout.validate(g)
        except LayoutMismatch as exc:
            raise InvalidDeclaredCycle(str(exc)) from exc
        return layout
    if not two_connected(g):
        raise NotTwoConnected("outer_cycle needs a 2-connected graph")
    if not is_outerplanar(g):
        raise NotOuterplanar("graph is not outerplanar")
    order = _hamiltonian_order(g)
    layout = layout_from_order(g, order)
    layout.validate(g)
    return layout


def layout_from_order(g: Graph, order: tuple[int, ...]) -> OuterplanarLayout:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    cycle_eids = set()
    for i in range(n):
        e = g.edge_id(order[i], order[(i + 1) % n])
        if e is None:
            raise LayoutMismatch(f"({order[i]},{order[(i + 1) % n]}) is not an edge")
        cycle_eids.add(e)
    chords = []
    for e, (u, v) in enumerate(g.edges):
        if e in cycle_eids:
            continue
        i, j = sorted((pos[u], pos[v]))
        chords.append((e, i, j))
    return OuterplanarLayout(order=order, chords=tuple(sorted(chords)))


def _hamiltonian_order(g: Graph) -> tuple[int, ...]:
    """Degree-2 reduction: remove a degree-2 vertex, join its neighbors with a
    virtual edge, recurse, then reinsert between them."""
    adj: dict[int, set[int]] = {v: set(g.neighbors(v)) for v in range(g.n)}
    alive = set(range(g.n))
    stack: list[tuple[int, int, int]] = []
    while len(alive) > 3:
        v = min((u for u in alive if len(adj[u]) == 2), default=None)
        if v is None:
            raise NotOuterplanar("no degree-2 vertex during reduction")
        x, y = sorted(adj[v])
        adj[x].discard(v)
        adj[y].discard(v)
        adj[x].add(y)
        adj[y].add(x)
        alive.discard(v)
        stack.append((v, x, y))
    rest = sorted(alive)
    if not all(b in adj[a] for a in rest for b in rest if a != b):
        raise NotOuterplanar("reduction did not terminate in a triangle")
    order = rest
    while stack:
        v, x, y = stack.pop()
        k = len(order)
        for i in range(k):
            if {order[i], order[(i + 1) % k]} == {x, y}:
                order.insert(i + 1, v)
                break
        else:
            raise NotOuterplanar(f"neighbors of {v} are not consecutive on the cycle")
    return _canonical_rotation(tuple(order))


def _canonical_rotation(order: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate/reflect so the order starts at vertex min and goes to its
    smaller cycle neighbor; purely cosmetic determinism."""
    n = len(order)
    i = order.index(min(order))
    fwd = tuple(order[(i + k) % n] for k in range(n))
    rev = tuple(order[(i - k) % n] for k in range(n))
    return fwd if fwd[1] <= rev[1] else rev


def classify(g: Graph, directives: Optional[GraphDirectives] = None) -> ClassLabel:
    """Most specific label, preferring outerplanar > subcubic-planar >
    bipartite-planar > planar > nonplanar; '# class' directives are validated
    and honored verbatim."""
    if directives is not None and directives.class_label is not None:
        declared = directives.class_label
        if not _class_holds(g, declared):
            raise DirectiveContradiction(f"graph fails declared class {declared!r}")
        return ClassLabel(label="subcubic-planar" if declared == "subcubic" else declared)
    planar, witness = is_planar(g)
    if not planar:
        return ClassLabel(label="nonplanar", witness=witness)
    if is_outerplanar(g):
        return ClassLabel(label="outerplanar")
    if g.max_degree() <= 3:
        return ClassLabel(label="subcubic-planar")
    parts, _ = is_bipartite(g)
    if parts is not None:
        return ClassLabel(label="bipartite-planar")
    return ClassLabel(label="planar")


def _class_holds(g: Graph, declared: str) -> bool:
    planar, _ = is_planar(g)
    if declared == "planar":
        return planar
    if declared == "outerplanar":
        return is_outerplanar(g)
    if declared == "bipartite-planar":
        return planar and is_bipartite(g)[0] is not None
    if declared == "subcubic":
        return planar and g.max_degree() <= 3
    return False
