"""Deterministic graph families and seeded random planar/outerplanar corpora.

Canonical vertex numbering per family:

* ``complete(n)``, ``cycle(n)``, ``path(n)``: vertices 0..n-1 in the natural
  order.
* ``complete-bipartite(a, b)``: left side 0..a-1, right side a..a+b-1.
* ``complete-minus-edge(n)``: K_n without the edge (0, 1).
* ``k6-minus-pm``: K_6 without the perfect matching {(0,1), (2,3), (4,5)}.
* ``fan(k)``: path 0..k-1 plus vertex k adjacent to every path vertex.
* ``prism(k)``: C_k square K_2, i.e. cycle vertices doubled; (i, i+k) rungs.
* ``grid(r, c)``: vertex (i, j) is i*c + j.

Randomness comes from :class:`random.Random` (seedable Mersenne Twister), so
identical spec + seed reproduce identical graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParams
from .graph import Graph
from .recognition import OuterplanarLayout

FAMILIES = (
    "complete",
    "complete-bipartite",
    "complete-minus-edge",
    "cycle",
    "path",
    "k6-minus-pm",
    "fan",
    "prism",
    "grid",
    "random-planar",
    "random-outerplanar",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    seed: Optional[int] = None
    chord_prob: Optional[float] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParams(f"unknown family {self.family!r}")


def gen_named(spec: FamilySpec) -> Graph:
    """Build the deterministic graph described by spec."""
    fam, p = spec.family, spec.params
    if fam == "complete":
        n = _one_param(p, minimum=1)
        return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])
    if fam == "complete-bipartite":
        a, b = _two_params(p, minimum=1)
        return Graph(a + b, [(x, a + y) for x in range(a) for y in range(b)])
    if fam == "complete-minus-edge":
        n = _one_param(p, minimum=2)
        return Graph(
            n, [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) != (0, 1)]
        )
    if fam == "cycle":
        n = _one_param(p, minimum=3)
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if fam == "path":
        n = _one_param(p, minimum=1)
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if fam == "k6-minus-pm":
        if p not in ((), (6,)):
            raise InvalidParams("k6-minus-pm takes no parameters")
        skip = {(0, 1), (2, 3), (4, 5)}
        return Graph(
            6, [(a, b) for a in range(6) for b in range(a + 1, 6) if (a, b) not in skip]
        )
    if fam == "fan":
        k = _one_param(p, minimum=2)
        edges = [(i, i + 1) for i in range(k - 1)] + [(i, k) for i in range(k)]
        return Graph(k + 1, edges)
    if fam == "prism":
        k = _one_param(p, minimum=3)
        return cartesian_product(gen_named(FamilySpec("cycle", (k,))), gen_named(FamilySpec("complete", (2,))))
    if fam == "grid":
        r, c = _two_params(p, minimum=2)
        edges = []
        for i in range(r):
            for j in range(c):
                if j + 1 < c:
                    edges.append((i * c + j, i * c + j + 1))
                if i + 1 < r:
                    edges.append((i * c + j, (i + 1) * c + j))
        return Graph(r * c, edges)
    if fam == "random-planar":
        n, m = _two_params(p, minimum=3)
        return random_planar(n, m, spec.seed if spec.seed is not None else 0)
    if fam == "random-outerplanar":
        n = _one_param(p, minimum=3)
        prob = spec.chord_prob if spec.chord_prob is not None else 0.5
        g, _ = random_outerplanar(n, prob, spec.seed if spec.seed is not None else 0)
        return g
    raise InvalidParams(f"unknown family {fam!r}")


def _one_param(p: tuple[int, ...], minimum: int) -> int:
    if len(p) != 1 or p[0] < minimum:
        raise InvalidParams(f"expected one parameter >= {minimum}, got {p}")
    return p[0]


def _two_params(p: tuple[int, ...], minimum: int) -> tuple[int, int]:
    if len(p) != 2 or min(p) < minimum:
        raise InvalidParams(f"expected two parameters >= {minimum}, got {p}")
    return p[0], p[1]


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (a, x) is numbered a*|V(h)| + x."""
    nh = h.n
    edges = []
    for a in range(g.n):
        for (x, y) in h.edges:
            edges.append((a * nh + x, a * nh + y))
    for (a, b) in g.edges:
        for x in range(nh):
            edges.append((a * nh + x, b * nh + x))
    return Graph(g.n * nh, edges)


def random_outerplanar(
    n: int, chord_prob: float, seed: int
) -> tuple[Graph, OuterplanarLayout]:
    """Outer cycle on 0..n-1 plus a seeded non-crossing chord sample.

    Chords come from recursive interval splitting: each split is accepted
    with probability chord_prob, so prob 0 gives C_n and prob 1 gives a
    maximal outerplanar triangulation with 2n-3 edges.  Always 2-connected.
    """
    if n < 3:
        raise InvalidParams(f"need n >= 3, got {n}")
    if not 0.0 <= chord_prob <= 1.0:
        raise InvalidParams(f"chord_prob must be in [0,1], got {chord_prob}")
    rng = random.Random(seed)
    chords: list[tuple[int, int]] = []

    def split(i: int, j: int) -> None:
        if j - i < 2:
            return
        if rng.random() >= chord_prob:
            return
        k = rng.randint(i + 1, j - 1)
        if k - i >= 2:
            chords.append((i, k))
        if j - k >= 2:
            chords.append((k, j))
        split(i, k)
        split(k, j)

    split(0, n - 1)
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, j) for i, j in chords]
    g = Graph(n, edges)
    layout = OuterplanarLayout(
        order=tuple(range(n)),
        chords=tuple(
            sorted((g.edge_id(i, j), i, j) for i, j in chords)  # type: ignore[misc]
        ),
    )
    layout.validate(g)
    return g, layout


def random_planar(n: int, target_m: int, seed: int) -> Graph:
    """Seeded random planar graph on n vertices with target_m edges.

    Builds a random planar triangulation by inserting each new vertex into a
    uniformly chosen face, then deletes uniformly chosen edges down to
    target_m.
    """
    if n < 3:
        raise InvalidParams(f"need n >= 3, got {n}")
    if not 0 <= target_m <= 3 * n - 6:
        raise InvalidParams(f"target_m must be in [0, 3n-6], got {target_m}")
    rng = random.Random(seed)
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2), (0, 1, 2)]  # two sides of the starting triangle
    for v in range(3, n):
        idx = rng.randrange(len(faces))
        a, b, c = faces.pop(idx)
        for u in (a, b, c):
            edges.add((min(u, v), max(u, v)))
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    edge_list = sorted(edges)
    while len(edge_list) > target_m:
        edge_list.pop(rng.randrange(len(edge_list)))
    return Graph(n, edge_list)
