"""Brute-force oracles, independent of the library's algorithms.

Everything here favors obviousness over speed and is only run on small
graphs.  Test modules import these to cross-check the real implementations.
"""

from itertools import combinations, permutations

from rainbow4.graph import Graph


def naive_c4_quads(g: Graph) -> set[tuple[int, int, int, int]]:
    """All 4-cycles as canonical vertex quadruples, by quadruple loop."""
    quads = set()
    for four in combinations(range(g.n), 4):
        for perm in permutations(four):
            a, b, c, d = perm
            if (
                g.has_edge(a, b)
                and g.has_edge(b, c)
                and g.has_edge(c, d)
                and g.has_edge(d, a)
            ):
                quads.add(canonical_quad(*perm))
    return quads


def canonical_quad(a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    seq = (a, b, c, d)
    variants = []
    for rot in range(4):
        variants.append(tuple(seq[(rot + i) % 4] for i in range(4)))
        variants.append(tuple(seq[(rot - i) % 4] for i in range(4)))
    return min(variants)


def naive_max_clique(adj: list[set[int]]) -> int:
    """Exact clique number by subset enumeration (tiny graphs only)."""
    n = len(adj)
    for k in range(n, 0, -1):
        for sub in combinations(range(n), k):
            if all(b in adj[a] for a, b in combinations(sub, 2)):
                return k
    return 0


def naive_chromatic(adj: list[set[int]]) -> int:
    """Exact chromatic number by plain backtracking (tiny graphs only)."""
    n = len(adj)
    if n == 0:
        return 0

    colors = [0] * n

    def feasible(k: int, i: int) -> bool:
        if i == n:
            return True
        for c in range(1, k + 1):
            if all(colors[j] != c for j in adj[i] if j < i):
                colors[i] = c
                if feasible(k, i + 1):
                    return True
        colors[i] = 0
        return False

    for k in range(1, n + 1):
        if feasible(k, 0):
            return k
    raise AssertionError("unreachable")


def _pack_paths(g: Graph, terminals: list[tuple[int, int]], branch: set[int]) -> bool:
    """Pack internally-disjoint paths joining each terminal pair, avoiding
    branch vertices in path interiors.  Backtracking over all path systems."""
    nbrs = [sorted(g.neighbor_sets[v]) for v in range(g.n)]

    def solve(j: int, interior: frozenset[int]) -> bool:
        if j == len(terminals):
            return True
        s, t = terminals[j]

        def walk(v: int, seen: frozenset[int]) -> bool:
            for w in nbrs[v]:
                if w == t:
                    if solve(j + 1, interior | seen):
                        return True
                elif w not in branch and w not in interior and w not in seen:
                    if walk(w, seen | {w}):
                        return True
            return False

        return walk(s, frozenset())

    return solve(0, frozenset())


def has_complete_subdivision(g: Graph, k: int) -> bool:
    """Does g contain a subdivision of K_k?  (K_k is symmetric, so branch
    placements are combinations, not permutations.)"""
    for sub in combinations(range(g.n), k):
        pairs = [(sub[a], sub[b]) for a, b in combinations(range(k), 2)]
        if _pack_paths(g, pairs, set(sub)):
            return True
    return False


def has_biclique_subdivision(g: Graph, a: int, b: int) -> bool:
    """Does g contain a subdivision of K_{a,b}?"""
    for left in combinations(range(g.n), a):
        rest = [v for v in range(g.n) if v not in left]
        for right in combinations(rest, b):
            pairs = [(x, y) for x in left for y in right]
            if _pack_paths(g, pairs, set(left) | set(right)):
                return True
    return False


def naive_is_planar(g: Graph) -> bool:
    return not has_complete_subdivision(g, 5) and not has_biclique_subdivision(g, 3, 3)


def naive_is_outerplanar(g: Graph) -> bool:
    return not has_complete_subdivision(g, 4) and not has_biclique_subdivision(g, 2, 3)
