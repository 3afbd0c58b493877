"""Shared fixtures: named graphs and seeded random corpora."""

import random

import pytest

from rainbow4.generators import FamilySpec, gen_named, random_planar
from rainbow4.graph import Graph


def named(family, *params, seed=None, chord_prob=None):
    return gen_named(FamilySpec(family, tuple(params), seed=seed, chord_prob=chord_prob))


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph with n vertices and m edges (not nec. planar)."""
    rng = random.Random(seed)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return Graph(n, rng.sample(pairs, m))


def small_random_graphs(count: int, max_n: int, base_seed: int) -> list[Graph]:
    rng = random.Random(base_seed)
    out = []
    for _ in range(count):
        n = rng.randint(4, max_n)
        mmax = n * (n - 1) // 2
        m = rng.randint(0, mmax)
        out.append(random_graph(n, m, rng.randrange(2**32)))
    return out


@pytest.fixture(scope="session")
def planar_pool():
    """Seeded planar graphs of assorted size/density for invariant suites."""
    out = []
    rng = random.Random(4217)
    for i in range(60):
        n = rng.randint(5, 24)
        m = rng.randint(n - 1, 3 * n - 6)
        out.append(random_planar(n, m, seed=10_000 + i))
    return out
