import random

import pytest

from conftest import named, random_graph, small_random_graphs
from naive import naive_is_outerplanar, naive_is_planar

from rainbow4.errors import (
    DirectiveContradiction,
    InvalidDeclaredCycle,
    NotOuterplanar,
    NotTwoConnected,
)
from rainbow4.generators import cartesian_product, random_outerplanar, random_planar
from rainbow4.graph import Graph
from rainbow4.graphio import GraphDirectives
from rainbow4.recognition import (
    check_witness,
    classify,
    is_outerplanar,
    is_planar,
    outer_cycle,
    two_connected,
)


def all_graphs_up_to(n_max):
    """Every labeled graph on up to n_max vertices."""
    for n in range(1, n_max + 1):
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        for mask in range(1 << len(pairs)):
            yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


class TestPlanarity:
    def test_k5(self):
        planar, witness = is_planar(named("complete", 5))
        assert not planar
        assert witness is not None and witness.kind == "K5"
        assert check_witness(named("complete", 5), witness)

    def test_k33(self):
        g = named("complete-bipartite", 3, 3)
        planar, witness = is_planar(g)
        assert not planar
        assert witness.kind == "K33"
        assert check_witness(g, witness)

    def test_k4(self):
        assert is_planar(named("complete", 4))[0]

    def test_k4_times_k2_nonplanar(self):
        g = cartesian_product(named("complete", 4), named("complete", 2))
        assert (g.n, g.m) == (8, 16)
        planar, witness = is_planar(g)
        assert not planar and check_witness(g, witness)

    def test_exhaustive_small(self):
        for g in all_graphs_up_to(5):
            assert is_planar(g)[0] == naive_is_planar(g)

    def test_random_medium_vs_subdivision_search(self):
        rng = random.Random(5)
        for _ in range(25):
            n = rng.randint(6, 8)
            m = rng.randint(0, min(n * (n - 1) // 2, 3 * n - 4))
            g = random_graph(n, m, rng.randrange(2**32))
            assert is_planar(g)[0] == naive_is_planar(g)

    def test_witnesses_on_random_nonplanar(self):
        rng = random.Random(6)
        found = 0
        while found < 10:
            g = random_graph(rng.randint(6, 12), 0, 0)
            n = g.n
            m = rng.randint(2 * n, n * (n - 1) // 2)
            g = random_graph(n, m, rng.randrange(2**32))
            planar, witness = is_planar(g)
            if not planar:
                found += 1
                assert witness is not None and check_witness(g, witness)


class TestOuterplanarity:
    def test_k4_not_outerplanar(self):
        assert not is_outerplanar(named("complete", 4))

    def test_k4_minus_edge(self):
        assert is_outerplanar(named("complete-minus-edge", 4))

    def test_prism_not_outerplanar(self):
        assert not is_outerplanar(named("prism", 3))

    def test_exhaustive_small(self):
        for g in all_graphs_up_to(5):
            assert is_outerplanar(g) == naive_is_outerplanar(g)

    def test_random_medium_vs_subdivision_search(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randint(6, 7)
            m = rng.randint(0, 2 * n - 1)
            g = random_graph(n, m, rng.randrange(2**32))
            assert is_outerplanar(g) == naive_is_outerplanar(g)


class TestOuterCycle:
    def test_k4_minus_edge(self):
        g = named("complete-minus-edge", 4)  # K4 without (0,1)
        layout = outer_cycle(g)
        assert layout.order == (0, 2, 1, 3)
        assert [(g.edges[e]) for e, _, _ in layout.chords] == [(2, 3)]

    def test_plain_cycle(self):
        g = named("cycle", 7)
        layout = outer_cycle(g)
        assert layout.chords == ()
        assert layout.order == tuple(range(7))

    def test_fan(self):
        g = named("fan", 4)  # path 0..3 plus universal vertex 4
        layout = outer_cycle(g)
        assert sorted(layout.order) == [0, 1, 2, 3, 4]
        layout.validate(g)
        chord_pairs = {g.edges[e] for e, _, _ in layout.chords}
        assert chord_pairs == {(1, 4), (2, 4)}

    def test_declared_order_used_verbatim(self):
        g = named("cycle", 5)
        declared = (3, 4, 0, 1, 2)
        layout = outer_cycle(g, declared=declared)
        assert layout.order == declared

    def test_declared_order_validated(self):
        g = named("cycle", 5)
        with pytest.raises(InvalidDeclaredCycle):
            outer_cycle(g, declared=(0, 2, 4, 1, 3))

    def test_not_two_connected(self):
        with pytest.raises(NotTwoConnected):
            outer_cycle(named("path", 4))

    def test_not_outerplanar(self):
        with pytest.raises(NotOuterplanar):
            outer_cycle(named("complete", 4))

    def test_random_outerplanar_layouts_valid(self):
        for i in range(25):
            g, layout = random_outerplanar(5 + i, 0.6, seed=100 + i)
            found = outer_cycle(g)
            found.validate(g)
            assert is_outerplanar(g)
            assert two_connected(g)


class TestClassify:
    def test_c6(self):
        assert classify(named("cycle", 6)).label == "outerplanar"

    def test_grid_4x4(self):
        assert classify(named("grid", 4, 4)).label == "bipartite-planar"

    def test_k5(self):
        lab = classify(named("complete", 5))
        assert lab.label == "nonplanar" and lab.witness is not None

    def test_prism_subcubic(self):
        assert classify(named("prism", 3)).label == "subcubic-planar"

    def test_icosahedron_planar(self):
        import networkx as nx

        nxg = nx.icosahedral_graph()
        g = Graph(nxg.number_of_nodes(), list(nxg.edges()))
        assert classify(g).label == "planar"

    def test_preference_order(self):
        # K4 is planar + subcubic but not outerplanar
        assert classify(named("complete", 4)).label == "subcubic-planar"

    def test_directive_honored(self):
        g = named("cycle", 6)
        d = GraphDirectives(class_label="planar")
        assert classify(g, d).label == "planar"

    def test_directive_contradiction(self):
        g = named("complete", 5)
        with pytest.raises(DirectiveContradiction):
            classify(g, GraphDirectives(class_label="planar"))

    def test_stable_under_relabeling(self):
        rng = random.Random(8)
        for i in range(10):
            n = rng.randint(5, 12)
            g = random_planar(n, rng.randint(n - 1, 3 * n - 6), seed=300 + i)
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
            assert classify(g).label == classify(h).label

    def test_idempotent(self):
        g = named("grid", 3, 3)
        assert classify(g).label == classify(g).label
