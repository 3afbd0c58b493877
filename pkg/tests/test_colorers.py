import random

import pytest

from conftest import named

from rainbow4.errors import NotBipartite, NotPlanar, NotSubcubic, NotTwoConnected
from rainbow4.generators import cartesian_product, random_outerplanar, random_planar
from rainbow4.graph import Graph, enumerate_c4
from rainbow4.recognition import outer_cycle
from rainbow4.bcolor import (
    color_auto,
    color_bipartite_planar,
    color_outerplanar,
    color_planar,
    color_subcubic,
    konig_edge_coloring,
    matching_conflict_graph,
    qb_exact,
    verify_bcoloring,
)
from rainbow4.bcolor.bipartite import two_color_conflicts

ICOSAHEDRON = Graph(
    12,
    [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
     (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
     (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
     (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
     (11, 6), (11, 7), (11, 8), (11, 9), (11, 10)],
)


def assert_valid(g, coloring, bound=None):
    report = verify_bcoloring(g, coloring)
    assert report.valid, [v.to_dict() for v in report.violations]
    if bound is not None:
        assert coloring.palette_size <= bound
    return coloring.palette_size


class TestColorPlanar:
    def test_icosahedron(self):
        assert ICOSAHEDRON.max_degree() == 5
        coloring = color_planar(ICOSAHEDRON)
        assert_valid(ICOSAHEDRON, coloring, bound=2 * 5 + 8)

    def test_c4_loose_bound(self):
        g = named("cycle", 4)
        assert_valid(g, color_planar(g), bound=2 * 2 + 8)

    def test_rejects_nonplanar(self):
        with pytest.raises(NotPlanar):
            color_planar(named("complete", 5))

    def test_random_planar_suite(self):
        rng = random.Random(16)
        for i in range(60):
            n = rng.randint(5, 30)
            g = random_planar(n, rng.randint(n - 1, 3 * n - 6), seed=800 + i)
            assert_valid(g, color_planar(g), bound=2 * g.max_degree() + 8)

    def test_isolated_vertex_is_inert(self):
        g = named("grid", 3, 3)
        before = color_planar(g).palette_size
        after = color_planar(g.add_isolated_vertex()).palette_size
        assert before == after


class TestColorBipartitePlanar:
    def test_grid_5x5(self):
        g = named("grid", 5, 5)
        used = assert_valid(g, color_bipartite_planar(g), bound=2 * 4)

    def test_c6_two_matchings(self):
        g = named("cycle", 6)
        assert_valid(g, color_bipartite_planar(g), bound=4)

    def test_k2d_exactly_2d(self):
        for d in range(3, 7):
            g = named("complete-bipartite", 2, d)
            coloring = color_bipartite_planar(g)
            assert_valid(g, coloring, bound=2 * d)
            assert coloring.palette_size == 2 * d
            assert qb_exact(g)[0] == 2 * d

    def test_conflict_graphs_bipartite(self):
        rng = random.Random(17)
        for i in range(20):
            r, c = rng.randint(2, 5), rng.randint(2, 5)
            g = named("grid", r, c)
            for matching in konig_edge_coloring(g).matchings:
                conflicts = matching_conflict_graph(g, matching)
                two_color_conflicts(conflicts)  # raises on an odd cycle

    def test_rejects_odd(self):
        with pytest.raises(NotBipartite):
            color_bipartite_planar(named("cycle", 5))

    def test_rejects_nonplanar(self):
        with pytest.raises(NotPlanar):
            color_bipartite_planar(named("complete-bipartite", 3, 3))


def subcubic_corpus(count, base_seed):
    """Prisms with seeded edge deletions: subcubic planar, rich in 4-cycles."""
    rng = random.Random(base_seed)
    out = []
    for i in range(count):
        k = rng.randint(3, 14)
        g = named("prism", k)
        deletions = rng.randint(0, k // 2)
        ids = sorted(rng.sample(range(g.m), deletions))
        g = g.delete_edges(ids)[0]
        out.append(g)
    return out


class TestColorSubcubic:
    def test_k4(self):
        g = named("complete", 4)
        coloring = color_subcubic(g)
        assert_valid(g, coloring, bound=6)
        assert coloring.palette_size == 6  # K4 forces all edges distinct

    def test_cube(self):
        g = cartesian_product(named("cycle", 4), named("complete", 2))
        assert_valid(g, color_subcubic(g), bound=6)

    def test_prism(self):
        g = named("prism", 3)
        assert_valid(g, color_subcubic(g), bound=6)

    def test_c4_free_uses_vizing(self):
        g = named("cycle", 7)
        coloring = color_subcubic(g)
        assert_valid(g, coloring, bound=4)

    def test_corpus(self):
        for g in subcubic_corpus(60, base_seed=18):
            bound = 6 if enumerate_c4(g) else 4
            assert_valid(g, color_subcubic(g), bound=bound)

    def test_rejects_high_degree(self):
        with pytest.raises(NotSubcubic):
            color_subcubic(named("fan", 4))

    def test_rejects_nonplanar(self):
        with pytest.raises(NotPlanar):
            color_subcubic(named("complete-bipartite", 3, 3))

    def test_isolated_vertex_is_inert(self):
        g = named("prism", 4)
        assert color_subcubic(g).palette_size == color_subcubic(g.add_isolated_vertex()).palette_size


def triforce():
    """Hexagon with an inscribed triangle: every boundary face is a blocked
    triangle, forcing the twin-triangle step."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (2, 4), (4, 0)])


class TestColorOuterplanar:
    def test_c4_exception(self):
        g = named("cycle", 4)
        coloring = color_outerplanar(g, outer_cycle(g))
        assert_valid(g, coloring)
        assert coloring.palette_size == 4

    def test_k4_minus_e_exception(self):
        g = named("complete-minus-edge", 4)
        coloring = color_outerplanar(g, outer_cycle(g))
        assert_valid(g, coloring)
        assert coloring.palette_size == 5

    def test_c7(self):
        g = named("cycle", 7)
        coloring = color_outerplanar(g, outer_cycle(g))
        assert_valid(g, coloring, bound=3)
        assert coloring.palette_size == 3

    def test_fan_needs_five(self):
        g = named("fan", 4)
        coloring = color_outerplanar(g, outer_cycle(g))
        assert_valid(g, coloring, bound=5)
        assert qb_exact(g)[0] == 5

    def test_triforce_twin_step(self):
        g = triforce()
        assert g.max_degree() == 4
        coloring = color_outerplanar(g, outer_cycle(g))
        assert_valid(g, coloring, bound=5)

    def test_maximal_fan(self):
        # maximal outerplanar triangulation on 9 vertices
        g, layout = random_outerplanar(9, 1.0, seed=42)
        coloring = color_outerplanar(g, layout)
        assert_valid(g, coloring, bound=g.max_degree() + 1)

    def test_random_corpus(self):
        rng = random.Random(19)
        for i in range(80):
            n = rng.randint(5, 32)
            prob = rng.choice([0.2, 0.5, 0.8, 1.0])
            g, layout = random_outerplanar(n, prob, seed=900 + i)
            coloring = color_outerplanar(g, layout)
            assert_valid(g, coloring, bound=g.max_degree() + 1)

    def test_rejects_not_two_connected(self):
        g = named("path", 5)
        from rainbow4.recognition import OuterplanarLayout

        with pytest.raises(NotTwoConnected):
            # hand-build a bogus layout to reach the connectivity check
            color_outerplanar(named("path", 2), OuterplanarLayout(order=(0, 1)))

    def test_twin_step_repair_path(self):
        """White-box: drive the twin-triangle step on a 9-cycle with an
        inscribed triangle; the alternating coloring of the reduced 6-cycle
        collides at (v1,vn)/(v5,v6), forcing the recoloring repair."""
        from rainbow4.bcolor.outerplanar import _Colorer
        from rainbow4.graph import EdgeColoring

        g = Graph(
            9,
            [(i, (i + 1) % 9) for i in range(9)] + [(0, 2), (2, 4), (0, 4)],
        )
        assert g.max_degree() == 4
        colorer = _Colorer(g, k=5, delta=4)
        order = tuple(range(9))
        chords = frozenset(
            {frozenset((0, 2)), frozenset((2, 4)), frozenset((0, 4))}
        )
        adj = colorer.adjacency(order, chords)
        colorer._twin_triangle_step(order, chords, adj)
        coloring = EdgeColoring(g.m, colorer.col)
        report = verify_bcoloring(g, coloring)
        assert report.valid
        assert coloring.palette_size <= 5


class TestColorAuto:
    def test_bowtie(self):
        g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        coloring, report = color_auto(g)
        assert_valid(g, coloring, bound=g.max_degree() + 1)
        assert report.verified and report.class_label == "outerplanar"

    def test_disjoint_c4_c5(self):
        g = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)])
        coloring, report = color_auto(g)
        assert_valid(g, coloring)
        assert coloring.palette_size == 4  # palettes shared across components

    def test_k6_minus_pm_exact_fallback_route(self):
        g = named("k6-minus-pm")
        coloring, report = color_auto(g)
        assert_valid(g, coloring)
        assert coloring.palette_size == 12
        assert report.class_label == "planar"

    def test_nonplanar_block_via_exact(self):
        g = named("complete-bipartite", 3, 3)
        coloring, report = color_auto(g)
        assert_valid(g, coloring)
        assert report.class_label == "nonplanar"

    def test_mixed_blocks(self):
        # a triangle, a C4 block, and a bridge, chained
        g = Graph(
            8,
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3), (6, 7)],
        )
        coloring, report = color_auto(g)
        assert_valid(g, coloring)

    def test_isolated_vertex_is_inert(self):
        g = named("grid", 3, 4)
        a, _ = color_auto(g)
        b, _ = color_auto(g.add_isolated_vertex())
        assert a.palette_size == b.palette_size
