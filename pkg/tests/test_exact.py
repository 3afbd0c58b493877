import random

import pytest

from conftest import named, random_graph

from rainbow4.errors import SizeCapExceeded
from rainbow4.bcolor import qb_exact, qb_exact_direct, verify_bcoloring
from rainbow4.lineplus import build_line_plus, clique_number


class TestSharpFamilies:
    """Minimum palettes of the named extremal families."""

    @pytest.mark.parametrize(
        "family,params,expect",
        [
            ("cycle", (4,), 4),
            ("complete-minus-edge", (4,), 5),
            ("cycle", (5,), 3),
            ("cycle", (6,), 2),
            ("cycle", (7,), 3),
            ("fan", (4,), 5),
            ("k6-minus-pm", (), 12),
        ],
    )
    def test_qb_exact(self, family, params, expect):
        g = named(family, *params)
        k, coloring = qb_exact(g)
        assert k == expect
        assert verify_bcoloring(g, coloring).valid

    @pytest.mark.parametrize("delta", [2, 3, 4, 5])
    def test_k2d_needs_all_edges_distinct(self, delta):
        g = named("complete-bipartite", 2, delta)
        k, _ = qb_exact(g)
        assert k == 2 * delta

    def test_direct_small_values(self):
        assert qb_exact_direct(named("cycle", 4))[0] == 4
        assert qb_exact_direct(named("complete-minus-edge", 4))[0] == 5
        assert qb_exact_direct(named("cycle", 6))[0] == 2

    def test_k4_realizes_the_subcubic_maximum(self):
        # all pairs of K4 edges are adjacent or opposite on a 4-cycle, so all
        # six edges need distinct colors
        g = named("complete", 4)
        assert qb_exact(g)[0] == 6
        assert qb_exact_direct(g)[0] == 6

    def test_prism_needs_five(self):
        # the prism is NOT extremal for the subcubic bound: both oracles
        # agree on five
        g = named("prism", 3)
        assert qb_exact(g)[0] == 5
        assert qb_exact_direct(g)[0] == 5


class TestOracleAgreement:
    def test_on_random_mixed_graphs(self):
        rng = random.Random(11)
        for i in range(40):
            n = rng.randint(4, 8)
            m = rng.randint(3, min(14, n * (n - 1) // 2))
            g = random_graph(n, m, rng.randrange(2**32))
            k1, c1 = qb_exact(g)
            k2, c2 = qb_exact_direct(g)
            assert k1 == k2, f"oracles disagree on seed instance {i}"
            assert verify_bcoloring(g, c1).valid
            assert verify_bcoloring(g, c2).valid

    def test_clique_lower_bound(self):
        rng = random.Random(12)
        for _ in range(15):
            n = rng.randint(4, 7)
            m = rng.randint(3, n * (n - 1) // 2)
            g = random_graph(n, m, rng.randrange(2**32))
            lp = build_line_plus(g)
            w, _ = clique_number(lp.union_graph())
            assert w <= qb_exact(g)[0]

    def test_caps(self):
        g = named("grid", 5, 5)  # 40 edges
        with pytest.raises(SizeCapExceeded):
            qb_exact(g, cap=30)
        with pytest.raises(SizeCapExceeded):
            qb_exact_direct(g)
