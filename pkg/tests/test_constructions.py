import random

import pytest

from harrisgraphs import (
    ConstructionError,
    build_graph,
    components_after_removal,
    flower,
    graft,
    graft_edge_candidates,
    is_connected,
    is_eulerian,
    is_harris,
    subdivide_edge_by_w5,
)


def random_connected(rng, n, p=0.35):
    while True:
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = build_graph(n, edges)
        if is_connected(g):
            return g


class TestW5Subdivision:
    def test_shape(self, h7):
        g2, sub = subdivide_edge_by_w5(h7, (0, 1))
        assert g2.n == h7.n + 5
        assert not g2.has_edge(0, 1)
        assert g2.degree(sub.hub) == 4
        assert g2.degree(sub.attach_x) == 4 and g2.degree(sub.attach_y) == 4
        for v in sub.free_pair:
            assert g2.degree(v) == 3
        # original degrees survive
        for v in range(h7.n):
            assert g2.degree(v) == h7.degree(v)

    def test_attach_vertices_are_opposite_on_rim(self, h7):
        g2, sub = subdivide_edge_by_w5(h7, (0, 1))
        assert not g2.has_edge(sub.attach_x, sub.attach_y)

    def test_missing_edge_rejected(self, h7):
        with pytest.raises(ConstructionError, match=r"\(4,5\)"):
            subdivide_edge_by_w5(h7, (4, 5))


class TestGraft:
    def test_order_and_parity(self, h7):
        g = graft(h7, (0, 4), h7, (0, 4))
        assert g.n == 2 * h7.n + 10
        assert is_eulerian(g)[0]

    def test_safe_edges_of_h7(self, h7):
        assert graft_edge_candidates(h7) == [
            (0, 4), (0, 5), (0, 6), (1, 6), (2, 5), (3, 4)
        ]

    def test_candidate_edges_have_no_tight_superset(self, h7):
        for x, y in graft_edge_candidates(h7):
            for mask in range(1 << h7.n):
                members = [v for v in range(h7.n) if mask >> v & 1]
                if x in members and y in members:
                    count, _ = components_after_removal(h7, members)
                    assert count < len(members)

    def test_tight_edge_graft_can_fail(self, h7):
        # (0,1) lies inside a tight cut of the order-7 graph, and grafting
        # on it demonstrably loses toughness
        assert (0, 1) not in graft_edge_candidates(h7)
        g = graft(h7, (0, 1), h7, (0, 1))
        assert not is_harris(g).is_harris

    def test_candidate_scan_ceiling(self):
        big = build_graph(15, [(i, (i + 1) % 15) for i in range(15)])
        with pytest.raises(ConstructionError, match="capped"):
            graft_edge_candidates(big)


class TestFlower:
    def test_all_even_output(self):
        rng = random.Random(0)
        for _ in range(30):
            g = random_connected(rng, rng.randint(3, 10))
            f = flower(g)
            assert all(d % 2 == 0 for d in f.degrees())
            assert is_connected(f)

    def test_preserves_input_vertices_and_edges(self):
        rng = random.Random(1)
        for _ in range(20):
            g = random_connected(rng, rng.randint(3, 10))
            f = flower(g)
            assert f.n >= g.n
            assert set(g.edges) <= set(f.edges)
            for v in range(g.n, f.n):
                assert f.degree(v) == 2

    def test_even_input_unchanged(self, h7):
        assert flower(h7) is h7

    def test_deterministic(self):
        rng = random.Random(2)
        for _ in range(10):
            g = random_connected(rng, rng.randint(4, 9))
            assert flower(g) == flower(g)

    def test_rejects_disconnected(self):
        with pytest.raises(ConstructionError, match="connected"):
            flower(build_graph(4, [(0, 1), (2, 3)]))

    def test_flowered_petersen(self, petersen):
        f = flower(petersen)
        assert f.n == 15
        assert is_harris(f).is_harris
