import random

import networkx as nx
import pytest

from harrisgraphs import (
    Graph6Error,
    build_graph,
    emit_graph6,
    parse_graph6,
    read_graph6_lines,
)


def random_graph(rng, n):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4
    ]
    return build_graph(n, edges)


class TestAgainstNetworkx:
    @pytest.mark.parametrize("seed", range(10))
    def test_emit_matches_networkx_bytes(self, seed):
        rng = random.Random(seed)
        g = random_graph(rng, rng.randint(1, 30))
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges)
        assert emit_graph6(g) == nx.to_graph6_bytes(nxg, header=False).decode().strip()

    @pytest.mark.parametrize("seed", range(10))
    def test_parse_matches_networkx_graph(self, seed):
        rng = random.Random(1000 + seed)
        g = random_graph(rng, rng.randint(1, 30))
        line = nx.to_graph6_bytes(nxg := _to_nx(g), header=False).decode().strip()
        parsed = parse_graph6(line)
        assert parsed.n == nxg.number_of_nodes()
        assert parsed.edges == frozenset(
            (min(u, v), max(u, v)) for u, v in nxg.edges
        )


def _to_nx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nxg


class TestRoundTrip:
    @pytest.mark.parametrize("seed", range(20))
    def test_parse_emit_identity(self, seed):
        rng = random.Random(seed)
        g = random_graph(rng, rng.randint(1, 62))
        assert parse_graph6(emit_graph6(g)) == g

    def test_known_strings(self):
        # triangle and the order-7 Harris graph
        assert parse_graph6("Bw").edges == frozenset({(0, 1), (0, 2), (1, 2)})
        assert str(parse_graph6("F~ee?").n) == "7"

    def test_optional_header_accepted(self):
        assert parse_graph6(">>graph6<<Bw") == parse_graph6("Bw")


class TestErrors:
    @pytest.mark.parametrize(
        "bad,fragment",
        [
            ("", "empty"),
            ("?", "n=0"),
            ("~~~", "long size header"),
            ('B"', "outside graph6 range"),
            ("B", "expected 1 edge bytes"),
            ("Bww", "expected 1 edge bytes"),
            ("B~", "padding"),
        ],
    )
    def test_rejected_with_reason(self, bad, fragment):
        with pytest.raises(Graph6Error, match=fragment):
            parse_graph6(bad)

    def test_offset_reported(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6('B"')
        assert err.value.offset == 1

    def test_emit_rejects_large_order(self):
        g = build_graph(63, [(0, 1)])
        with pytest.raises(Graph6Error, match="long size header"):
            emit_graph6(g)


class TestReadLines:
    def test_skips_blanks_and_reports_line_numbers(self):
        graphs = read_graph6_lines(["Bw", "", "  ", "F~ee?"])
        assert [g.n for g in graphs] == [3, 7]
        with pytest.raises(Graph6Error, match="line 2"):
            read_graph6_lines(["Bw", "!nope"])
