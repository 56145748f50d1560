"""Edge-list and graph6 format round trips and error reporting."""

import pytest

from gammacone.errors import EmptyGraphError, GraphFormatError
from gammacone.graphs import make_complete, make_cycle, make_hypercube, make_path
from gammacone.io import (
    format_edge_list,
    format_graph6,
    parse_edge_list,
    parse_graph6,
)
from gammacone.rng import XorShift64Star

from _util import random_graph


class TestEdgeList:
    def test_k2(self):
        g = parse_edge_list("n 2\n0 1")
        assert g.edges == ((0, 1),)

    def test_k3(self):
        g = parse_edge_list("n 3\n0 1\n1 2\n0 2")
        assert g.edges == make_complete(3).edges

    def test_loop_reports_line(self):
        with pytest.raises(GraphFormatError, match="line 2.*loop"):
            parse_edge_list("n 2\n0 0")

    def test_out_of_range_reports_line(self):
        with pytest.raises(GraphFormatError, match="line 3"):
            parse_edge_list("n 2\n0 1\n0 5")

    def test_malformed_line(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_list("n 2\n0 1 2")

    def test_non_integer(self):
        with pytest.raises(GraphFormatError, match="integers"):
            parse_edge_list("n 2\n0 x")

    def test_missing_header(self):
        with pytest.raises(GraphFormatError, match="header"):
            parse_edge_list("0 1\n")

    def test_zero_count(self):
        with pytest.raises(EmptyGraphError):
            parse_edge_list("n 0\n")

    def test_comments_and_blanks_ignored(self):
        g = parse_edge_list("# header\n\nn 3\n# edge\n0 1\n")
        assert g.edges == ((0, 1),)

    def test_duplicates_collapsed(self):
        g = parse_edge_list("n 3\n0 1\n1 0\n0 1")
        assert g.edges == ((0, 1),)

    def test_round_trip(self):
        rng = XorShift64Star(9)
        for _ in range(20):
            g = random_graph(rng, 1 + rng.randrange(9))
            assert parse_edge_list(format_edge_list(g)).edges == g.edges


class TestGraph6:
    def test_k2(self):
        g = parse_graph6("A_")
        assert g.n == 2
        assert g.edges == ((0, 1),)

    def test_k3(self):
        g = parse_graph6("Bw")
        assert g.edges == make_complete(3).edges

    def test_empty_five(self):
        g = parse_graph6("D??")
        assert g.n == 5
        assert g.edges == ()

    def test_truncated(self):
        # n = 5 needs two data bytes; a single one is a truncated stream
        with pytest.raises(GraphFormatError, match="truncated"):
            parse_graph6("D?")

    def test_trailing_garbage(self):
        with pytest.raises(GraphFormatError, match="trailing"):
            parse_graph6("A_?")

    def test_byte_out_of_range(self):
        # '=' is printable ASCII but below the graph6 offset of 63
        with pytest.raises(GraphFormatError, match="outside"):
            parse_graph6("A=")

    def test_long_form_unsupported(self):
        with pytest.raises(GraphFormatError, match="n > 62"):
            parse_graph6("~??")

    def test_nonzero_padding_rejected(self):
        # n = 2 uses 1 of 6 bits; force a padding bit below the edge bit
        bad = "A" + chr(63 + 0b010000)
        with pytest.raises(GraphFormatError, match="padding"):
            parse_graph6(bad)

    def test_header_prefix_tolerated(self):
        assert parse_graph6(">>graph6<<Bw").edges == make_complete(3).edges

    def test_known_encodings(self):
        assert format_graph6(make_complete(3)) == "Bw"
        assert format_graph6(make_complete(2)) == "A_"

    def test_round_trip_generated(self):
        for g in (
            make_complete(1),
            make_complete(7),
            make_path(2),
            make_path(9),
            make_cycle(5),
            make_hypercube(4),
        ):
            back = parse_graph6(format_graph6(g))
            assert back.n == g.n and back.edges == g.edges

    def test_round_trip_random(self):
        rng = XorShift64Star(21)
        for _ in range(40):
            g = random_graph(rng, 1 + rng.randrange(20))
            back = parse_graph6(format_graph6(g))
            assert back.n == g.n and back.edges == g.edges

    def test_size_cap(self):
        with pytest.raises(ValueError, match="62"):
            format_graph6(random_graph(XorShift64Star(1), 63, p=0.1))
