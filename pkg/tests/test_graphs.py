"""Graph construction, generators, and combinatorial queries."""

import pytest

from gammacone.errors import EmptyGraphError
from gammacone.graphs import (
    Graph,
    VertexFunction,
    ball,
    completion,
    connected_components,
    is_connected,
    make_complete,
    make_cycle,
    make_hypercube,
    make_path,
    sphere,
)
from gammacone.rng import XorShift64Star

from _util import random_graph


class TestConstruction:
    def test_dedupes_and_orients_edges(self):
        g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.adjacency == ((1,), (0, 2), (1,))

    def test_rejects_loops(self):
        with pytest.raises(ValueError, match="loop"):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edges(2, [(0, 2)])

    def test_rejects_empty(self):
        with pytest.raises(EmptyGraphError):
            Graph.from_edges(0, [])

    def test_adjacency_symmetric(self):
        rng = XorShift64Star(5)
        for _ in range(20):
            g = random_graph(rng, 2 + rng.randrange(7))
            for u in range(g.n):
                for v in g.adjacency[u]:
                    assert u in g.adjacency[v]


class TestGenerators:
    def test_complete_single_vertex(self):
        assert make_complete(1).edges == ()

    def test_complete_triangle(self):
        g = make_complete(3)
        assert len(g.edges) == 3
        assert all(g.degree(v) == 2 for v in range(3))

    def test_complete_five(self):
        g = make_complete(5)
        assert len(g.edges) == 10
        assert g.d_max == 4

    def test_complete_rejects_zero(self):
        with pytest.raises(EmptyGraphError):
            make_complete(0)

    def test_cycle_four(self):
        g = make_cycle(4)
        assert len(g.edges) == 4
        assert all(g.degree(v) == 2 for v in range(4))

    def test_path_two_is_single_edge(self):
        assert make_path(2).edges == ((0, 1),)

    def test_hypercube_three(self):
        g = make_hypercube(3)
        assert g.n == 8
        assert len(g.edges) == 12
        assert all(g.degree(v) == 3 for v in range(8))

    @pytest.mark.parametrize("maker,bad", [(make_cycle, 2), (make_path, 1), (make_hypercube, 0)])
    def test_minimum_sizes(self, maker, bad):
        with pytest.raises(ValueError):
            maker(bad)


class TestCompletion:
    def test_idempotent_on_complete(self):
        assert completion(make_complete(3)).edges == make_complete(3).edges

    def test_path_three(self):
        assert completion(make_path(3)).edges == make_complete(3).edges

    def test_cycle_four(self):
        assert completion(make_cycle(4)).edges == make_complete(4).edges

    def test_edge_count(self):
        rng = XorShift64Star(11)
        for _ in range(10):
            n = 1 + rng.randrange(8)
            g = random_graph(rng, n)
            assert len(completion(g).edges) == n * (n - 1) // 2


class TestSphereBall:
    def test_triangle_unit_sphere(self):
        assert sphere(make_complete(3), 0, 1) == (1, 2)

    def test_radius_zero(self):
        assert sphere(make_path(4), 2, 0) == (2,)

    def test_path_two_steps(self):
        assert sphere(make_path(3), 0, 2) == (2,)

    def test_sphere_one_is_adjacency(self):
        rng = XorShift64Star(3)
        for _ in range(15):
            g = random_graph(rng, 2 + rng.randrange(7))
            for v in range(g.n):
                assert sphere(g, v, 1) == g.adjacency[v]

    def test_ball_is_disjoint_union_of_spheres(self):
        rng = XorShift64Star(4)
        for _ in range(15):
            g = random_graph(rng, 2 + rng.randrange(7))
            v = rng.randrange(g.n)
            for r in range(4):
                shells = [sphere(g, v, k) for k in range(r + 1)]
                assert sum(len(s) for s in shells) == len(ball(g, v, r))
                assert sorted(x for s in shells for x in s) == list(ball(g, v, r))

    def test_invalid_vertex(self):
        with pytest.raises(ValueError):
            sphere(make_path(3), 5, 1)


class TestConnectivity:
    def test_triangle_connected(self):
        assert is_connected(make_complete(3))

    def test_two_disjoint_edges(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert not is_connected(g)
        assert connected_components(g) == [(0, 1), (2, 3)]

    def test_single_vertex_connected(self):
        assert is_connected(make_complete(1))


class TestVertexFunction:
    def test_mean_zero_projection(self):
        f = VertexFunction([1.0, 2.0, 4.0])
        assert abs(f.mean_zero().average()) <= 1e-12

    def test_indicator(self):
        d = VertexFunction.indicator(4, 2)
        assert list(d.values) == [0.0, 0.0, 1.0, 0.0]
        assert d.average() == 0.25
