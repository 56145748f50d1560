"""Graph enumeration against independent counting oracles.

Totals come from the cycle-index count over the pair action of S_n
(computed here from scratch); connected totals follow by inverting the
Euler transform.  Small sizes are additionally brute-forced by orbiting
every adjacency mask under all permutations.
"""

import math
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from gammacone.enumeration import (
    all_graphs,
    canonical_key,
    connected_graphs,
    count_connected_graphs,
    count_graphs,
    graph_canonical_key,
)
from gammacone.graphs import Graph, is_connected, make_cycle
from gammacone.rng import XorShift64Star

from _util import random_graph


def _partitions(n, smallest=1):
    if n == 0:
        yield ()
        return
    for part in range(smallest, n + 1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def pair_orbit_count(parts) -> int:
    q = sum(p // 2 for p in parts)
    q += sum(math.gcd(a, b) for a, b in combinations(parts, 2))
    return q


def polya_graph_count(n: int) -> int:
    """Number of graphs on n unlabeled vertices, by Burnside over S_n."""
    total = Fraction(0)
    for parts in _partitions(n):
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        stabilizer = 1
        for k, m in counts.items():
            stabilizer *= k**m * math.factorial(m)
        total += Fraction(2**pair_orbit_count(parts), stabilizer)
    assert total.denominator == 1
    return int(total)


def _mobius(n: int) -> int:
    result, m = 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def connected_counts_from_totals(totals: list[int]) -> list[int]:
    """Invert the Euler transform: totals[i] counts graphs on i+1 vertices."""
    n_max = len(totals)
    a = [1] + totals
    b = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        b[n] = n * a[n] - sum(b[k] * a[n - k] for k in range(1, n))
    c = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        c[n] = sum(_mobius(n // d) * b[d] for d in range(1, n + 1) if n % d == 0) // n
    return c[1:]


def _orbit_min(n: int, edges) -> tuple:
    return min(
        tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        for perm in permutations(range(n))
    )


def brute_force_class_count(n: int, connected_only: bool = False) -> int:
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if connected_only and not is_connected(Graph.from_edges(n, edges)):
            continue
        seen.add(_orbit_min(n, edges))
    return len(seen)


class TestCounts:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_totals_match_cycle_index(self, n):
        assert count_graphs(n) == polya_graph_count(n)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_connected_match_euler_inverse(self, n):
        totals = [polya_graph_count(k) for k in range(1, n + 1)]
        assert count_connected_graphs(n) == connected_counts_from_totals(totals)[-1]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_brute_force_small(self, n):
        assert count_graphs(n) == brute_force_class_count(n)
        assert count_connected_graphs(n) == brute_force_class_count(n, connected_only=True)


class TestCanonicalKey:
    def test_invariant_under_relabeling(self):
        rng = XorShift64Star(61)
        for _ in range(60):
            n = 2 + rng.randrange(7)
            g = random_graph(rng, n)
            perm = list(range(n))
            for i in range(n - 1, 0, -1):
                j = rng.randrange(i + 1)
                perm[i], perm[j] = perm[j], perm[i]
            relabeled = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in g.edges])
            assert graph_canonical_key(g) == graph_canonical_key(relabeled)

    def test_separates_small_classes(self):
        n = 4
        pairs = list(combinations(range(n), 2))
        by_key: dict[int, set] = {}
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            key = graph_canonical_key(Graph.from_edges(n, edges))
            by_key.setdefault(key, set()).add(_orbit_min(n, edges))
        # one orbit per key and one key per orbit
        assert all(len(orbits) == 1 for orbits in by_key.values())
        assert len(by_key) == 11

    def test_size_cap(self):
        with pytest.raises(ValueError, match="11"):
            canonical_key(12, [0] * 12)


class TestListings:
    def test_deterministic_order(self):
        first = [g.edges for g in connected_graphs(5)]
        second = [g.edges for g in connected_graphs(5)]
        assert first == second

    def test_members_are_connected_and_distinct(self):
        graphs = connected_graphs(6)
        assert len(graphs) == 112
        keys = {graph_canonical_key(g) for g in graphs}
        assert len(keys) == 112
        assert all(is_connected(g) for g in graphs)

    def test_all_graphs_contains_named_members(self):
        keys = {graph_canonical_key(g) for g in all_graphs(4)}
        assert graph_canonical_key(make_cycle(4)) in keys
