"""Exhaustive graph enumeration up to isomorphism, for audit corpora.

Graphs on n vertices are generated by extending every (n-1)-vertex
graph with one new vertex over all 2^(n-1) attachments and deduplicating
by a canonical key: the minimum packed upper-triangle adjacency
bitstring over relabelings that respect the 1-dimensional
Weisfeiler-Leman color classes.  The canonical search is one of the
compiled kernels; its cost dominates exhaustive audits at n = 8
(1044 x 128 candidate extensions).
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, is_connected
from . import _kernels


def wl_colors(n: int, adj_masks) -> tuple[int, ...]:
    """Iterated neighborhood-multiset colors (1-WL), isomorphism-invariant ids."""
    neighbors = [
        [u for u in range(n) if adj_masks[v] >> u & 1] for v in range(n)
    ]
    colors = [len(nb) for nb in neighbors]
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ranks[c] for c in colors]
    for _ in range(n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in neighbors[v])))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [ranks[s] for s in sigs]
        if refined == colors:
            break
        colors = refined
    return tuple(colors)


def canonical_key(n: int, adj_masks) -> int:
    """Canonical upper-triangle bitstring; equal iff graphs are isomorphic."""
    colors = wl_colors(n, adj_masks)
    return _kernels.canon_key(list(adj_masks), list(colors), sorted(colors), n)


def graph_canonical_key(g: Graph) -> int:
    return canonical_key(g.n, g.adj_masks)


def masks_from_key(n: int, key: int) -> list[int]:
    """Decode a packed upper-triangle bitstring back to adjacency masks."""
    total = n * (n - 1) // 2
    masks = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            if key >> (total - 1 - t) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            t += 1
    return masks


def graph_from_key(n: int, key: int) -> Graph:
    masks = masks_from_key(n, key)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if masks[i] >> j & 1
    ]
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _graph_keys(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("enumeration needs n >= 1")
    if n == 1:
        return (0,)
    out: set[int] = set()
    for key in _graph_keys(n - 1):
        base = masks_from_key(n - 1, key)
        for attach in range(1 << (n - 1)):
            masks = [
                base[v] | ((attach >> v & 1) << (n - 1)) for v in range(n - 1)
            ]
            masks.append(attach)
            out.add(canonical_key(n, masks))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _connected_keys(n: int) -> tuple[int, ...]:
    return tuple(
        k for k in _graph_keys(n) if is_connected(graph_from_key(n, k))
    )


def all_graphs(n: int) -> list[Graph]:
    """Every graph on n vertices, one per isomorphism class, key order."""
    return [graph_from_key(n, k) for k in _graph_keys(n)]


def connected_graphs(n: int) -> list[Graph]:
    """Every connected graph on n vertices up to isomorphism, key order."""
    return [graph_from_key(n, k) for k in _connected_keys(n)]


def count_graphs(n: int) -> int:
    return len(_graph_keys(n))


def count_connected_graphs(n: int) -> int:
    return len(_connected_keys(n))
