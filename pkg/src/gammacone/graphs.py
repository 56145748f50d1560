"""Finite simple undirected graphs and functions on their vertices.

Vertices are dense integer ids 0..n-1 so vertex functions and quadratic
forms index straight into arrays.  Graphs are immutable once built; all
queries are pure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DisconnectedGraphError, EmptyGraphError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    `edges` holds each edge once as (u, v) with u < v, `adjacency` the
    sorted neighbor lists, and `adj_masks` the same neighborhoods as
    bitmasks for the enumeration and Cheeger kernels.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    adj_masks: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n <= 0:
            raise EmptyGraphError("a graph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop edge at vertex {u} is not allowed")
            seen.add((u, v) if u < v else (v, u))
        ordered = tuple(sorted(seen))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in ordered:
            nbrs[u].append(v)
            nbrs[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(
            n=n,
            edges=ordered,
            adjacency=tuple(tuple(sorted(a)) for a in nbrs),
            adj_masks=tuple(masks),
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def d_max(self) -> int:
        return max(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return self.adj_masks[u] >> v & 1 == 1

    def check_vertex(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for {self.n} vertices")
        return v


def make_complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n <= 0:
        raise EmptyGraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def make_cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_path(n: int) -> Graph:
    """Path P_n, n >= 2."""
    if n < 2:
        raise ValueError("path needs n >= 2")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_hypercube(d: int) -> Graph:
    """Hypercube graph Q_d on 2^d vertices, d >= 1."""
    if d < 1:
        raise ValueError("hypercube needs dimension d >= 1")
    n = 1 << d
    return Graph.from_edges(
        n, ((v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b))
    )


def completion(g: Graph) -> Graph:
    """Complete graph on the same vertex set."""
    return make_complete(g.n)


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    source = g.check_vertex(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def sphere(g: Graph, center: int, radius: int) -> tuple[int, ...]:
    """Vertices at graph distance exactly `radius` from `center`."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    dist = bfs_distances(g, center)
    return tuple(sorted(v for v, d in dist.items() if d == radius))


def ball(g: Graph, center: int, radius: int) -> tuple[int, ...]:
    """Vertices at graph distance at most `radius` from `center`."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    dist = bfs_distances(g, center)
    return tuple(sorted(v for v, d in dist.items() if d <= radius))


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(bfs_distances(g, 0)) == g.n


def require_connected(g: Graph, context: str = "") -> None:
    """Entry-point guard used by the curvature and spectral routines."""
    comps = connected_components(g)
    if len(comps) > 1:
        raise DisconnectedGraphError(comps, context)


class VertexFunction:
    """Real-valued function on the vertices of an n-vertex graph."""

    __slots__ = ("values",)

    def __init__(self, values: Sequence[float]):
        self.values = np.asarray(values, dtype=float)
        if self.values.ndim != 1:
            raise ValueError("vertex function must be a flat vector")

    @classmethod
    def indicator(cls, n: int, r: int) -> "VertexFunction":
        v = np.zeros(n)
        v[r] = 1.0
        return cls(v)

    def __len__(self) -> int:
        return len(self.values)

    def average(self) -> float:
        return float(self.values.mean())

    def mean_zero(self) -> "VertexFunction":
        return VertexFunction(self.values - self.values.mean())


def as_values(f, n: int) -> np.ndarray:
    """Coerce a VertexFunction or sequence to a length-n float vector."""
    v = f.values if isinstance(f, VertexFunction) else np.asarray(f, dtype=float)
    if v.shape != (n,):
        raise ValueError(f"vertex function has length {v.shape}, graph has {n} vertices")
    return v
