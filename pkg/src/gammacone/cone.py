"""Cones over graphs and their closed-form operator calculus.

The full cone C(G) adds an apex vertex adjacent to every vertex of G;
a partial cone C(X, G) joins the apex only to X.  For a function f on
the cone with f(apex) = 0, every cone operator evaluates in closed form
from base-graph data.  With S1 the apex neighborhood, "y in S1 ~ x"
ranging over base neighbors of x inside S1, and deg_c(x) = deg(x) + 1
the cone degree of x in S1:

  cone laplacian     apex: sum_{S1} f(y)
                     x in S1: Df(x) - f(x)

  cone gamma1        apex: (1/2) sum_{S1} f(y)^2
                     x in S1: G1(f)(x) + f(x)^2 / 2

  gamma1(f, cone laplacian f)
                     apex: (1/2) sum_{S1} f Df - (1/2) sum_{S1} f^2
                           - (1/2) (sum_{S1} f)^2
                     x in S1: G1(f, Df)(x) - (1/2) sum_{S1~x} (f(y)-f(x))^2
                           + (1/2) f(x) sum_{y~x, y not in S1} (f(y)-f(x))
                           - (1/2) f(x) sum_{S1} f + (1/2) f(x) Df(x)
                           - (1/2) f(x)^2

  cone laplacian of cone gamma1
                     apex: sum_{S1} G1(f)(y) - ((|S1|-1)/2) sum_{S1} f^2
                     x in S1: DG1(f)(x) - G1(f)(x)
                           + (1/2) [sum_{S1~x} f^2 + sum_{S1} f^2]
                           - (1/2) deg_c(x) f(x)^2

  cone gamma2        apex: (1/2) sum_{S1} G1(f) - (1/2) sum_{S1} f Df
                           - ((|S1|-3)/4) sum_{S1} f^2 + (1/2)(sum_{S1} f)^2
                     x in S1: G2(f)(x) - (1/2) G1(f)(x)
                           + (1/2) sum_{S1~x} (f(y)-f(x))^2
                           + (1/4) [sum_{S1~x} f^2 - deg_c(x) f(x)^2]
                           - (1/2) f(x) Df(x)
                           - (1/2) f(x) sum_{y~x, y not in S1} (f(y)-f(x))
                           + (1/4) sum_{S1} f^2 + (1/2) f(x)^2
                           + (1/2) f(x) sum_{S1} f

Vertices outside S1 and the apex fall through to the x-in-sphere-2 case,
whose correction terms vanish when no neighbor lies in S1.  Every branch
is pinned by the randomized direct-computation oracle
(verify_cone_lemmas), which rebuilds the cone as a plain graph and
evaluates the operators from their definitions.

On the full cone the gamma2 branch for x ~ apex simplifies to

    G2(f)(x) + G1(f)(x) + (1/4) sum f^2 + (1/4) f(x)^2
    + (1/2) f(x) sum f.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graphs import Graph, as_values
from .gamma import (
    gamma1,
    gamma1_vector,
    gamma2,
    laplacian,
    laplacian_vector,
)
from .rng import XorShift64Star, random_values


@dataclass(frozen=True)
class ConeGraph:
    """A base graph, an apex vertex (id = base.n), and the joined graph."""

    base: Graph
    apex: int
    apex_set: tuple[int, ...]
    graph: Graph

    @property
    def apex_mask(self) -> int:
        m = 0
        for v in self.apex_set:
            m |= 1 << v
        return m

    def is_full(self) -> bool:
        return len(self.apex_set) == self.base.n


def partial_cone(g: Graph, x_set: Iterable[int]) -> ConeGraph:
    """Join a new apex to the vertices in x_set (nonempty)."""
    xs = tuple(sorted({g.check_vertex(v) for v in x_set}))
    if not xs:
        raise ValueError("partial cone needs a nonempty apex neighborhood")
    apex = g.n
    joined = Graph.from_edges(
        g.n + 1, list(g.edges) + [(v, apex) for v in xs]
    )
    return ConeGraph(base=g, apex=apex, apex_set=xs, graph=joined)


def full_cone(g: Graph) -> ConeGraph:
    """Join a new apex to every vertex."""
    return partial_cone(g, range(g.n))


def extend_to_cone(c: ConeGraph, f) -> np.ndarray:
    """Base function extended to the cone with value 0 at the apex."""
    v = as_values(f, c.base.n)
    return np.append(v, 0.0)


def apex_normalized(c: ConeGraph, f_cone) -> np.ndarray:
    """Restrict a cone function to the base after shifting f(apex) to 0."""
    v = as_values(f_cone, c.graph.n)
    return v[: c.base.n] - v[c.apex]


def _check_cone_vertex(c: ConeGraph, x: int) -> int:
    return c.graph.check_vertex(x)


def cone_laplacian(c: ConeGraph, f, x: int) -> float:
    x = _check_cone_vertex(c, x)
    v = as_values(f, c.base.n)
    if x == c.apex:
        return float(sum(v[y] for y in c.apex_set))
    base_val = laplacian(c.base, v, x)
    if x in c.apex_set:
        return base_val - float(v[x])
    return base_val


def cone_gamma1(c: ConeGraph, f, x: int) -> float:
    x = _check_cone_vertex(c, x)
    v = as_values(f, c.base.n)
    if x == c.apex:
        return 0.5 * float(sum(v[y] ** 2 for y in c.apex_set))
    base_val = gamma1(c.base, v, v, x)
    if x in c.apex_set:
        return base_val + 0.5 * float(v[x]) ** 2
    return base_val


def cone_gamma1_f_deltaf(c: ConeGraph, f, x: int) -> float:
    """G1(f, cone laplacian of f) at x, in closed form."""
    x = _check_cone_vertex(c, x)
    v = as_values(f, c.base.n)
    xs = set(c.apex_set)
    if x == c.apex:
        lf = laplacian_vector(c.base, v)
        s_fdf = sum(v[y] * lf[y] for y in c.apex_set)
        s_f2 = sum(v[y] ** 2 for y in c.apex_set)
        s_f = sum(v[y] for y in c.apex_set)
        return float(0.5 * s_fdf - 0.5 * s_f2 - 0.5 * s_f * s_f)
    lf = laplacian_vector(c.base, v)
    base_val = gamma1(c.base, v, lf, x)
    fx = float(v[x])
    if x in xs:
        near = [y for y in c.base.adjacency[x] if y in xs]
        far = [y for y in c.base.adjacency[x] if y not in xs]
        return float(
            base_val
            - 0.5 * sum((v[y] - fx) ** 2 for y in near)
            + 0.5 * fx * sum(v[y] - fx for y in far)
            - 0.5 * fx * sum(v[y] for y in c.apex_set)
            + 0.5 * fx * lf[x]
            - 0.5 * fx * fx
        )
    near = [y for y in c.base.adjacency[x] if y in xs]
    return float(base_val - 0.5 * sum(v[y] * (v[y] - fx) for y in near))


def cone_delta_gamma1(c: ConeGraph, f, x: int) -> float:
    """Cone laplacian applied to the cone gamma1 of f, in closed form."""
    x = _check_cone_vertex(c, x)
    v = as_values(f, c.base.n)
    xs = set(c.apex_set)
    g1 = gamma1_vector(c.base, v)
    if x == c.apex:
        k = len(c.apex_set)
        return float(
            sum(g1[y] for y in c.apex_set)
            - 0.5 * (k - 1) * sum(v[y] ** 2 for y in c.apex_set)
        )
    base_val = laplacian(c.base, g1, x)
    fx = float(v[x])
    near = [y for y in c.base.adjacency[x] if y in xs]
    if x in xs:
        deg_cone = c.base.degree(x) + 1
        return float(
            base_val
            - g1[x]
            + 0.5 * (sum(v[y] ** 2 for y in near) + sum(v[y] ** 2 for y in c.apex_set))
            - 0.5 * deg_cone * fx * fx
        )
    return float(base_val + 0.5 * sum(v[y] ** 2 for y in near))


def cone_gamma2(c: ConeGraph, f, x: int) -> float:
    """Iterated gradient form on the cone, in closed form."""
    x = _check_cone_vertex(c, x)
    v = as_values(f, c.base.n)
    xs = set(c.apex_set)
    if x == c.apex:
        lf = laplacian_vector(c.base, v)
        g1 = gamma1_vector(c.base, v)
        k = len(c.apex_set)
        s_f = sum(v[y] for y in c.apex_set)
        return float(
            0.5 * sum(g1[y] for y in c.apex_set)
            - 0.5 * sum(v[y] * lf[y] for y in c.apex_set)
            - 0.25 * (k - 3) * sum(v[y] ** 2 for y in c.apex_set)
            + 0.5 * s_f * s_f
        )
    fx = float(v[x])
    if c.is_full() and x in xs:
        return float(
            gamma2(c.base, v, v, x)
            + gamma1(c.base, v, v, x)
            + 0.25 * float(v @ v)
            + 0.25 * fx * fx
            + 0.5 * fx * float(v.sum())
        )
    base_g2 = gamma2(c.base, v, v, x)
    near = [y for y in c.base.adjacency[x] if y in xs]
    if x in xs:
        far = [y for y in c.base.adjacency[x] if y not in xs]
        lfx = laplacian(c.base, v, x)
        deg_cone = c.base.degree(x) + 1
        return float(
            base_g2
            - 0.5 * gamma1(c.base, v, v, x)
            + 0.5 * sum((v[y] - fx) ** 2 for y in near)
            + 0.25 * (sum(v[y] ** 2 for y in near) - deg_cone * fx * fx)
            - 0.5 * fx * lfx
            - 0.5 * fx * sum(v[y] - fx for y in far)
            + 0.25 * sum(v[y] ** 2 for y in c.apex_set)
            + 0.5 * fx * fx
            + 0.5 * fx * sum(v[y] for y in c.apex_set)
        )
    return float(
        base_g2
        + 0.75 * sum(v[y] ** 2 for y in near)
        - 0.5 * fx * sum(v[y] for y in near)
    )


# direct counterparts, evaluated on the assembled cone graph


def cone_laplacian_direct(c: ConeGraph, f, x: int) -> float:
    return laplacian(c.graph, extend_to_cone(c, f), x)


def cone_gamma1_direct(c: ConeGraph, f, x: int) -> float:
    fc = extend_to_cone(c, f)
    return gamma1(c.graph, fc, fc, x)


def cone_gamma1_f_deltaf_direct(c: ConeGraph, f, x: int) -> float:
    fc = extend_to_cone(c, f)
    return gamma1(c.graph, fc, laplacian_vector(c.graph, fc), x)


def cone_delta_gamma1_direct(c: ConeGraph, f, x: int) -> float:
    fc = extend_to_cone(c, f)
    return laplacian(c.graph, gamma1_vector(c.graph, fc), x)


def cone_gamma2_direct(c: ConeGraph, f, x: int) -> float:
    fc = extend_to_cone(c, f)
    return gamma2(c.graph, fc, fc, x)


_ORACLE_PAIRS = (
    ("cone_laplacian", cone_laplacian, cone_laplacian_direct),
    ("cone_gamma1", cone_gamma1, cone_gamma1_direct),
    ("cone_gamma1_f_deltaf", cone_gamma1_f_deltaf, cone_gamma1_f_deltaf_direct),
    ("cone_delta_gamma1", cone_delta_gamma1, cone_delta_gamma1_direct),
    ("cone_gamma2", cone_gamma2, cone_gamma2_direct),
)


def verify_cone_lemmas(
    g: Graph, rng: XorShift64Star, trials: int = 8
) -> dict[str, float]:
    """Max |closed form - direct| per operator over random apex sets and f.

    The direct side rebuilds the cone as an ordinary graph and evaluates
    the operator definitions there, so the two routes share no code path
    beyond the base-graph primitives.
    """
    worst = {name: 0.0 for name, _, _ in _ORACLE_PAIRS}
    for _ in range(trials):
        mask = rng.randrange((1 << g.n) - 1) + 1
        xs = [v for v in range(g.n) if mask >> v & 1]
        c = partial_cone(g, xs)
        f = np.array(random_values(rng, g.n))
        for x in range(c.graph.n):
            for name, closed, direct in _ORACLE_PAIRS:
                d = abs(closed(c, f, x) - direct(c, f, x))
                if d > worst[name]:
                    worst[name] = d
        # full cone exercises the simplified gamma2 branch
        cf = full_cone(g)
        for x in range(cf.graph.n):
            d = abs(cone_gamma2(cf, f, x) - cone_gamma2_direct(cf, f, x))
            if d > worst["cone_gamma2"]:
                worst["cone_gamma2"] = d
    return worst


@dataclass(frozen=True)
class ConeLiftReport:
    """Pointwise curvature of the full cone at base vertices, vs the base.

    `base_curvature` is the dimensionless curvature K of the base graph.
    When K <= 1/2, `pointwise` holds the cone's pointwise curvature at
    every base vertex and the two candidate gains are recorded:
    `clears_half` (min >= K + 1/2) and `clears_one` (min >= K + 1).
    Neither is asserted anywhere; they are observations.
    """

    hypothesis_met: bool
    base_curvature: float
    pointwise: dict[int, float] = field(default_factory=dict)
    min_pointwise: float | None = None
    clears_half: bool | None = None
    clears_one: bool | None = None


def verify_cone_lift(g: Graph, tol: float = 1e-9) -> ConeLiftReport:
    """Compare curvature at base vertices of the full cone with the base's."""
    from .curvature import DimensionParam, ric_pointwise, ric_uniform

    if g.n < 2:
        raise ValueError(
            "cone lift audit needs at least two vertices (pointwise "
            "curvature is undefined at an isolated vertex)"
        )
    inf = DimensionParam.infinity()
    base = ric_uniform(g, inf)
    k = base.value
    if k > 0.5:
        return ConeLiftReport(hypothesis_met=False, base_curvature=k)
    c = full_cone(g)
    pointwise = {
        x: ric_pointwise(c.graph, x, inf).value for x in range(g.n)
    }
    mn = min(pointwise.values())
    return ConeLiftReport(
        hypothesis_met=True,
        base_curvature=k,
        pointwise=pointwise,
        min_pointwise=mn,
        clears_half=mn >= k + 0.5 - tol,
        clears_one=mn >= k + 1.0 - tol,
    )
