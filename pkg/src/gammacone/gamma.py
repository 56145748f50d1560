"""Graph Laplacian and the Bakry-Emery gradient forms.

The three operators, for a function f on the vertices and y ~ x meaning
adjacency:

    laplacian   Df(x)      = sum_{y~x} (f(y) - f(x))
    gamma1      G1(f,h)(x) = (1/2) sum_{y~x} (f(y)-f(x)) (h(y)-h(x))
    gamma2      G2(f,h)(x) = (1/2) [D G1(f,h)(x) - G1(Df,h)(x) - G1(f,Dh)(x)]

gamma2 is evaluated by composing the first two, so those definitions are
the single source of truth; the quadratic-form assemblers polarize them
on indicator pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, as_values, ball


def laplacian(g: Graph, f, x: int) -> float:
    x = g.check_vertex(x)
    v = as_values(f, g.n)
    fx = v[x]
    return float(sum(v[y] - fx for y in g.adjacency[x]))


def laplacian_vector(g: Graph, f) -> np.ndarray:
    """Df at every vertex."""
    v = as_values(f, g.n)
    out = np.empty(g.n)
    for x in range(g.n):
        fx = v[x]
        out[x] = sum(v[y] - fx for y in g.adjacency[x])
    return out


def gamma1(g: Graph, f, h, x: int) -> float:
    x = g.check_vertex(x)
    vf = as_values(f, g.n)
    vh = as_values(h, g.n)
    fx, hx = vf[x], vh[x]
    return 0.5 * float(sum((vf[y] - fx) * (vh[y] - hx) for y in g.adjacency[x]))


def gamma1_vector(g: Graph, f, h=None) -> np.ndarray:
    """G1(f,h) at every vertex; h defaults to f."""
    vf = as_values(f, g.n)
    vh = vf if h is None else as_values(h, g.n)
    out = np.empty(g.n)
    for x in range(g.n):
        fx, hx = vf[x], vh[x]
        out[x] = 0.5 * sum((vf[y] - fx) * (vh[y] - hx) for y in g.adjacency[x])
    return out


def gamma2(g: Graph, f, h, x: int) -> float:
    x = g.check_vertex(x)
    vf = as_values(f, g.n)
    vh = as_values(h, g.n)
    lf = laplacian_vector(g, vf)
    lh = laplacian_vector(g, vh)
    g1fh = gamma1_vector(g, vf, vh)
    return 0.5 * (
        laplacian(g, g1fh, x) - gamma1(g, lf, vh, x) - gamma1(g, vf, lh, x)
    )


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric bilinear form on functions restricted to a vertex support.

    Entry (i, j) of `matrix` is the form evaluated on the indicator pair
    (delta_{support[i]}, delta_{support[j]}).
    """

    support: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self):
        m = self.matrix
        if m.shape != (len(self.support), len(self.support)):
            raise ValueError("matrix shape does not match support size")
        scale = float(np.abs(m).max()) if m.size else 0.0
        if scale and float(np.abs(m - m.T).max()) > 1e-12 * scale:
            raise ValueError("quadratic form matrix is not symmetric")

    def restrict(self, f) -> np.ndarray:
        v = f.values if hasattr(f, "values") else np.asarray(f, dtype=float)
        return v[list(self.support)]

    def value(self, f) -> float:
        x = self.restrict(f)
        return float(x @ self.matrix @ x)

    def bilinear(self, f, h) -> float:
        return float(self.restrict(f) @ self.matrix @ self.restrict(h))

    def embedded(self, support: tuple[int, ...]) -> "QuadraticForm":
        """Same form on a larger support, zero-padded."""
        index = {v: i for i, v in enumerate(support)}
        m = np.zeros((len(support), len(support)))
        for i, u in enumerate(self.support):
            for j, v in enumerate(self.support):
                m[index[u], index[v]] = self.matrix[i, j]
        return QuadraticForm(tuple(support), m)


def laplacian_matrix(g: Graph) -> QuadraticForm:
    """Combinatorial Laplacian D - A on the full vertex set.

    Positive semidefinite with the constants in its kernel; its quadratic
    form equals both sum_y G1(f)(y) and -sum_y f(y) Df(y).
    """
    m = np.zeros((g.n, g.n))
    for u, v in g.edges:
        m[u, u] += 1.0
        m[v, v] += 1.0
        m[u, v] -= 1.0
        m[v, u] -= 1.0
    return QuadraticForm(tuple(range(g.n)), m)


def _polarized_form(g: Graph, x: int, radius: int, op) -> QuadraticForm:
    support = ball(g, x, radius)
    k = len(support)
    basis = []
    for u in support:
        e = np.zeros(g.n)
        e[u] = 1.0
        basis.append(e)
    m = np.zeros((k, k))
    for i in range(k):
        for j in range(i, k):
            m[i, j] = m[j, i] = op(g, basis[i], basis[j], x)
    return QuadraticForm(support, m)


def gamma1_form(g: Graph, x: int) -> QuadraticForm:
    """G1 at x as a form on the radius-1 ball around x."""
    return _polarized_form(g, g.check_vertex(x), 1, gamma1)


def gamma2_form(g: Graph, x: int) -> QuadraticForm:
    """G2 at x as a form on the radius-2 ball; entries outside are zero."""
    return _polarized_form(g, g.check_vertex(x), 2, gamma2)


def delta_coefficients(g: Graph, x: int, support: tuple[int, ...]) -> np.ndarray:
    """Coefficient vector of the linear functional f -> Df(x) on `support`."""
    q = np.zeros(len(support))
    for i, u in enumerate(support):
        if u == x:
            q[i] = -g.degree(x)
        elif g.has_edge(u, x):
            q[i] = 1.0
    return q


def divergence_check(g: Graph, f) -> tuple[float, float]:
    """Both sides of sum_y G1(f)(y) = -sum_y f(y) Df(y)."""
    v = as_values(f, g.n)
    lhs = float(gamma1_vector(g, v).sum())
    rhs = -float((v * laplacian_vector(g, v)).sum())
    return lhs, rhs
