"""Symmetric eigensolver, spectral gap, and exact isoperimetric audits.

lambda1 in this package always means the second-smallest eigenvalue of
the combinatorial Laplacian L = D - A.  Some published inequalities in
this area are stated under the doubled convention lambda1' = 2 lambda1
(reading the Rayleigh quotient with |grad f|^2 = 2 sum G1); wherever a
bound's constants require that reading, both variants are evaluated and
reported, and nothing is rescaled silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import DisconnectedGraphError
from .graphs import Graph, connected_components, require_connected
from .gamma import laplacian_matrix

_MAX_EIG_DIM = 256
_MAX_CHEEGER_N = 20


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues ascending, orthonormal eigenvectors as matching columns."""

    values: np.ndarray
    vectors: np.ndarray


def eigensolve_symmetric(m) -> EigenSystem:
    """Full eigendecomposition by cyclic Jacobi rotations.

    Sweeps run in row-major upper-triangle order until every
    off-diagonal entry is at most 1e-12 times the largest input entry.
    Rejects asymmetric input and dimensions above 256.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("eigensolver needs a square matrix")
    n = a.shape[0]
    if n > _MAX_EIG_DIM:
        raise ValueError(f"eigensolver dimension cap is {_MAX_EIG_DIM}, got {n}")
    scale = float(np.abs(a).max()) if a.size else 0.0
    if scale and float(np.abs(a - a.T).max()) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    work = np.ascontiguousarray(0.5 * (a + a.T))
    vecs = np.eye(n)
    sweeps = _kernels.jacobi_eigh(work, vecs, 1e-12 * scale, 100)
    if sweeps < 0:
        raise ArithmeticError("Jacobi iteration did not converge in 100 sweeps")
    diag = np.diag(work).copy()
    order = np.argsort(diag, kind="stable")
    values = diag[order]
    vectors = vecs[:, order]
    for j in range(n):
        col = vectors[:, j]
        peak = float(np.abs(col).max())
        if peak == 0.0:
            continue
        for x in col:
            if abs(x) > 1e-12 * peak:
                if x < 0:
                    vectors[:, j] = -col
                break
    return EigenSystem(values=values, vectors=vectors)


@dataclass(frozen=True)
class SpectralResult:
    """Laplacian spectrum of a graph with the spectral gap singled out."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    lambda1: float


def laplacian_spectrum(g: Graph) -> SpectralResult:
    comps = connected_components(g)
    if len(comps) > 1:
        raise DisconnectedGraphError(comps, "Laplacian spectral gap")
    if g.n < 2:
        raise ValueError("spectral gap needs at least two vertices")
    eig = eigensolve_symmetric(laplacian_matrix(g).matrix)
    return SpectralResult(
        eigenvalues=eig.values,
        eigenvectors=eig.vectors,
        lambda1=float(eig.values[1]),
    )


@lru_cache(maxsize=None)
def _lambda1_cached(g: Graph) -> float:
    return laplacian_spectrum(g).lambda1


def lambda1(g: Graph) -> float:
    """Second-smallest eigenvalue of L = D - A (the spectral gap).

    Graphs are immutable, so values are memoized; audit batteries ask
    for the same gap under several dimension parameters.
    """
    return _lambda1_cached(g)


@dataclass(frozen=True)
class CheegerResult:
    """Exact isoperimetric constant with its minimizing subset.

    h = h_num / h_den where h_num = |boundary(F)| and h_den = |F| for
    the lexicographically smallest minimizing F with |F| <= n/2.
    """

    h_num: int
    h_den: int
    h: Fraction
    witness: tuple[int, ...]


@lru_cache(maxsize=None)
def cheeger(g: Graph) -> CheegerResult:
    """Exact Cheeger constant by enumerating all subsets up to size n/2.

    Capped at 20 vertices; beyond that the exact enumeration is refused
    outright rather than silently approximated.  Results are memoized
    (the result is immutable and the scan is the expensive part).
    """
    require_connected(g, "Cheeger constant")
    if g.n < 2:
        raise ValueError("Cheeger constant needs at least two vertices")
    if g.n > _MAX_CHEEGER_N:
        raise ValueError(
            f"exact enumeration infeasible: {g.n} vertices exceeds the cap of {_MAX_CHEEGER_N}"
        )
    num, den, mask = _kernels.cheeger_scan(list(g.adj_masks), g.n)
    witness = tuple(v for v in range(g.n) if mask >> v & 1)
    return CheegerResult(h_num=num, h_den=den, h=Fraction(num, den), witness=witness)


@dataclass(frozen=True)
class DamReport:
    """Both sides of lambda1/2 <= h(G) <= sqrt(2 d_max lambda1)."""

    lambda1: float
    h: Fraction
    d_max: int
    lower_lhs: float
    lower_ok: bool
    upper_rhs: float
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def verify_dam(g: Graph, tol: float = 1e-9) -> DamReport:
    """Check the isoperimetric two-sided bound on the spectral gap."""
    lam = lambda1(g)
    ch = cheeger(g)
    h = float(ch.h)
    upper = math.sqrt(2.0 * g.d_max * lam)
    return DamReport(
        lambda1=lam,
        h=ch.h,
        d_max=g.d_max,
        lower_lhs=lam / 2.0,
        lower_ok=lam / 2.0 <= h + tol,
        upper_rhs=upper,
        upper_ok=h <= upper + tol,
    )


@dataclass(frozen=True)
class GapReport:
    """Spectral-gap consequences of the conical curvature bound.

    `ok_gap_derived` checks lambda1(L) >= (2K + n - 3)/4, the form the
    energy inequality itself forces; `ok_gap_doubled` is the same bound
    under the doubled-gap convention (2 lambda1 >= K + (n-3)/2), which
    is algebraically equivalent.

    The isoperimetric consequences (for N >= 2) come in two variants.
    Applying the energy inequality to subset indicators yields

        h >= (2n + 2NK - 3N) / (4N)                (derived)

    which is a theorem; the circulating printed constant

        h >= (2n + 4NK + Nn - 6N) / (8N)           (printed)

    exceeds it by n(N-2)/(8N) and is false in general for N > 2 (the
    4-cycle at N = infinity has h = 1 against a printed bound of 1.5),
    so it is recorded, never asserted.  Squaring an h bound gives a
    lambda1 bound only when it is nonnegative; `lambda1_derivable`
    flags that, and `ok_lambda1_derived` is vacuously true otherwise.
    """

    k: float
    n: int
    lam1: float
    gap_bound: float
    ok_gap_derived: bool
    ok_gap_doubled: bool
    applicable_isoperimetric: bool
    h: Fraction | None = None
    h_bound_derived: float | None = None
    ok_h_derived: bool | None = None
    h_bound_printed: float | None = None
    ok_h_printed: bool | None = None
    lambda1_bound_derived: float | None = None
    lambda1_derivable: bool | None = None
    ok_lambda1_derived: bool | None = None
    lambda1_bound_printed: float | None = None
    ok_lambda1_printed: bool | None = None


def verify_ccd_spectral_gap(g: Graph, n_param, tol: float = 1e-9) -> GapReport:
    """Audit the gap and isoperimetric bounds implied by conical curvature."""
    from .curvature import cric

    require_connected(g, "spectral gap audit")
    n = g.n
    k = cric(g, n_param).value
    lam = lambda1(g)
    gap_bound = (2.0 * k + n - 3.0) / 4.0
    ok_derived = lam >= gap_bound - tol
    ok_doubled = 2.0 * lam >= k + (n - 3.0) / 2.0 - tol
    applicable = n_param.is_infinite or n_param.value >= 2.0
    if not applicable or n > _MAX_CHEEGER_N:
        return GapReport(
            k=k, n=n, lam1=lam, gap_bound=gap_bound,
            ok_gap_derived=ok_derived, ok_gap_doubled=ok_doubled,
            applicable_isoperimetric=False,
        )
    ch = cheeger(g)
    h = float(ch.h)
    inv = n_param.inv
    h_derived = (2.0 * n * inv + 2.0 * k - 3.0) / 4.0
    h_printed = (2.0 * n * inv + 4.0 * k + n - 6.0) / 8.0
    lam_derived = h_derived * h_derived / (2.0 * g.d_max)
    lam_printed = h_printed * h_printed / (2.0 * g.d_max)
    derivable = h_derived >= 0.0
    return GapReport(
        k=k, n=n, lam1=lam, gap_bound=gap_bound,
        ok_gap_derived=ok_derived, ok_gap_doubled=ok_doubled,
        applicable_isoperimetric=True,
        h=ch.h,
        h_bound_derived=h_derived,
        ok_h_derived=h >= h_derived - tol,
        h_bound_printed=h_printed,
        ok_h_printed=h >= h_printed - tol,
        lambda1_bound_derived=lam_derived,
        lambda1_derivable=derivable,
        ok_lambda1_derived=(not derivable) or lam >= lam_derived - tol,
        lambda1_bound_printed=lam_printed,
        ok_lambda1_printed=lam >= lam_printed - tol,
    )


@dataclass(frozen=True)
class GapToCcdReport:
    """Conical curvature recovered from a spectral-gap lower bound.

    Given lambda1 >= lam (with lam measured against the doubled-gap cap
    2 lambda1(L)), the admissible parameters are N >= 2n/(n - lam) and
    K up to (2 lam - n + 3)/2; `verified` checks the latter against the
    exact conical curvature at the threshold N.  `k_printed` is the
    weaker constant (lam - n + 3)/2 that also circulates; whether the
    curvature condition holds there is recorded as `printed_holds`.
    """

    lam: float
    n_threshold: float | None
    n_threshold_defined: bool
    k_derived: float
    verified: bool
    cric_at_threshold: float | None
    k_printed: float
    printed_holds: bool | None


def ccd_from_gap(g: Graph, lam: float, tol: float = 1e-9) -> GapToCcdReport:
    """Turn a spectral-gap lower bound into a conical curvature bound."""
    from .curvature import DimensionParam, cric

    require_connected(g, "gap-to-curvature conversion")
    n = g.n
    lam = float(lam)
    lam_cap = 2.0 * lambda1(g)
    if not 0.0 < lam <= lam_cap + tol:
        raise ValueError(
            f"gap bound {lam} outside (0, 2*lambda1] = (0, {lam_cap!r}]"
        )
    k_derived = (2.0 * lam - n + 3.0) / 2.0
    k_printed = (lam - n + 3.0) / 2.0
    if lam > n + tol:
        return GapToCcdReport(
            lam=lam, n_threshold=None, n_threshold_defined=False,
            k_derived=k_derived, verified=False, cric_at_threshold=None,
            k_printed=k_printed, printed_holds=None,
        )
    if abs(lam - n) <= tol:
        npar = DimensionParam.infinity()
        n_threshold = float("inf")
    else:
        n_threshold = 2.0 * n / (n - lam)
        npar = DimensionParam.finite(n_threshold)
    value = cric(g, npar).value
    return GapToCcdReport(
        lam=lam,
        n_threshold=n_threshold,
        n_threshold_defined=True,
        k_derived=k_derived,
        verified=value >= k_derived - tol,
        cric_at_threshold=value,
        k_printed=k_printed,
        printed_holds=value >= k_printed - tol,
    )
