"""Curvature-dimension quantities as finite eigenproblems.

A graph satisfies the curvature-dimension inequality CD(K, N) at x when

    G2(f)(x) >= (Df)^2(x) / N + K G1(f)(x)      for every f,

with the first right-hand term dropped at N = infinity.  On the radius-2
ball around x this is a matrix inequality A - K B >= 0 with A the G2
form minus the rank-one (Df)^2/N term and B the G1 form, so the largest
admissible K is a generalized eigenvalue.  B is singular (functions
constant near x carry no gradient), and A couples its kernel to its
range, so the supremum is the smallest eigenvalue of the Schur
complement of the kernel block, not of the naively projected pencil.

The conical curvature of G is the largest K for which the full cone
over G satisfies CD(K, N) at its apex.  Because the apex sees every
vertex, that condition collapses to the explicit matrix

    M = L + (1/2 - 1/N) J - ((n - 3) / 4) I,

with L the combinatorial Laplacian, J all-ones, n = |V|, and the
conical curvature equals 2 lambda_min(M).  The same quantity never
exceeds the ceiling n/2 + 3/2 - 2n/N, attained exactly when lambda_1(L)
is large enough, and the attaining functions are constants or
eigenfunctions at lambda_1(L) = n (N - 2) / (2N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .gamma import (
    delta_coefficients,
    gamma1,
    gamma1_vector,
    gamma2,
    gamma2_form,
    gamma1_form,
    laplacian,
    laplacian_matrix,
    laplacian_vector,
)
from .graphs import Graph, as_values, require_connected
from .spectral import eigensolve_symmetric

NEG_INFINITY = float("-inf")


@dataclass(frozen=True)
class DimensionParam:
    """The dimension parameter N in CD(K, N): a real in (1, inf) or infinity."""

    inv: float
    is_infinite: bool
    value: float | None

    def __post_init__(self):
        if self.is_infinite:
            if self.inv != 0.0 or self.value is not None:
                raise ValueError("infinite dimension parameter must have inv == 0")
        else:
            if self.value is None or not math.isfinite(self.value) or self.value <= 1.0:
                raise ValueError("finite dimension parameter must exceed 1")
            if not 0.0 <= self.inv < 1.0:
                raise ValueError("1/N must lie in [0, 1)")

    @classmethod
    def finite(cls, value: float) -> "DimensionParam":
        value = float(value)
        if not math.isfinite(value) or value <= 1.0:
            raise ValueError(f"dimension parameter must exceed 1, got {value}")
        return cls(inv=1.0 / value, is_infinite=False, value=value)

    @classmethod
    def infinity(cls) -> "DimensionParam":
        return cls(inv=0.0, is_infinite=True, value=None)

    @classmethod
    def parse(cls, text: str) -> "DimensionParam":
        t = str(text).strip().lower()
        if t in ("inf", "infinity", "oo"):
            return cls.infinity()
        try:
            return cls.finite(float(t))
        except ValueError as exc:
            raise ValueError(f"cannot parse dimension parameter {text!r}: {exc}") from None

    @property
    def label(self) -> str:
        if self.is_infinite:
            return "inf"
        v = self.value
        return str(int(v)) if v == int(v) else repr(v)


@dataclass(frozen=True)
class CurvatureResult:
    """A curvature value with its realizing function.

    `location` is a vertex id for pointwise results, "uniform" for the
    graph-wide minimum (with `argmin_vertex` carrying the minimizing
    vertex), or "cone-point" for conical curvature.  `residual` is the
    defect of the curvature-dimension equality at the witness.
    """

    value: float
    n_param: DimensionParam
    location: int | str
    witness: np.ndarray | None
    residual: float
    argmin_vertex: int | None = None

    @property
    def is_neg_infinity(self) -> bool:
        return math.isinf(self.value) and self.value < 0


def _sign_normalize(v: np.ndarray) -> np.ndarray:
    scale = np.abs(v).max()
    if scale == 0.0:
        return v
    for x in v:
        if abs(x) > 1e-12 * scale:
            return -v if x < 0 else v
    return v


@dataclass(frozen=True)
class _PencilResult:
    value: float
    witness: np.ndarray | None
    neg_infinity: bool
    kernel_dim: int


def _pencil_sup(a: np.ndarray, b: np.ndarray) -> _PencilResult:
    """sup{K : a - K b is positive semidefinite}, b PSD, with witness.

    Eigenvectors of b below the kernel threshold are deflated; the value
    is the least eigenvalue of the Schur complement of the kernel block
    in the half-whitened pencil.  If a is indefinite on the kernel, or
    couples the kernel outside the range of its kernel block, no finite
    K works and the result is negative infinity.
    """
    dim = a.shape[0]
    eig_b = eigensolve_symmetric(b)
    vals = np.array(eig_b.values)
    vecs = eig_b.vectors
    eps_ker = 1e-9 * max(float(np.trace(b)), 0.0) / dim
    in_range = vals > eps_ker
    if not in_range.any():
        raise ValueError("gradient form is identically zero (no admissible test functions)")
    w_r = vecs[:, in_range] / np.sqrt(vals[in_range])
    w_k = vecs[:, ~in_range]
    a_rr = w_r.T @ a @ w_r
    scale_a = float(np.abs(a).max())
    kernel_dim = w_k.shape[1]
    if kernel_dim == 0:
        schur = a_rr
        k_star_map = None
    else:
        a_rk = w_r.T @ a @ w_k
        a_kk = w_k.T @ a @ w_k
        eig_k = eigensolve_symmetric(a_kk)
        kvals = np.array(eig_k.values)
        tol_k = 1e-9 * max(scale_a, 1e-300)
        if kvals[0] < -tol_k:
            offender = w_k @ eig_k.vectors[:, 0]
            return _PencilResult(NEG_INFINITY, _sign_normalize(offender), True, kernel_dim)
        pos = kvals > tol_k
        pinv = (eig_k.vectors[:, pos] / kvals[pos]) @ eig_k.vectors[:, pos].T
        a_kr = a_rk.T
        resid = a_kr - a_kk @ (pinv @ a_kr)
        if resid.size and float(np.abs(resid).max()) > 1e-8 * max(scale_a, 1e-300):
            return _PencilResult(NEG_INFINITY, None, True, kernel_dim)
        schur = a_rr - a_rk @ pinv @ a_kr
        k_star_map = -pinv @ a_kr
    eig_s = eigensolve_symmetric(0.5 * (schur + schur.T))
    k_val = float(eig_s.values[0])
    r_star = eig_s.vectors[:, 0]
    witness = w_r @ r_star
    if k_star_map is not None:
        witness = witness + w_k @ (k_star_map @ r_star)
    return _PencilResult(k_val, _sign_normalize(witness), False, kernel_dim)


def _cd_forms(g: Graph, x: int, n_param: DimensionParam):
    """A (dimension-adjusted G2) and B (G1) matrices on the radius-2 ball."""
    form2 = gamma2_form(g, x)
    support = form2.support
    b = gamma1_form(g, x).embedded(support).matrix
    q = delta_coefficients(g, x, support)
    a = form2.matrix - n_param.inv * np.outer(q, q)
    return a, b, support


def cd_holds_at(g: Graph, x: int, k: float, n_param: DimensionParam) -> bool:
    """Whether the CD(K, N) inequality holds at vertex x."""
    require_connected(g, "curvature-dimension check")
    x = g.check_vertex(x)
    a, b, _ = _cd_forms(g, x, n_param)
    c = a - k * b
    scale = float(np.abs(c).max())
    eig = eigensolve_symmetric(c)
    return eig.values[0] >= -1e-9 * scale


def ric_pointwise(g: Graph, x: int, n_param: DimensionParam) -> CurvatureResult:
    """Largest K with CD(K, N) at x, and the function realizing it."""
    require_connected(g, "pointwise curvature")
    x = g.check_vertex(x)
    if g.degree(x) == 0:
        raise ValueError(f"vertex {x} is isolated; its gradient form vanishes")
    a, b, support = _cd_forms(g, x, n_param)
    pencil = _pencil_sup(a, b)
    witness_full = None
    if pencil.witness is not None:
        witness_full = np.zeros(g.n)
        witness_full[list(support)] = pencil.witness
    if pencil.neg_infinity:
        return CurvatureResult(
            value=NEG_INFINITY,
            n_param=n_param,
            location=x,
            witness=witness_full,
            residual=float("nan"),
        )
    w = witness_full
    residual = abs(
        gamma2(g, w, w, x)
        - n_param.inv * laplacian(g, w, x) ** 2
        - pencil.value * gamma1(g, w, w, x)
    )
    return CurvatureResult(
        value=pencil.value,
        n_param=n_param,
        location=x,
        witness=w,
        residual=residual,
    )


def ric_uniform(g: Graph, n_param: DimensionParam) -> CurvatureResult:
    """Largest K with CD(K, N) everywhere: the minimum over vertices."""
    require_connected(g, "uniform curvature")
    best: CurvatureResult | None = None
    best_vertex = 0
    for x in range(g.n):
        r = ric_pointwise(g, x, n_param)
        if best is None or r.value < best.value:
            best = r
            best_vertex = x
    assert best is not None
    return CurvatureResult(
        value=best.value,
        n_param=n_param,
        location="uniform",
        witness=best.witness,
        residual=best.residual,
        argmin_vertex=best_vertex,
    )


def conical_matrix(g: Graph, n_param: DimensionParam) -> np.ndarray:
    """M = L + (1/2 - 1/N) J - ((n-3)/4) I; conical curvature is 2 lambda_min."""
    n = g.n
    m = laplacian_matrix(g).matrix.copy()
    m += (0.5 - n_param.inv) * np.ones((n, n))
    m -= ((n - 3) / 4.0) * np.eye(n)
    return m


def cric(g: Graph, n_param: DimensionParam) -> CurvatureResult:
    """Conical curvature: the largest K such that the full cone over G
    satisfies CD(K, N) at its apex."""
    require_connected(g, "conical curvature")
    eig = eigensolve_symmetric(conical_matrix(g, n_param))
    value = 2.0 * float(eig.values[0])
    witness = _sign_normalize(eig.vectors[:, 0].copy())
    from .cone import cone_gamma1, cone_gamma2, cone_laplacian, full_cone

    c = full_cone(g)
    residual = abs(
        cone_gamma2(c, witness, c.apex)
        - n_param.inv * cone_laplacian(c, witness, c.apex) ** 2
        - value * cone_gamma1(c, witness, c.apex)
    )
    return CurvatureResult(
        value=value,
        n_param=n_param,
        location="cone-point",
        witness=witness,
        residual=residual,
    )


def kc_max(g: Graph, n_param: DimensionParam) -> float:
    """Ceiling no conical curvature can exceed: n/2 + 3/2 - 2n/N."""
    n = g.n
    return n / 2.0 + 1.5 - 2.0 * n * n_param.inv


@dataclass(frozen=True)
class PoincareCheck:
    """One evaluation of the global energy inequality

        sum_y G1(f)(y) >= ((2-N)/(2N)) (sum f)^2 + ((2K+n-3)/4) sum f^2.

    For mean-zero f with 2K + n - 3 > 0 the equivalent norm comparison
    ||f||_2 <= sqrt(2/(2K+n-3)) ||grad f||_2 is filled in, with
    ||grad f||_2^2 read as 2 sum_y G1(f)(y).
    """

    lhs: float
    rhs: float
    holds: bool
    margin: float
    mean_zero_form_available: bool
    norm_f: float | None = None
    norm_bound: float | None = None


def poincare_check(
    g: Graph, k: float, n_param: DimensionParam, f, tol: float = 1e-9
) -> PoincareCheck:
    v = as_values(f, g.n)
    n = g.n
    lhs = float(gamma1_vector(g, v).sum())
    s1 = float(v.sum())
    s2 = float(v @ v)
    rhs = (n_param.inv - 0.5) * s1 * s1 + ((2.0 * k + n - 3.0) / 4.0) * s2
    margin = lhs - rhs
    coeff = 2.0 * k + n - 3.0
    # a coefficient at rounding distance from zero gives a vacuous bound
    available = coeff > 1e-12 * (1.0 + 2.0 * abs(k) + n)
    norm_f = norm_bound = None
    if available and abs(s1) <= 1e-12 * n * (1.0 + float(np.abs(v).max())):
        norm_f = math.sqrt(s2)
        norm_bound = math.sqrt(2.0 / coeff) * math.sqrt(2.0 * lhs) if lhs >= 0 else 0.0
    return PoincareCheck(
        lhs=lhs,
        rhs=rhs,
        holds=margin >= -tol,
        margin=margin,
        mean_zero_form_available=available,
        norm_f=norm_f,
        norm_bound=norm_bound,
    )


@dataclass(frozen=True)
class WitnessCheck:
    """One function spanning the extremal eigenspace of the conical matrix."""

    vector: np.ndarray
    is_constant: bool
    eigen_residual: float | None
    eigen_residual_printed: float | None


@dataclass(frozen=True)
class MaximizerReport:
    """Whether the conical curvature attains its ceiling, and through what.

    When attained, `witnesses` spans the full extremal eigenspace.  Any
    non-constant witness w has w - avg(w) an eigenfunction of L; the
    consistent eigenvalue is n (N-2) / (2N) (`lambda1_target`), and the
    halved variant n (N-2) / (4N) that circulates under the doubled
    Rayleigh-quotient convention is recorded alongside for comparison
    (`eigen_residual_printed`); only the former is expected to vanish.
    """

    n_param: DimensionParam
    cric_value: float
    kc_value: float
    attained: bool
    is_complete: bool
    witnesses: list[WitnessCheck] = field(default_factory=list)
    witnesses_all_constant: bool | None = None
    lambda1_target: float | None = None
    lambda1_target_printed: float | None = None


def maximizer_analysis(
    g: Graph, n_param: DimensionParam, tol: float = 1e-8
) -> MaximizerReport:
    """Extract and check the functions that realize the conical ceiling."""
    if n_param.is_infinite:
        raise ValueError("maximizer analysis requires a finite dimension parameter")
    require_connected(g, "maximizer analysis")
    n = g.n
    big_n = float(n_param.value)  # type: ignore[arg-type]
    res = cric(g, n_param)
    kc = kc_max(g, n_param)
    attained = abs(res.value - kc) <= tol
    is_complete = len(g.edges) == n * (n - 1) // 2
    if not attained:
        return MaximizerReport(
            n_param=n_param,
            cric_value=res.value,
            kc_value=kc,
            attained=False,
            is_complete=is_complete,
        )
    eig = eigensolve_symmetric(conical_matrix(g, n_param))
    vals = np.array(eig.values)
    lam_min = vals[0]
    window = 1e-8 * max(1.0, float(np.abs(vals).max()))
    target = n * (big_n - 2.0) / (2.0 * big_n)
    target_printed = n * (big_n - 2.0) / (4.0 * big_n)
    witnesses: list[WitnessCheck] = []
    for idx in range(len(vals)):
        if vals[idx] > lam_min + window:
            break
        w = _sign_normalize(eig.vectors[:, idx].copy())
        spread = float(w.max() - w.min())
        is_const = spread <= 1e-10 * max(1.0, float(np.abs(w).max()))
        if is_const:
            witnesses.append(WitnessCheck(w, True, None, None))
            continue
        w0 = w - w.mean()
        lw0 = -laplacian_vector(g, w0)
        r_true = float(np.abs(lw0 - target * w0).max())
        r_printed = float(np.abs(lw0 - target_printed * w0).max())
        witnesses.append(WitnessCheck(w, False, r_true, r_printed))
    return MaximizerReport(
        n_param=n_param,
        cric_value=res.value,
        kc_value=kc,
        attained=True,
        is_complete=is_complete,
        witnesses=witnesses,
        witnesses_all_constant=all(w.is_constant for w in witnesses),
        lambda1_target=target,
        lambda1_target_printed=target_printed,
    )
