"""Acceptance suite: one test per criterion, at the stated tolerances.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  Each test prints its PASS line only after every assertion in
it has held; a pytest failure marks the criterion failed.
"""

import json
import subprocess
import sys
import time

import pytest

from gammacone.cone import (
    cone_delta_gamma1,
    cone_delta_gamma1_direct,
    cone_gamma1,
    cone_gamma1_direct,
    cone_gamma1_f_deltaf,
    cone_gamma1_f_deltaf_direct,
    cone_gamma2,
    cone_gamma2_direct,
    cone_laplacian,
    cone_laplacian_direct,
    full_cone,
    partial_cone,
    verify_cone_lift,
)
from gammacone.curvature import (
    DimensionParam,
    cric,
    kc_max,
    maximizer_analysis,
    poincare_check,
    ric_pointwise,
    ric_uniform,
)
from gammacone.enumeration import connected_graphs
from gammacone.gamma import divergence_check
from gammacone.graphs import make_complete, make_cycle
from gammacone.rng import XorShift64Star, random_values
from gammacone.spectral import cheeger, lambda1, verify_ccd_spectral_gap, verify_dam

from _util import random_connected_graph, random_graph

INF = DimensionParam.infinity()
N_235 = (DimensionParam.finite(2), DimensionParam.finite(5), INF)


def _done(number: int, name: str, started: float, budget: float | None = None):
    elapsed = time.perf_counter() - started
    if budget is not None:
        assert elapsed < budget, f"criterion {number} exceeded {budget}s ({elapsed:.1f}s)"
    limit = f", budget {budget:.0f}s" if budget else ""
    print(f"ACCEPTANCE {number} {name}: PASS ({elapsed:.1f}s{limit})")


def connected_upto(n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        for g in connected_graphs(n):
            yield g


CONE_OPS = (
    (cone_laplacian, cone_laplacian_direct),
    (cone_gamma1, cone_gamma1_direct),
    (cone_gamma1_f_deltaf, cone_gamma1_f_deltaf_direct),
    (cone_delta_gamma1, cone_delta_gamma1_direct),
    (cone_gamma2, cone_gamma2_direct),
)


def test_criterion_1_cone_lemma_oracle():
    started = time.perf_counter()
    rng = XorShift64Star(2024)
    triples = 0
    worst = 0.0
    while triples < 210:
        n = 2 + rng.randrange(9)  # 2..10
        g = random_graph(rng, n)
        mask = rng.randrange((1 << n) - 1) + 1
        c = partial_cone(g, [v for v in range(n) if mask >> v & 1])
        f = random_values(rng, n)
        for closed, direct in CONE_OPS:
            for x in range(c.graph.n):
                worst = max(worst, abs(closed(c, f, x) - direct(c, f, x)))
        cf = full_cone(g)
        for x in range(cf.graph.n):
            worst = max(worst, abs(cone_gamma2(cf, f, x) - cone_gamma2_direct(cf, f, x)))
        triples += 1
    assert worst <= 1e-9, f"cone oracle worst deviation {worst}"
    _done(1, "cone closed forms vs direct evaluation", started, budget=10.0)


def test_criterion_2_complete_graph_curvature():
    started = time.perf_counter()
    n_values = (DimensionParam.finite(2), DimensionParam.finite(3),
                DimensionParam.finite(10), INF)
    for n in range(3, 9):
        g = make_complete(n)
        for npar in n_values:
            expect = n / 2.0 + 1.0 - 2.0 * (n - 1) * npar.inv
            for x in range(n):
                got = ric_pointwise(g, x, npar).value
                assert abs(got - expect) <= 1e-8, (n, npar.label, x, got, expect)
        at_inf = ric_pointwise(g, 0, INF).value
        assert abs(at_inf - (1.0 + n / 2.0)) <= 1e-8
    _done(2, "complete-graph curvature formula", started, budget=5.0)


def test_criterion_3_conical_two_path_agreement():
    started = time.perf_counter()
    count = 0
    for g in connected_upto(7):
        apex_graph = full_cone(g).graph
        for npar in N_235:
            closed = cric(g, npar).value
            apex = ric_pointwise(apex_graph, g.n, npar).value
            assert abs(closed - apex) <= 1e-8, (g.edges, npar.label, closed, apex)
            count += 1
    assert count == 996 * 3
    _done(3, "conical curvature two-path agreement", started, budget=60.0)


def test_criterion_4_ceiling_and_maximizers():
    started = time.perf_counter()
    for g in connected_upto(7):
        complete = len(g.edges) == g.n * (g.n - 1) // 2
        for npar in N_235:
            value = cric(g, npar).value
            ceiling = kc_max(g, npar)
            assert value <= ceiling + 1e-9
            if complete:
                assert abs(value - ceiling) <= 1e-8
            if npar.is_infinite:
                continue
            rep = maximizer_analysis(g, npar)
            big_n = npar.value
            threshold = g.n * (big_n - 2.0) / (2.0 * big_n)
            if g.n >= 2:
                attainable = lambda1(g) >= threshold - 1e-9
                assert rep.attained == attainable, (g.edges, npar.label)
            if not rep.attained:
                continue
            if rep.is_complete:
                assert rep.witnesses_all_constant
            for w in rep.witnesses:
                if not w.is_constant:
                    assert w.eigen_residual is not None and w.eigen_residual <= 1e-8
    _done(4, "conical ceiling and its maximizers", started)


def test_criterion_5_poincare_inequality():
    started = time.perf_counter()
    rng = XorShift64Star(555)
    for i in range(50):
        n = 2 + rng.randrange(11)  # 2..12
        g = random_connected_graph(rng, n)
        npar = N_235[i % 3]
        k = cric(g, npar)
        for _ in range(1000):
            f = random_values(rng, n)
            assert poincare_check(g, k.value, npar, f).margin >= -1e-9
        bumped = poincare_check(g, k.value + 0.1, npar, k.witness)
        assert bumped.margin < 0.0
    _done(5, "global Poincare inequality at the exact constant", started, budget=30.0)


def test_criterion_6_spectral_gap_corollary():
    started = time.perf_counter()
    for g in connected_upto(8, n_min=2):
        lam = lambda1(g)
        for npar in N_235:
            k = cric(g, npar).value
            derived = (2.0 * k + g.n - 3.0) / 4.0
            assert lam >= derived - 1e-9, (g.edges, npar.label)
            # the published constant under the doubled-gap convention
            assert 2.0 * lam >= k + (g.n - 3.0) / 2.0 - 1e-9
    _done(6, "spectral gap bound from conical curvature", started)


def test_criterion_7_cheeger_suite():
    started = time.perf_counter()
    assert cheeger(make_complete(4)).h == 2
    assert cheeger(make_cycle(4)).h == 1
    assert cheeger(make_complete(2)).h == 1
    printed_h_failures = 0
    for g in connected_upto(8, n_min=2):
        dam = verify_dam(g)
        assert dam.lower_ok and dam.upper_ok, g.edges
        for npar in N_235:
            rep = verify_ccd_spectral_gap(g, npar)
            assert rep.applicable_isoperimetric
            # the constants the energy inequality proves always hold;
            # the strictly larger printed constants are recorded only
            # (they are falsified on this corpus, e.g. the 4-cycle)
            assert rep.ok_h_derived, (g.edges, npar.label)
            assert rep.ok_lambda1_derived, (g.edges, npar.label)
            if not rep.ok_h_printed:
                printed_h_failures += 1
            if npar.value == 2.0:
                # at N = 2 the printed and derived constants coincide
                assert rep.ok_h_printed
    assert printed_h_failures > 0
    _done(7, "exact Cheeger constants and isoperimetric bounds", started, budget=120.0)


def test_criterion_8_divergence_identity():
    started = time.perf_counter()
    rng = XorShift64Star(888)
    for _ in range(10_000):
        g = random_graph(rng, 2 + rng.randrange(9))
        f = random_values(rng, g.n)
        lhs, rhs = divergence_check(g, f)
        assert abs(lhs - rhs) <= 1e-12 * (1.0 + abs(lhs))
    _done(8, "divergence identity at 1e-12 relative", started)


def test_criterion_9_cone_lift_audit():
    started = time.perf_counter()
    reports = 0
    for g in connected_upto(6, n_min=2):
        base = ric_uniform(g, INF).value
        rep = verify_cone_lift(g)
        assert rep.hypothesis_met == (base <= 0.5)
        assert rep.base_curvature == pytest.approx(base, abs=1e-10)
        if not rep.hypothesis_met:
            continue
        reports += 1
        assert set(rep.pointwise) == set(range(g.n))
        mn = min(rep.pointwise.values())
        assert rep.min_pointwise == mn
        assert rep.clears_half == (mn >= base + 0.5 - 1e-9)
        assert rep.clears_one == (mn >= base + 1.0 - 1e-9)
    assert reports > 0
    _done(9, "cone-lift reports produced and internally consistent", started)


def test_criterion_10_audit_determinism():
    started = time.perf_counter()
    cmd = [sys.executable, "-m", "gammacone.cli", "audit",
           "--family", "all-connected", "--max-n", "6", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert len(first.stdout.splitlines()) == 143
    for line in first.stdout.splitlines():
        json.loads(line)
    _done(10, "byte-identical audit reports under a fixed seed", started)
