"""Benchmark the compiled kernels against the pure-Python fallbacks.

Times the three hot kernels on representative workloads, plus an
end-to-end audit run under each backend (subprocesses with
GAMMA_CONE_BACKEND set, so import-time selection is exercised).

    python bench/benchmark_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from gammacone import _kernels_py
from gammacone.enumeration import _graph_keys, masks_from_key, wl_colors
from gammacone.rng import XorShift64Star, random_values

try:
    from gammacone import _ck
except ImportError:
    _ck = None


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_jacobi(impl, dims, rng_seed=1):
    def run():
        rng = XorShift64Star(rng_seed)
        for dim in dims:
            raw = np.array(random_values(rng, dim * dim)).reshape(dim, dim)
            m = np.ascontiguousarray(0.5 * (raw + raw.T))
            v = np.eye(dim)
            scale = float(np.abs(m).max())
            impl.jacobi_eigh(m, v, 1e-12 * scale, 100)

    return run


def bench_cheeger(impl, sizes, rng_seed=2):
    rng = XorShift64Star(rng_seed)
    cases = []
    for n in sizes:
        masks = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.uniform() < 0.4:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
        cases.append((masks, n))

    def run():
        for masks, n in cases:
            impl.cheeger_scan(masks, n)

    return run


def bench_canon(impl, n=7):
    # the enumeration workload: every extension of every 6-vertex graph
    parents = _graph_keys(n - 1)
    cases = []
    for key in parents:
        base = masks_from_key(n - 1, key)
        for attach in range(1 << (n - 1)):
            masks = [base[v] | ((attach >> v & 1) << (n - 1)) for v in range(n - 1)]
            masks.append(attach)
            colors = list(wl_colors(n, masks))
            cases.append((masks, colors, sorted(colors)))

    def run():
        for masks, colors, pos in cases:
            impl.canon_key(masks, colors, pos, n)

    return run, len(cases)


def bench_audit(backend: str) -> float:
    env = dict(os.environ, GAMMA_CONE_BACKEND=backend)
    cmd = [sys.executable, "-m", "gammacone.cli", "audit",
           "--family", "all-connected", "--max-n", "5", "--seed", "1"]
    t0 = time.perf_counter()
    subprocess.run(cmd, env=env, check=True, capture_output=True)
    return time.perf_counter() - t0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="fewer repeats")
    args = parser.parse_args()
    repeats = 1 if args.quick else 3

    if _ck is None:
        print("compiled kernels not built; timing the pure backend only")
    backends = [("pure", _kernels_py)] + ([("compiled", _ck)] if _ck else [])

    rows = []
    jacobi_dims = (8, 16, 32) if args.quick else (8, 16, 32, 64, 128)
    cheeger_sizes = (12, 14) if args.quick else (12, 16, 18)

    timings = {name: _time(bench_jacobi(impl, jacobi_dims), repeats)
               for name, impl in backends}
    rows.append((f"jacobi_eigh dims {jacobi_dims}", timings))

    timings = {name: _time(bench_cheeger(impl, cheeger_sizes), repeats)
               for name, impl in backends}
    rows.append((f"cheeger_scan n {cheeger_sizes}", timings))

    canon_runs = {}
    for name, impl in backends:
        run, count = bench_canon(impl)
        canon_runs[name] = _time(run, repeats)
    rows.append((f"canon_key {count} graphs (n=7)", canon_runs))

    audit_timings = {name: bench_audit(name) for name, _ in backends}
    rows.append(("audit all-connected n<=5 (end to end)", audit_timings))

    width = max(len(r[0]) for r in rows)
    header = f"{'workload':<{width}}  {'pure':>10}"
    if _ck:
        header += f"  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, timings in rows:
        line = f"{label:<{width}}  {timings['pure']:>9.3f}s"
        if _ck:
            ratio = timings["pure"] / timings["compiled"] if timings["compiled"] else float("inf")
            line += f"  {timings['compiled']:>9.3f}s  {ratio:>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
