"""Pure-Python kernels: Jacobi sweeps, Cheeger scan, canonical labeling.

Mirrors gammacone._ck function for function.  The compiled module is
preferred at import time (see gammacone._kernels); these fallbacks keep
the package fully functional without a C toolchain, at a large speed
penalty on exhaustive audits.
"""

from __future__ import annotations

import math


def jacobi_eigh(a, v, thresh: float, max_sweeps: int) -> int:
    """Cyclic Jacobi sweeps on symmetric `a`, accumulating rotations into `v`.

    Both arguments are modified in place (numpy float64 arrays; `v` starts
    as the identity).  Sweeps run in row-major upper-triangle order and
    rotate every entry with |a[p,q]| > thresh, until the largest
    off-diagonal entry is at most thresh.  Returns the sweep count, or -1
    if max_sweeps was exhausted.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            row = a[p]
            for q in range(p + 1, n):
                m = abs(row[q])
                if m > off:
                    off = m
        if off <= thresh:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = 0.5 * (aqq - app) / apq
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = col_p - s * (col_q + tau * col_p)
                a[:, q] = col_q + s * (col_p - tau * col_q)
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = vp - s * (vq + tau * vp)
                v[:, q] = vq + s * (vp - tau * vq)
    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            m = abs(a[p, q])
            if m > off:
                off = m
    return max_sweeps if off <= thresh else -1


def cheeger_scan(adj_masks, n: int):
    """Exact minimum of |boundary(F)| / |F| over nonempty F with |F| <= n/2.

    `adj_masks[v]` is the neighbor bitmask of vertex v.  Returns
    (boundary_count, subset_size, subset_mask) for the minimizer, ties
    broken to the lexicographically smallest vertex set.
    """
    full = (1 << n) - 1
    best_num = -1
    best_den = 1
    best_mask = 0
    masks = list(adj_masks)
    for sub in range(1, full + 1):
        size = sub.bit_count()
        if 2 * size > n:
            continue
        inv = ~sub
        bnd = 0
        m = sub
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            bnd += (masks[v] & inv & full).bit_count()
        if best_num < 0 or bnd * best_den < best_num * size:
            best_num, best_den, best_mask = bnd, size, sub
        elif bnd * best_den == best_num * size and _lex_less(sub, best_mask):
            best_num, best_den, best_mask = bnd, size, sub
    return best_num, best_den, best_mask


def _lex_less(a: int, b: int) -> bool:
    # compare bitmask subsets as ascending vertex sequences
    xa, xb = a, b
    while xa and xb:
        va = (xa & -xa).bit_length() - 1
        vb = (xb & -xb).bit_length() - 1
        if va != vb:
            return va < vb
        xa &= xa - 1
        xb &= xb - 1
    return xa == 0 and xb != 0


def canon_key(adj_masks, colors, pos_color, n: int) -> int:
    """Minimum packed upper-triangle bitstring over color-preserving relabelings.

    Bit t of the key (most significant first) is the adjacency bit of the
    pair (i, j) in column-major order (0,1), (0,2), (1,2), (0,3), ...
    under the relabeling.  `colors[v]` constrains vertex v to positions j
    with pos_color[j] == colors[v]; the color classes must be
    isomorphism-invariant for the result to be canonical.
    """
    if n > 11:
        raise ValueError("canonical labeling supports at most 11 vertices")
    total_bits = n * (n - 1) // 2
    if total_bits == 0:
        return 0
    best = (1 << total_bits) - 1
    adj = list(adj_masks)
    col = list(colors)
    pos = list(pos_color)
    perm = [0] * n

    def dfs(j: int, partial: int, bits: int, used: int) -> None:
        nonlocal best
        if j == n:
            if partial < best:
                best = partial
            return
        cand = []
        for vtx in range(n):
            if used >> vtx & 1 or col[vtx] != pos[j]:
                continue
            ch = 0
            av = adj[vtx]
            for i in range(j):
                ch = (ch << 1) | (av >> perm[i] & 1)
            cand.append((ch, vtx))
        cand.sort()
        newbits = bits + j
        shift = total_bits - newbits
        kept: list[tuple[int, int]] = []
        for ch, vtx in cand:
            twin = False
            for ch2, w in kept:
                if ch2 != ch:
                    continue
                drop = ~((1 << vtx) | (1 << w))
                if adj[vtx] & drop == adj[w] & drop:
                    twin = True
                    break
            if twin:
                continue
            kept.append((ch, vtx))
            newpart = (partial << j) | ch
            if newpart > best >> shift:
                break
            perm[j] = vtx
            dfs(j + 1, newpart, newbits, used | (1 << vtx))

    dfs(0, 0, 0, 0)
    return best
