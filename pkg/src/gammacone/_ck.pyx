# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Jacobi sweeps, Cheeger scan, canonical labeling.

Function-for-function twin of gammacone._kernels_py; see that module for
the algorithm contracts.
"""

from libc.math cimport fabs, sqrt

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def jacobi_eigh(double[:, ::1] a, double[:, ::1] v, double thresh, int max_sweeps):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, r
    cdef int sweep
    cdef double apq, app, aqq, theta, t, c, s, tau, g, h, off, m
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                m = fabs(a[p, q])
                if m > off:
                    off = m
        if off <= thresh:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) <= thresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = 0.5 * (aqq - app) / apq
                if theta >= 0.0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for r in range(n):
                    if r != p and r != q:
                        g = a[r, p]
                        h = a[r, q]
                        a[r, p] = g - s * (h + tau * g)
                        a[r, q] = h + s * (g - tau * h)
                        a[p, r] = a[r, p]
                        a[q, r] = a[r, q]
                for r in range(n):
                    g = v[r, p]
                    h = v[r, q]
                    v[r, p] = g - s * (h + tau * g)
                    v[r, q] = h + s * (g - tau * h)
    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            m = fabs(a[p, q])
            if m > off:
                off = m
    return max_sweeps if off <= thresh else -1


cdef bint _lex_less(unsigned long long a, unsigned long long b) nogil:
    cdef unsigned long long xa = a, xb = b
    cdef int va, vb
    while xa != 0 and xb != 0:
        va = __builtin_ctzll(xa)
        vb = __builtin_ctzll(xb)
        if va != vb:
            return va < vb
        xa &= xa - 1
        xb &= xb - 1
    return xa == 0 and xb != 0


def cheeger_scan(adj_masks, int n):
    if n <= 0 or n > 62:
        raise ValueError("cheeger_scan supports 1..62 vertices")
    cdef unsigned long long adj[64]
    cdef Py_ssize_t i
    for i in range(n):
        adj[i] = adj_masks[i]
    cdef unsigned long long full = (<unsigned long long> 1 << n) - 1
    cdef unsigned long long sub, m, best_mask = 0
    cdef long long best_num = -1, best_den = 1
    cdef long long size, bnd
    cdef int vtx
    for sub in range(1, full + 1):
        size = __builtin_popcountll(sub)
        if 2 * size > n:
            continue
        bnd = 0
        m = sub
        while m != 0:
            vtx = __builtin_ctzll(m)
            m &= m - 1
            bnd += __builtin_popcountll(adj[vtx] & ~sub & full)
        if best_num < 0 or bnd * best_den < best_num * size:
            best_num = bnd
            best_den = size
            best_mask = sub
        elif bnd * best_den == best_num * size and _lex_less(sub, best_mask):
            best_num = bnd
            best_den = size
            best_mask = sub
    return int(best_num), int(best_den), int(best_mask)


cdef void _canon_dfs(Py_ssize_t j, Py_ssize_t n,
                     unsigned long long partial, Py_ssize_t bits,
                     unsigned long long* adj, long* col, long* pos,
                     long* perm, unsigned long long used,
                     unsigned long long* best, Py_ssize_t total_bits) nogil:
    if j == n:
        if partial < best[0]:
            best[0] = partial
        return
    cdef long cand[16]
    cdef unsigned long long chunks[16]
    cdef int m = 0
    cdef Py_ssize_t i, k
    cdef long vtx, w
    cdef unsigned long long ch, drop
    cdef bint twin
    for vtx in range(n):
        if (used >> vtx) & 1 or col[vtx] != pos[j]:
            continue
        ch = 0
        for i in range(j):
            ch = (ch << 1) | ((adj[vtx] >> perm[i]) & 1)
        k = m
        while k > 0 and (chunks[k - 1] > ch or (chunks[k - 1] == ch and cand[k - 1] > vtx)):
            chunks[k] = chunks[k - 1]
            cand[k] = cand[k - 1]
            k -= 1
        chunks[k] = ch
        cand[k] = vtx
        m += 1
    cdef Py_ssize_t newbits = bits + j
    cdef Py_ssize_t shift = total_bits - newbits
    cdef unsigned long long newpart
    cdef long kept[16]
    cdef unsigned long long kept_ch[16]
    cdef int nkept = 0
    for i in range(m):
        ch = chunks[i]
        vtx = cand[i]
        twin = False
        for k in range(nkept):
            if kept_ch[k] != ch:
                continue
            w = kept[k]
            drop = ~((<unsigned long long> 1 << vtx) | (<unsigned long long> 1 << w))
            if (adj[vtx] & drop) == (adj[w] & drop):
                twin = True
                break
        if twin:
            continue
        kept[nkept] = vtx
        kept_ch[nkept] = ch
        nkept += 1
        newpart = (partial << j) | ch
        if newpart > (best[0] >> shift):
            break
        perm[j] = vtx
        _canon_dfs(j + 1, n, newpart, newbits, adj, col, pos, perm,
                   used | (<unsigned long long> 1 << vtx), best, total_bits)


def canon_key(adj_masks, colors, pos_color, Py_ssize_t n):
    if n > 11:
        raise ValueError("canonical labeling supports at most 11 vertices")
    cdef Py_ssize_t total_bits = n * (n - 1) // 2
    if total_bits == 0:
        return 0
    cdef unsigned long long adj[16]
    cdef long col[16]
    cdef long pos[16]
    cdef long perm[16]
    cdef Py_ssize_t i
    for i in range(n):
        adj[i] = adj_masks[i]
        col[i] = colors[i]
        pos[i] = pos_color[i]
        perm[i] = 0
    cdef unsigned long long best = (<unsigned long long> 1 << total_bits) - 1
    _canon_dfs(0, n, 0, 0, adj, col, pos, perm, 0, &best, total_bits)
    return int(best)
