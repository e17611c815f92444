# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled projective-sweep kernels.

Every function takes the tables tuple produced by ``kernel_tables`` and a
block of normalized projective points ``vs`` (one per row) and returns one
row of results per point.  ``_kernels_py`` holds the same algorithms in plain
Python; the two must agree bit for bit.
"""

import numpy as np
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

ctypedef long long i64


cdef struct Tabs:
    i64 p
    i64 e
    i64 m
    i64 qm1
    i64 half
    const i64* exp
    const i64* log
    const i64* zech
    const i64* coords
    const i64* basis


cdef inline i64 g_mul(Tabs* T, i64 a, i64 b) noexcept nogil:
    if a == 0 or b == 0:
        return 0
    cdef i64 s = T.log[a] + T.log[b]
    if s >= T.qm1:
        s -= T.qm1
    return T.exp[s]


cdef inline i64 g_add(Tabs* T, i64 a, i64 b) noexcept nogil:
    if T.p == 2:
        return a ^ b
    if a == 0:
        return b
    if b == 0:
        return a
    cdef i64 la = T.log[a]
    cdef i64 d = T.log[b] - la
    if d < 0:
        d += T.qm1
    cdef i64 z = T.zech[d]
    if z < 0:
        return 0
    la += z
    if la >= T.qm1:
        la -= T.qm1
    return T.exp[la]


cdef inline i64 g_neg(Tabs* T, i64 a) noexcept nogil:
    if T.p == 2 or a == 0:
        return a
    cdef i64 s = T.log[a] + T.half
    if s >= T.qm1:
        s -= T.qm1
    return T.exp[s]


cdef inline i64 g_inv(Tabs* T, i64 a) noexcept nogil:
    cdef i64 s = T.qm1 - T.log[a]
    if s >= T.qm1:
        s -= T.qm1
    return T.exp[s]


cdef inline i64 q_mul(Tabs* T, i64 a, i64 b) noexcept nogil:
    if T.e == 1:
        return (a * b) % T.p
    return g_mul(T, a, b)


cdef inline i64 q_add(Tabs* T, i64 a, i64 b) noexcept nogil:
    if T.e == 1:
        if T.p == 2:
            return a ^ b
        a += b
        if a >= T.p:
            a -= T.p
        return a
    return g_add(T, a, b)


cdef inline i64 q_sub(Tabs* T, i64 a, i64 b) noexcept nogil:
    if T.e == 1:
        if T.p == 2:
            return a ^ b
        a -= b
        if a < 0:
            a += T.p
        return a
    return g_add(T, a, g_neg(T, b))


cdef int elim(Tabs* T, i64* A, int r, int width, int pcols, int* piv) noexcept nogil:
    """Forward elimination over F_q using pivots among the first pcols columns.

    Pivot rows are scaled to leading entry 1.  Rows from the returned rank
    onwards vanish in the first pcols columns.
    """
    cdef int rank = 0, col, i, j, pr
    cdef i64 f, inv, tmp
    cdef i64* rowp
    cdef i64* rowi
    for col in range(pcols):
        if rank == r:
            break
        pr = -1
        for i in range(rank, r):
            if A[i * width + col] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != rank:
            for j in range(width):
                tmp = A[pr * width + j]
                A[pr * width + j] = A[rank * width + j]
                A[rank * width + j] = tmp
        rowp = A + rank * width
        inv = g_inv(T, rowp[col])
        if inv != 1:
            for j in range(col, width):
                rowp[j] = q_mul(T, rowp[j], inv)
        for i in range(rank + 1, r):
            rowi = A + i * width
            f = rowi[col]
            if f != 0:
                for j in range(col, width):
                    if rowp[j] != 0:
                        rowi[j] = q_sub(T, rowi[j], q_mul(T, f, rowp[j]))
        if piv != NULL:
            piv[rank] = col
        rank += 1
    return rank


cdef void reduce_by(Tabs* T, i64* u, i64* E, int* piv, int rank, int width) noexcept nogil:
    cdef int i, j
    cdef i64 f
    cdef i64* row
    for i in range(rank):
        f = u[piv[i]]
        if f != 0:
            row = E + i * width
            for j in range(piv[i], width):
                if row[j] != 0:
                    u[j] = q_sub(T, u[j], q_mul(T, f, row[j]))


cdef void expand_into(Tabs* T, i64 x, i64* dst) noexcept nogil:
    cdef int a
    for a in range(T.m):
        dst[a] = T.coords[x * T.m + a]


cdef void hyperplane_rows(Tabs* T, i64* v, int k, i64* W) noexcept nogil:
    """F_q-basis of v^⊥ written as expanded rows (m(k-1) rows of width km)."""
    cdef int km = k * T.m, j0 = 0, l, a, row = 0
    cdef i64 c, iv, b
    while v[j0] == 0:
        j0 += 1
    iv = g_inv(T, v[j0])
    memset(W, 0, sizeof(i64) * T.m * (k - 1) * km)
    for l in range(k):
        if l == j0:
            continue
        c = g_neg(T, g_mul(T, v[l], iv))
        for a in range(T.m):
            b = T.basis[a]
            expand_into(T, b, W + row * km + l * T.m)
            expand_into(T, g_mul(T, c, b), W + row * km + j0 * T.m)
            row += 1


cdef void point_rows(Tabs* T, i64* v, int k, i64* W) noexcept nogil:
    cdef int km = k * T.m, l, a
    for a in range(T.m):
        for l in range(k):
            expand_into(T, g_mul(T, T.basis[a], v[l]), W + a * km + l * T.m)


cdef class _TabHolder:
    cdef Tabs T
    cdef object keep

    def __init__(self, tabs):
        p, e, m, exp, log, zech, coords, basis = tabs
        cdef const i64[::1] ex = exp, lg = log, zc = zech, co = coords, bs = basis
        self.keep = (exp, log, zech, coords, basis)
        self.T.p = p
        self.T.e = e
        self.T.m = m
        self.T.qm1 = exp.shape[0]
        self.T.half = exp.shape[0] // 2
        self.T.exp = &ex[0]
        self.T.log = &lg[0]
        self.T.zech = &zc[0]
        self.T.coords = &co[0]
        self.T.basis = &bs[0]


def rank_lists(tabs, const i64[:, ::1] vs, const i64[:, ::1] G, const i64[::1] starts):
    """F_q-rank of every block of vG for each point v."""
    cdef _TabHolder h = _TabHolder(tabs)
    cdef Tabs* T = &h.T
    cdef int P = vs.shape[0], k = G.shape[0], t = starts.shape[0] - 1
    cdef int m = T.m, maxn = 0, b, j, l, pi, s0, n
    cdef i64 x, a
    for b in range(t):
        maxn = max(maxn, starts[b + 1] - starts[b])
    out = np.zeros((P, t), dtype=np.int32)
    cdef int[:, ::1] o = out
    cdef i64* buf = <i64*> malloc(sizeof(i64) * max(1, maxn * m))
    with nogil:
        for pi in range(P):
            for b in range(t):
                s0 = starts[b]
                n = starts[b + 1] - s0
                for j in range(n):
                    x = 0
                    for l in range(k):
                        a = vs[pi, l]
                        if a != 0:
                            x = g_add(T, x, g_mul(T, a, G[l, s0 + j]))
                    expand_into(T, x, buf + j * m)
                o[pi, b] = elim(T, buf, n, m, m, NULL)
    free(buf)
    return out


cdef i64* expand_columns(Tabs* T, const i64[:, ::1] B) noexcept nogil:
    cdef int k = B.shape[0], N = B.shape[1], km = k * T.m, j, l
    cdef i64* U = <i64*> malloc(sizeof(i64) * max(1, N * km))
    for j in range(N):
        for l in range(k):
            expand_into(T, B[l, j], U + j * km + l * T.m)
    return U


def section_dims(tabs, const i64[:, ::1] vs, const i64[:, ::1] B, const i64[::1] starts, int mode):
    """dim_Fq(U_i ∩ W_v) per block, W_v = v^⊥ (mode 0) or <v> (mode 1).

    U_i is spanned by the columns of block i of ``B``; the dimension comes from
    eliminating W_v first and ranking the residues of U_i's basis.
    """
    cdef _TabHolder h = _TabHolder(tabs)
    cdef Tabs* T = &h.T
    cdef int P = vs.shape[0], k = B.shape[0], t = starts.shape[0] - 1
    cdef int m = T.m, km = k * m, maxn = 0, b, j, pi, s0, n, rw, r
    cdef int dimW = m * (k - 1) if mode == 0 else m
    for b in range(t):
        maxn = max(maxn, starts[b + 1] - starts[b])
    out = np.zeros((P, t), dtype=np.int32)
    cdef int[:, ::1] o = out
    cdef i64* U = expand_columns(T, B)
    cdef i64* W = <i64*> malloc(sizeof(i64) * max(1, dimW * km))
    cdef int* piv = <int*> malloc(sizeof(int) * max(1, dimW))
    cdef i64* R = <i64*> malloc(sizeof(i64) * max(1, maxn * km))
    cdef i64* v = <i64*> malloc(sizeof(i64) * k)
    with nogil:
        for pi in range(P):
            for j in range(k):
                v[j] = vs[pi, j]
            if mode == 0:
                hyperplane_rows(T, v, k, W)
            else:
                point_rows(T, v, k, W)
            rw = elim(T, W, dimW, km, km, piv)
            for b in range(t):
                s0 = starts[b]
                n = starts[b + 1] - s0
                memcpy(R, U + s0 * km, sizeof(i64) * n * km)
                for j in range(n):
                    reduce_by(T, R + j * km, W, piv, rw, km)
                r = elim(T, R, n, km, km, NULL)
                o[pi, b] = n - r
    free(U)
    free(W)
    free(piv)
    free(R)
    free(v)
    return out


def duality_flags(tabs, const i64[:, ::1] vs, const i64[:, ::1] G, const i64[::1] starts):
    """Compare U_i ∩ v^⊥ with psi_{G_i}(supp(vG_i)^⊥) for every point.

    Returns (flags, dims): flags[p] is 1 when the two subspaces coincide in
    every block, dims[p, i] is the dimension of the section U_i ∩ v^⊥.
    """
    cdef _TabHolder h = _TabHolder(tabs)
    cdef Tabs* T = &h.T
    cdef int P = vs.shape[0], k = G.shape[0], t = starts.shape[0] - 1
    cdef int m = T.m, km = k * m, maxn = 0, b, j, l, pi, s0, n, rw, rl, rr, dl, dr, ok, c, r, wl, wr
    cdef int dimW = m * (k - 1)
    cdef i64 x, a, lam
    for b in range(t):
        maxn = max(maxn, starts[b + 1] - starts[b])
    flags = np.zeros(P, dtype=np.int8)
    dims = np.zeros((P, t), dtype=np.int32)
    cdef signed char[::1] fl = flags
    cdef int[:, ::1] dm = dims
    cdef i64* U = expand_columns(T, G)
    cdef i64* W = <i64*> malloc(sizeof(i64) * max(1, dimW * km))
    cdef int* piv = <int*> malloc(sizeof(int) * max(1, dimW))
    wl = km + maxn
    wr = m + maxn
    cdef i64* L = <i64*> malloc(sizeof(i64) * max(1, maxn * wl))
    cdef i64* Rm = <i64*> malloc(sizeof(i64) * max(1, maxn * wr))
    cdef i64* S = <i64*> malloc(sizeof(i64) * max(1, 2 * maxn * km))
    cdef i64* v = <i64*> malloc(sizeof(i64) * k)
    with nogil:
        for pi in range(P):
            for j in range(k):
                v[j] = vs[pi, j]
            hyperplane_rows(T, v, k, W)
            rw = elim(T, W, dimW, km, km, piv)
            ok = 1
            for b in range(t):
                s0 = starts[b]
                n = starts[b + 1] - s0
                # section: residues of the basis modulo v^⊥, with identity tracking
                memset(L, 0, sizeof(i64) * n * (km + n))
                for j in range(n):
                    memcpy(L + j * (km + n), U + (s0 + j) * km, sizeof(i64) * km)
                    reduce_by(T, L + j * (km + n), W, piv, rw, km)
                    L[j * (km + n) + km + j] = 1
                rl = elim(T, L, n, km + n, km, NULL)
                dl = n - rl
                # orthogonal of the support: left kernel of the coordinate matrix of vG_i
                memset(Rm, 0, sizeof(i64) * n * (m + n))
                for j in range(n):
                    x = 0
                    for l in range(k):
                        a = v[l]
                        if a != 0:
                            x = g_add(T, x, g_mul(T, a, G[l, s0 + j]))
                    expand_into(T, x, Rm + j * (m + n))
                    Rm[j * (m + n) + m + j] = 1
                rr = elim(T, Rm, n, m + n, m, NULL)
                dr = n - rr
                dm[pi, b] = dl
                if dl != dr:
                    ok = 0
                    continue
                # map both kernels through psi and compare spans
                memset(S, 0, sizeof(i64) * (dl + dr) * km)
                for r in range(dl):
                    for j in range(n):
                        lam = L[(rl + r) * (km + n) + km + j]
                        if lam != 0:
                            for c in range(km):
                                if U[(s0 + j) * km + c] != 0:
                                    S[r * km + c] = q_add(T, S[r * km + c], q_mul(T, lam, U[(s0 + j) * km + c]))
                for r in range(dr):
                    for j in range(n):
                        lam = Rm[(rr + r) * (m + n) + m + j]
                        if lam != 0:
                            for c in range(km):
                                if U[(s0 + j) * km + c] != 0:
                                    S[(dl + r) * km + c] = q_add(T, S[(dl + r) * km + c], q_mul(T, lam, U[(s0 + j) * km + c]))
                if elim(T, S, dl + dr, km, km, NULL) != dl:
                    ok = 0
            fl[pi] = ok
    free(U)
    free(W)
    free(piv)
    free(L)
    free(Rm)
    free(S)
    free(v)
    return flags, dims
