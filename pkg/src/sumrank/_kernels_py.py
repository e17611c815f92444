"""Pure-Python versions of the sweep kernels in ``_kernels.pyx``.

Same signatures, same algorithms, same outputs; used when the compiled
extension is unavailable or ``SUMRANK_PURE_PYTHON`` is set.
"""

from __future__ import annotations

import numpy as np

_cache: dict = {}


class _T:
    def __init__(self, tabs):
        p, e, m, exp, log, zech, coords, basis = tabs
        self.p, self.e, self.m = int(p), int(e), int(m)
        self.qm1 = len(exp)
        self.half = self.qm1 // 2
        self.exp = exp.tolist()
        self.log = log.tolist()
        self.zech = zech.tolist()
        self.coords = coords.reshape(-1, self.m).tolist()
        self.basis = basis.tolist()

    def g_mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        s = self.log[a] + self.log[b]
        if s >= self.qm1:
            s -= self.qm1
        return self.exp[s]

    def g_add(self, a, b):
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log[a]
        d = self.log[b] - la
        if d < 0:
            d += self.qm1
        z = self.zech[d]
        if z < 0:
            return 0
        la += z
        if la >= self.qm1:
            la -= self.qm1
        return self.exp[la]

    def g_neg(self, a):
        if self.p == 2 or a == 0:
            return a
        s = self.log[a] + self.half
        if s >= self.qm1:
            s -= self.qm1
        return self.exp[s]

    def g_inv(self, a):
        s = self.qm1 - self.log[a]
        if s >= self.qm1:
            s -= self.qm1
        return self.exp[s]

    def q_mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        return self.g_mul(a, b)

    def q_add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        return self.g_add(a, b)

    def q_sub(self, a, b):
        if self.e == 1:
            return (a - b) % self.p
        return self.g_add(a, self.g_neg(b))


def _tabs(tabs) -> _T:
    key = id(tabs[3])
    hit = _cache.get(key)
    if hit is None or hit[0] is not tabs[3]:
        hit = (tabs[3], _T(tabs))
        _cache[key] = hit
    return hit[1]


def _elim(T: _T, A: list, pcols: int, piv: list | None = None) -> int:
    """Forward elimination of the row list ``A`` in place; returns the rank."""
    r = len(A)
    rank = 0
    for col in range(pcols):
        if rank == r:
            break
        pr = next((i for i in range(rank, r) if A[i][col]), None)
        if pr is None:
            continue
        A[rank], A[pr] = A[pr], A[rank]
        row = A[rank]
        inv = T.g_inv(row[col])
        if inv != 1:
            row = [T.q_mul(x, inv) for x in row]
            A[rank] = row
        for i in range(rank + 1, r):
            f = A[i][col]
            if f:
                A[i] = [T.q_sub(x, T.q_mul(f, y)) if y else x for x, y in zip(A[i], row)]
        if piv is not None:
            piv.append(col)
        rank += 1
    return rank


def _reduce_by(T: _T, u: list, E: list, piv: list) -> list:
    for row, pc in zip(E, piv):
        f = u[pc]
        if f:
            for j in range(pc, len(row)):
                if row[j]:
                    u[j] = T.q_sub(u[j], T.q_mul(f, row[j]))
    return u


def _dot(T: _T, v, col):
    x = 0
    for a, g in zip(v, col):
        if a:
            x = T.g_add(x, T.g_mul(a, g))
    return x


def _hyperplane_rows(T: _T, v) -> list:
    k = len(v)
    j0 = next(i for i, a in enumerate(v) if a)
    iv = T.g_inv(v[j0])
    rows = []
    for l in range(k):
        if l == j0:
            continue
        c = T.g_neg(T.g_mul(v[l], iv))
        for b in T.basis:
            row = [0] * (k * T.m)
            row[l * T.m : (l + 1) * T.m] = T.coords[b]
            row[j0 * T.m : (j0 + 1) * T.m] = T.coords[T.g_mul(c, b)]
            rows.append(row)
    return rows


def _point_rows(T: _T, v) -> list:
    rows = []
    for b in T.basis:
        row = []
        for a in v:
            row.extend(T.coords[T.g_mul(b, a)])
        rows.append(row)
    return rows


def _expand_columns(T: _T, B) -> list:
    cols = B.T.tolist()
    out = []
    for col in cols:
        row = []
        for x in col:
            row.extend(T.coords[x])
        out.append(row)
    return out


def rank_lists(tabs, vs, G, starts):
    T = _tabs(tabs)
    starts = [int(s) for s in starts]
    cols = G.T.tolist()
    out = np.zeros((len(vs), len(starts) - 1), dtype=np.int32)
    for pi, v in enumerate(vs.tolist()):
        for b in range(len(starts) - 1):
            rows = [list(T.coords[_dot(T, v, cols[j])]) for j in range(starts[b], starts[b + 1])]
            out[pi, b] = _elim(T, rows, T.m)
    return out


def section_dims(tabs, vs, B, starts, mode):
    T = _tabs(tabs)
    starts = [int(s) for s in starts]
    U = _expand_columns(T, B)
    km = B.shape[0] * T.m
    out = np.zeros((len(vs), len(starts) - 1), dtype=np.int32)
    for pi, v in enumerate(vs.tolist()):
        W = _hyperplane_rows(T, v) if mode == 0 else _point_rows(T, v)
        piv: list = []
        rw = _elim(T, W, km, piv)
        W = W[:rw]
        for b in range(len(starts) - 1):
            R = [_reduce_by(T, list(U[j]), W, piv) for j in range(starts[b], starts[b + 1])]
            out[pi, b] = len(R) - _elim(T, R, km)
    return out


def duality_flags(tabs, vs, G, starts):
    T = _tabs(tabs)
    starts = [int(s) for s in starts]
    U = _expand_columns(T, G)
    cols = G.T.tolist()
    km = G.shape[0] * T.m
    P = len(vs)
    flags = np.zeros(P, dtype=np.int8)
    dims = np.zeros((P, len(starts) - 1), dtype=np.int32)
    for pi, v in enumerate(vs.tolist()):
        W = _hyperplane_rows(T, v)
        piv: list = []
        rw = _elim(T, W, km, piv)
        W = W[:rw]
        ok = 1
        for b in range(len(starts) - 1):
            s0, s1 = starts[b], starts[b + 1]
            n = s1 - s0
            L = []
            for j in range(n):
                row = _reduce_by(T, list(U[s0 + j]), W, piv) + [0] * n
                row[km + j] = 1
                L.append(row)
            rl = _elim(T, L, km)
            Rm = []
            for j in range(n):
                row = list(T.coords[_dot(T, v, cols[s0 + j])]) + [0] * n
                row[T.m + j] = 1
                Rm.append(row)
            rr = _elim(T, Rm, T.m)
            dl, dr = n - rl, n - rr
            dims[pi, b] = dl
            if dl != dr:
                ok = 0
                continue
            S = []
            for lam in [r[km:] for r in L[rl:]] + [r[T.m :] for r in Rm[rr:]]:
                acc = [0] * km
                for j, c in enumerate(lam):
                    if c:
                        acc = [T.q_add(x, T.q_mul(c, y)) if y else x for x, y in zip(acc, U[s0 + j])]
                S.append(acc)
            if _elim(T, S, km) != dl:
                ok = 0
        flags[pi] = ok
    return flags, dims
