"""Brute-force reference computations used by the tests.

Everything here works from first principles on small fields: polynomial
arithmetic on coefficient lists and enumeration of F_q-combinations.
"""

from __future__ import annotations

import itertools
from collections import Counter


def poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    n = len(mod) - 1
    for d in range(len(out) - 1, n - 1, -1):
        c = out[d]
        if c:
            for j in range(n + 1):
                out[d - n + j] = (out[d - n + j] - c * mod[j]) % p
    return (out + [0] * n)[:n]


def is_irreducible_naive(f, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            r = list(f)
            for s in range(len(r) - 1, d - 1, -1):
                c = r[s]
                if c:
                    for j in range(d + 1):
                        r[s - d + j] = (r[s - d + j] - c * g[j]) % p
            if not any(r[:d]):
                return False
    return True


def span_size(F, vecs):
    """Number of distinct F_q-combinations of the given F_{q^m}-vectors."""
    seen = set()
    sub = F.subfield
    for lam in itertools.product(sub, repeat=len(vecs)):
        acc = [0] * (len(vecs[0]) if vecs else 0)
        for c, v in zip(lam, vecs):
            acc = [F.add(x, F.mul(c, y)) for x, y in zip(acc, v)]
        seen.add(tuple(acc))
    return len(seen)


def rank_q_brute(F, xs):
    if not xs:
        return 0
    size = span_size(F, [[x] for x in xs])
    r = 0
    while F.q**r < size:
        r += 1
    assert F.q**r == size
    return r


def encode(F, v, G):
    out = []
    for j in range(len(G[0])):
        s = 0
        for i in range(len(G)):
            s = F.add(s, F.mul(v[i], G[i][j]))
        out.append(s)
    return out


def rank_list_brute(F, x, lengths):
    out, s = [], 0
    for n in lengths:
        out.append(rank_q_brute(F, x[s : s + n]))
        s += n
    return tuple(out)


def weight_distribution_brute(F, G, lengths):
    """Sum-rank weights of every nonzero codeword, divided by q^m - 1."""
    k = len(G)
    w = Counter()
    for v in itertools.product(range(F.order), repeat=k):
        if any(v):
            w[sum(rank_list_brute(F, encode(F, v, G), lengths))] += 1
    assert all(c % (F.order - 1) == 0 for c in w.values())
    return {a: c // (F.order - 1) for a, c in sorted(w.items())}


def projective_points_brute(F, k):
    """Normalized representatives of PG(k-1, q^m), collected as a set."""
    pts = set()
    for v in itertools.product(range(F.order), repeat=k):
        if any(v):
            lead = next(x for x in v if x)
            inv = F.inv(lead)
            pts.add(tuple(F.mul(inv, x) for x in v))
    return pts
