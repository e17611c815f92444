"""Dense univariate polynomials over a finite field.

Coefficient lists are low-degree-first.  The coefficient arithmetic comes from
any object exposing ``add``, ``sub``, ``mul``, ``inv`` and ``order``; both
:class:`PrimeField` and :class:`sumrank.gf.Field` qualify.
"""

from __future__ import annotations

from typing import Sequence


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` or ``None``."""
    if q < 2:
        return None
    fs = prime_factors(q)
    if len(fs) != 1:
        return None
    p = fs[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


class PrimeField:
    """Integers modulo a prime, with the same call surface as ``Field``."""

    def __init__(self, p: int):
        self.p = p
        self.order = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)


def trim(f: Sequence[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_sub(F, f, g):
    n = max(len(f), len(g))
    out = [F.sub(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0) for i in range(n)]
    return trim(out)


def poly_mul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def poly_divmod(F, f, g):
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(f)
    dg = len(g) - 1
    lead_inv = F.inv(g[-1])
    if len(r) <= dg:
        return [], r
    quo = [0] * (len(r) - dg)
    while len(r) - 1 >= dg and r:
        c = F.mul(r[-1], lead_inv)
        shift = len(r) - 1 - dg
        quo[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, b))
        r = trim(r)
    return trim(quo), r


def poly_mod(F, f, g):
    return poly_divmod(F, f, g)[1]


def poly_gcd(F, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, poly_mod(F, f, g)
    if f:
        c = F.inv(f[-1])
        f = [F.mul(c, a) for a in f]
    return f


def poly_powmod(F, base, n: int, mod):
    result = [1]
    base = poly_mod(F, base, mod)
    while n:
        if n & 1:
            result = poly_mod(F, poly_mul(F, result, base), mod)
        n >>= 1
        if n:
            base = poly_mod(F, poly_mul(F, base, base), mod)
    return result


def is_irreducible(F, f: Sequence[int]) -> bool:
    """Ben-Or irreducibility test over the finite field ``F``.

    Looks for a factor of degree i = 1, 2, ... via gcd(x^{|F|^i} - x, f), so
    most reducible inputs are rejected after a step or two.
    """
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = poly_powmod(F, h, F.order, f)
        if len(poly_gcd(F, f, poly_sub(F, h, x))) != 1:
            return False
    return True


def _gf2_mulmod(a: int, b: int, f: int, n: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> n) & 1:
            a ^= f
    return r


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        while a.bit_length() >= b.bit_length() and a:
            a ^= b << (a.bit_length() - b.bit_length())
        a, b = b, a
    return a


def is_irreducible_gf2(f: int) -> bool:
    """Ben-Or over F_2 with polynomials packed into ints (bit i = x^i)."""
    n = f.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    h = 2
    for _ in range(n // 2):
        h = _gf2_mulmod(h, h, f, n)
        if _gf2_gcd(f, h ^ 2) != 1:
            return False
    return True
