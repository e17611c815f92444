"""Finite field tower F_p ⊂ F_q ⊂ F_{q^m} with table-backed arithmetic.

An element of F_{q^m} = F_p[z]/(f) is a plain ``int``: its coefficient vector
(c_0, ..., c_{em-1}) packed as ``sum(c_i * p**i)``.  Multiplication uses
discrete log/exp tables, addition is XOR in characteristic 2 and a Zech
logarithm lookup otherwise.  F_q sits inside as the fixed field of x -> x^q and
the fixed F_q-basis of F_{q^m} is {1, z, ..., z^{m-1}}.

Canonical element order compares coefficient vectors lexicographically,
lowest degree first.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldTooLarge, NotPrime, ReducibleModulus, ValidationError
from .polyring import PrimeField, is_irreducible, is_irreducible_gf2, is_prime, prime_factors

MAX_ORDER = 1 << 20


def _digits(xs: np.ndarray, p: int, n: int) -> np.ndarray:
    out = np.empty((len(xs), n), dtype=np.int64)
    cur = np.asarray(xs, dtype=np.int64).copy()
    for i in range(n):
        out[:, i] = cur % p
        cur //= p
    return out


def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``n`` over F_p.

    Coefficient vectors are compared from the constant term upwards.
    """
    Fp = PrimeField(p)
    for low in itertools.product(range(p), repeat=n):
        f = list(low) + [1]
        if p == 2:
            if is_irreducible_gf2(sum(c << i for i, c in enumerate(f))):
                return tuple(f)
        elif is_irreducible(Fp, f):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class Field:
    """The field F_{q^m} with q = p^e, carrying the F_q-structure.

    Build instances with :func:`make_field`; they are cached and compare equal
    when ``(p, e, m, modulus)`` agree.
    """

    def __init__(self, p: int, e: int, m: int, modulus: Sequence[int]):
        self.p, self.e, self.m = p, e, m
        self.q = p**e
        self.degree = e * m
        self.order = p ** (e * m)
        self.modulus = tuple(int(c) for c in modulus)
        self._build()

    # ------------------------------------------------------------------ setup
    def _mul_matrix(self, h: int) -> np.ndarray:
        """Matrix over F_p of y -> h*y acting on digit column vectors."""
        p, n = self.p, self.degree
        red = np.array(self.modulus[:n], dtype=np.int64)
        col = _digits(np.array([h]), p, n)[0]
        M = np.zeros((n, n), dtype=np.int64)
        for j in range(n):
            M[:, j] = col
            top = col[n - 1]
            col = np.concatenate(([0], col[:-1]))
            col = (col - top * red) % p
        return M

    def _slow_mul(self, a: int, b: int) -> int:
        p, n = self.p, self.degree
        d = self._mul_matrix(b) @ _digits(np.array([a]), p, n)[0] % p
        return int(d @ self._pw)

    def _slow_pow(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self._slow_mul(r, a)
            k >>= 1
            if k:
                a = self._slow_mul(a, a)
        return r

    def _build(self):
        p, n, Q = self.p, self.degree, self.order
        self._pw = p ** np.arange(n, dtype=np.int64)
        everything = np.arange(Q, dtype=np.int64)
        dig = _digits(everything, p, n)
        # canonical order: lexicographic on (c_0, c_1, ...)
        self.rank = dig @ (p ** np.arange(n - 1, -1, -1, dtype=np.int64))
        self.canon = np.empty(Q, dtype=np.int64)
        self.canon[self.rank] = everything

        factors = prime_factors(Q - 1) if Q > 2 else []
        g = None
        for cand in self.canon[1:]:
            cand = int(cand)
            if all(self._slow_pow(cand, (Q - 1) // r) != 1 for r in factors):
                g = cand
                break
        assert g is not None
        self.primitive = g

        # exp table by doubling: rows of E are digit vectors of g^i
        E = np.zeros((1, n), dtype=np.int64)
        E[0, 0] = 1
        step = self._mul_matrix(g)
        while len(E) < Q - 1:
            E = np.vstack([E, (E @ step.T) % p])
            step = (step @ step) % p
        E = E[: Q - 1]
        exp = E @ self._pw
        if len(np.unique(exp)) != Q - 1:
            raise ReducibleModulus(f"modulus {list(self.modulus)} is not irreducible")
        log = np.full(Q, -1, dtype=np.int64)
        log[exp] = np.arange(Q - 1, dtype=np.int64)
        d0 = exp % p
        one_plus = exp - d0 + (d0 + 1) % p
        zech = np.where(one_plus == 0, -1, log[one_plus])
        self.exp_np, self.log_np, self.zech_np = exp, log, zech
        self._exp = exp.tolist() * 2
        self._log = log.tolist()
        self._zech = zech.tolist()
        self._qm1 = Q - 1
        self._half = (Q - 1) // 2

        self.z = self.from_coeffs([0, 1]) if n >= 2 else (-self.modulus[0]) % p
        self.basis = tuple(self.pow(self.z, j) for j in range(self.m))

        if self.e == 1:
            self.subfield = tuple(range(p))
            self.coords_np = dig
        else:
            w = self.pow(g, (Q - 1) // (self.q - 1))
            sub = np.array([0] + [self.pow(w, j) for j in range(self.q - 1)], dtype=np.int64)
            sub = sub[np.argsort(self.rank[sub])]
            self.subfield = tuple(int(s) for s in sub)
            vals = np.zeros(1, dtype=np.int64)
            co = np.zeros((1, 0), dtype=np.int64)
            for zj in self.basis:
                terms = self.mul_arr(sub, np.full_like(sub, zj))
                vals = self.add_arr(vals[:, None], terms[None, :]).reshape(-1)
                co = np.hstack([np.repeat(co, len(sub), axis=0), np.tile(sub, len(co))[:, None]])
            table = np.zeros((Q, self.m), dtype=np.int64)
            table[vals] = co
            self.coords_np = table
        self.coords_np.setflags(write=False)
        self._fq_setup()

    def _fq_setup(self):
        p = self.p
        if self.e == 1:
            self.fq_add = lambda a, b: (a + b) % p
            self.fq_sub = lambda a, b: (a - b) % p
            self.fq_mul = lambda a, b: (a * b) % p
            self.fq_neg = lambda a: (-a) % p
            self.fq_inv = lambda a: pow(a, p - 2, p)
        else:
            self.fq_add, self.fq_sub, self.fq_mul = self.add, self.sub, self.mul
            self.fq_neg, self.fq_inv = self.neg, self.inv

    # ------------------------------------------------------------- identity
    @property
    def key(self) -> tuple:
        return (self.p, self.e, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __reduce__(self):
        return (_cached_field, self.key)

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e}, m={self.m}, modulus={list(self.modulus)})"

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "m": self.m, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(d: dict) -> "Field":
        return make_field(d["p"], d["e"], d["m"], d.get("modulus"))

    # ----------------------------------------------------------- conversion
    def coeffs(self, x: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def from_coeffs(self, cs: Sequence[int]) -> int:
        """Reduce a coefficient vector of any length modulo the modulus."""
        cs = [int(c) % self.p for c in cs]
        n = self.degree
        red = self.modulus
        for top in range(len(cs) - 1, n - 1, -1):
            c = cs[top]
            if c:
                for i in range(n):
                    cs[top - n + i] = (cs[top - n + i] - c * red[i]) % self.p
                cs[top] = 0
        x = 0
        for i in range(min(n, len(cs)) - 1, -1, -1):
            x = x * self.p + cs[i]
        return x

    def coords(self, x: int) -> tuple[int, ...]:
        """F_q-coordinates of ``x`` in the basis 1, z, ..., z^{m-1}."""
        if self.e == 1:
            return tuple(self.coeffs(x))
        return tuple(int(c) for c in self.coords_np[x])

    def from_coords(self, cs: Sequence[int]) -> int:
        x = 0
        for c, b in zip(cs, self.basis):
            x = self.add(x, self.mul(c, b))
        return x

    def sort_key(self, x: int) -> int:
        return int(self.rank[x])

    def elements(self) -> list[int]:
        """All elements in canonical order."""
        return self.canon.tolist()

    # ----------------------------------------------------------- arithmetic
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        d = self._log[b] - la
        if d < 0:
            d += self._qm1
        zz = self._zech[d]
        if zz < 0:
            return 0
        return self._exp[la + zz]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return self._exp[self._log[a] + self._half]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[self._qm1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % self._qm1]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def gpow(self, i: int) -> int:
        """Power of the fixed primitive element."""
        return self._exp[i % self._qm1]

    def frob(self, x: int, s: int = 1) -> int:
        """The automorphism x -> x^{q^s} (s may be negative)."""
        if x == 0:
            return 0
        ex = pow(self.q, s % self.m, self._qm1) if self._qm1 > 1 else 0
        return self._exp[(self._log[x] * ex) % self._qm1]

    def norm(self, x: int) -> int:
        """Relative norm to F_q."""
        return self.pow(x, self._qm1 // (self.q - 1))

    def trace(self, x: int) -> int:
        """Relative trace to F_q."""
        t = 0
        for i in range(self.m):
            t = self.add(t, self.frob(x, i))
        return t

    def in_subfield(self, x: int, r: int = 1) -> bool:
        """True when ``x`` lies in F_{q^r}."""
        return self.frob(x, r) == x if r % self.m else True

    def subfield_elements(self, r: int) -> list[int]:
        """Elements of F_{q^r} in canonical order (``r`` must divide ``m``)."""
        if self.m % r:
            raise ValidationError(f"{r} does not divide m={self.m}")
        size = self.q**r
        w = self.gpow(self._qm1 // (size - 1))
        els = [0] + [self.pow(w, j) for j in range(size - 1)]
        return sorted(els, key=self.sort_key)

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        s = 0
        for a, b in zip(u, v):
            if a and b:
                s = self.add(s, self._exp[self._log[a] + self._log[b]])
        return s

    # ------------------------------------------------------- vectorised ops
    def mul_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        if self._qm1:
            out[nz] = self.exp_np[(self.log_np[a[nz]] + self.log_np[b[nz]]) % self._qm1]
        return out

    def add_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        a, b = np.broadcast_arrays(a, b)
        out = np.where(a == 0, b, a).astype(np.int64)
        both = (a != 0) & (b != 0)
        la = self.log_np[a[both]]
        d = (self.log_np[b[both]] - la) % self._qm1
        zz = self.zech_np[d]
        res = np.where(zz < 0, 0, self.exp_np[(la + np.maximum(zz, 0)) % self._qm1])
        out[both] = res
        return out


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, e: int, m: int, modulus: tuple) -> Field:
    return Field(p, e, m, modulus)


def make_field(p: int, e: int = 1, m: int = 1, modulus: Iterable[int] | None = None) -> Field:
    """Construct (or fetch from cache) the field F_{q^m} with q = p^e.

    ``modulus`` is a monic irreducible polynomial over F_p of degree e*m,
    low-degree coefficient first.  When omitted, the lexicographically
    smallest such polynomial is used.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1 or m < 1:
        raise ValidationError("e and m must be positive")
    n = e * m
    if p**n > MAX_ORDER:
        raise FieldTooLarge(f"field order {p}^{n} exceeds {MAX_ORDER}")
    if modulus is None:
        mod = default_modulus(p, n)
    else:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != n + 1 or mod[-1] != 1 or any(not 0 <= c < p for c in mod):
            raise ReducibleModulus(f"modulus must be monic of degree {n} with entries mod {p}")
        if not is_irreducible(PrimeField(p), list(mod)):
            raise ReducibleModulus(f"modulus {list(mod)} is reducible over F_{p}")
    return _cached_field(p, e, m, mod)


def subfield(F: Field) -> tuple[int, ...]:
    """The elements of F_q inside ``F``."""
    return F.subfield
