"""Skew polynomials F_{q^m}[x; sigma] with sigma(a) = a^{q^s}, gcd(s, m) = 1.

Multiplication follows x * a = sigma(a) * x.  Evaluation is the operator
evaluation f(beta)_a = sum_i f_i sigma^i(beta) N_i(a), where
N_i(a) = a sigma(a) ... sigma^{i-1}(a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegreeTooLarge, InvalidPair, SigmaMismatch, TooLarge, ValidationError, ZeroPolynomial
from .fqlin import rank_q
from .gf import Field

KERNEL_ENUM_LIMIT = 1 << 16


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True, eq=False)
class SkewPoly:
    field: Field
    coeffs: tuple
    sigma_power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))
        if math.gcd(self.sigma_power, self.field.m) != 1:
            raise ValidationError(f"sigma power {self.sigma_power} is not coprime to m={self.field.m}")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def sigma(self, a: int, i: int = 1) -> int:
        return self.field.frob(a, self.sigma_power * i)

    def _check(self, other: "SkewPoly"):
        if other.field != self.field or other.sigma_power != self.sigma_power:
            raise SigmaMismatch("operands use different fields or automorphisms")

    def __eq__(self, other):
        return isinstance(other, SkewPoly) and self.field == other.field and self.sigma_power == other.sigma_power and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.sigma_power, self.coeffs))

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(F, [F.add(self.coeff(i), other.coeff(i)) for i in range(n)], self.sigma_power)

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.field, [self.field.neg(c) for c in self.coeffs], self.sigma_power)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        F = self.field
        if not self.coeffs or not other.coeffs:
            return SkewPoly(F, [], self.sigma_power)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, self.sigma(b, i)))
        return SkewPoly(F, out, self.sigma_power)

    def to_json(self) -> dict:
        return {"sigma_power": self.sigma_power, "coeffs": [self.field.coeffs(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, F: Field, d: dict) -> "SkewPoly":
        return cls(F, [F.from_coeffs(c) for c in d["coeffs"]], d.get("sigma_power", 1))

    def __repr__(self):
        return f"SkewPoly(s={self.sigma_power}, coeffs={list(self.coeffs)})"


def monomial(F: Field, i: int, c: int = 1, s: int = 1) -> SkewPoly:
    return SkewPoly(F, [0] * i + [c], s)


def n_i(F: Field, a: int, i: int, s: int = 1) -> int:
    """N_i(a) = prod_{j<i} sigma^j(a); N_0(a) = 1."""
    out = 1
    for j in range(i):
        out = F.mul(out, F.frob(a, s * j))
    return out


def op_eval(f: SkewPoly, beta: int, a: int) -> int:
    F = f.field
    s = f.sigma_power
    out = 0
    for i, c in enumerate(f.coeffs):
        if c:
            out = F.add(out, F.mul(c, F.mul(f.sigma(beta, i), n_i(F, a, i, s))))
    return out


def remainder_eval(f: SkewPoly, beta: int) -> int:
    """Plain evaluation sum_i f_i sigma^i(beta), i.e. op_eval at a = 1."""
    return op_eval(f, beta, 1)


def eval_inf(f: SkewPoly, delta: int, k: int) -> int:
    """The evaluation at infinity for the space of degree < k: delta * f_{k-1}."""
    if f.degree >= k:
        raise DegreeTooLarge(f"degree {f.degree} is not below {k}")
    return f.field.mul(delta, f.coeff(k - 1))


def eval_zero(f: SkewPoly, gamma: int) -> int:
    """f(gamma)_0 = f_0 * gamma."""
    return op_eval(f, gamma, 0)


@dataclass(frozen=True, eq=False)
class EvaluationPair:
    """Points a_1..a_t with distinct norms and F_q-independent beta_1..beta_n."""

    field: Field
    a: tuple
    beta: tuple
    sigma_power: int = 1

    def __post_init__(self):
        F = self.field
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "beta", tuple(int(x) for x in self.beta))
        if not self.a or not self.beta:
            raise InvalidPair("need at least one point and one beta")
        if any(x == 0 for x in self.a):
            raise InvalidPair("evaluation points must be nonzero")
        norms = [F.norm(x) for x in self.a]
        if len(set(norms)) != len(norms):
            raise InvalidPair("norms of the evaluation points are not distinct")
        if rank_q(F, self.beta) != len(self.beta):
            raise InvalidPair("beta is not F_q-linearly independent")
        if math.gcd(self.sigma_power, F.m) != 1:
            raise InvalidPair("sigma power must be coprime to m")

    @property
    def t(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.beta)

    def to_json(self) -> dict:
        F = self.field
        return {"a": [F.coeffs(x) for x in self.a], "beta": [F.coeffs(x) for x in self.beta], "sigma_power": self.sigma_power}


def default_pair(F: Field, t: int, n: int, s: int = 1) -> EvaluationPair:
    """a_i = g^{i-1} for the fixed primitive g and beta_j = z^{j-1}."""
    if n > F.m:
        raise InvalidPair(f"at most m={F.m} independent betas exist")
    if t > F.q - 1:
        raise InvalidPair(f"at most q-1={F.q - 1} distinct norms exist")
    return EvaluationPair(F, tuple(F.gpow(i) for i in range(t)), tuple(F.basis[:n]), s)


def ev_multi(f: SkewPoly, pair: EvaluationPair) -> list[tuple]:
    """Blocks (f(beta_j)_{a_i})_j, one per evaluation point a_i."""
    if f.sigma_power != pair.sigma_power or f.field != pair.field:
        raise SigmaMismatch("polynomial and pair disagree on the automorphism")
    return [tuple(op_eval(f, b, a) for b in pair.beta) for a in pair.a]


def kernel_dim(f: SkewPoly) -> int:
    """F_q-dimension of {beta : sum_i f_i sigma^i(beta) = 0}, by enumeration."""
    F = f.field
    if not f.coeffs:
        raise ZeroPolynomial("the zero polynomial has the whole field as kernel")
    if F.order > KERNEL_ENUM_LIMIT:
        raise TooLarge(f"kernel enumeration limited to {KERNEL_ENUM_LIMIT} elements")
    els = np.arange(F.order, dtype=np.int64)
    acc = np.zeros_like(els)
    for i, c in enumerate(f.coeffs):
        if c:
            fr = _frob_arr(F, els, f.sigma_power * i)
            acc = F.add_arr(acc, F.mul_arr(fr, c))
    roots = int((acc == 0).sum())
    d = round(math.log(roots, F.q))
    assert F.q**d == roots
    return d


def _frob_arr(F: Field, xs: np.ndarray, s: int) -> np.ndarray:
    ex = pow(F.q, s % F.m, F.order - 1) if F.order > 2 else 1
    out = np.zeros_like(xs)
    nz = xs != 0
    out[nz] = F.exp_np[(F.log_np[xs[nz]] * ex) % (F.order - 1)]
    return out
