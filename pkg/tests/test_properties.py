"""Seeded property suites; every test checks at least CASES instances."""

import numpy as np
import pytest

from sumrank.errors import ValidationError
from sumrank.fqlin import FqSubspace, fq_inverse, rank_q
from sumrank.gf import make_field
from sumrank.skew import SkewPoly, kernel_dim, op_eval
from sumrank.srcode import random_code, sum_fq, support, weight_distribution

CASES = 1000
FIELDS = [(2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 2), (2, 1, 5), (3, 1, 3)]


def _rng(name):
    return np.random.default_rng(sum(map(ord, name)))


def _gl(F, n, rng):
    while True:
        A = [[F.subfield[int(i)] for i in row] for row in rng.integers(0, F.q, size=(n, n))]
        try:
            fq_inverse(F, A)
            return A
        except ValidationError:
            continue


@pytest.mark.parametrize("fargs", FIELDS)
def test_field_axioms(fargs):
    F = make_field(*fargs)
    rng = _rng("axioms")
    n = 0
    for a, b, c in rng.integers(0, F.order, size=(CASES, 3)).tolist():
        assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0 and F.add(a, 0) == a and F.mul(a, 1) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
        n += 1
    assert n >= CASES


@pytest.mark.parametrize("fargs", FIELDS)
def test_sigma_and_norm(fargs):
    F = make_field(*fargs)
    rng = _rng("sigma")
    for a, b in rng.integers(0, F.order, size=(CASES, 2)).tolist():
        for s in range(1, F.m + 1):
            assert F.frob(F.add(a, b), s) == F.add(F.frob(a, s), F.frob(b, s))
            assert F.frob(F.mul(a, b), s) == F.mul(F.frob(a, s), F.frob(b, s))
        assert F.frob(a, F.m) == a
        assert F.norm(F.mul(a, b)) == F.mul(F.norm(a), F.norm(b))
        assert F.in_subfield(F.norm(a))


@pytest.mark.parametrize("fargs", [(2, 1, 3), (3, 1, 2), (2, 2, 2), (2, 1, 4)])
def test_rank_invariance(fargs):
    F = make_field(*fargs)
    rng = _rng("rank")
    for _ in range(CASES):
        n = int(rng.integers(1, 5))
        x = rng.integers(0, F.order, n).tolist()
        r = rank_q(F, x)
        c = int(rng.integers(1, F.order))
        assert rank_q(F, [F.mul(c, a) for a in x]) == r
        A = _gl(F, n, rng)
        xa = [sum_fq(F, x, [A[i][j] for i in range(n)]) for j in range(n)]
        assert rank_q(F, xa) == r
        assert r <= min(n, F.m)


@pytest.mark.parametrize("fargs,s", [((2, 1, 3), 1), ((2, 1, 3), 2), ((3, 1, 2), 1), ((2, 1, 4), 3)])
def test_skew_associativity(fargs, s):
    F = make_field(*fargs)
    rng = _rng("assoc")
    for _ in range(CASES):
        f, g, h = (SkewPoly(F, rng.integers(0, F.order, int(rng.integers(0, 4))).tolist(), s) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


@pytest.mark.parametrize("fargs", [(2, 1, 3), (3, 1, 2), (2, 2, 2)])
def test_op_eval_linearity(fargs):
    F = make_field(*fargs)
    rng = _rng("linear")
    for _ in range(CASES):
        f = SkewPoly(F, rng.integers(0, F.order, 3).tolist())
        g = SkewPoly(F, rng.integers(0, F.order, 3).tolist())
        b1, b2, a = (int(v) for v in rng.integers(0, F.order, 3))
        c = F.subfield[int(rng.integers(0, F.q))]
        assert op_eval(f, F.add(b1, b2), a) == F.add(op_eval(f, b1, a), op_eval(f, b2, a))
        assert op_eval(f, F.mul(c, b1), a) == F.mul(c, op_eval(f, b1, a))
        assert op_eval(f + g, b1, a) == F.add(op_eval(f, b1, a), op_eval(g, b1, a))


@pytest.mark.parametrize("fargs", [(2, 1, 4), (3, 1, 2)])
def test_kernel_dim_bounded_by_degree(fargs):
    F = make_field(*fargs)
    rng = _rng("kernel")
    n = 0
    while n < CASES:
        f = SkewPoly(F, rng.integers(0, F.order, int(rng.integers(1, F.m + 2))).tolist())
        if f.degree < 0:
            continue
        d = kernel_dim(f)
        assert 0 <= d <= min(f.degree, F.m)
        n += 1


@pytest.mark.parametrize("fargs", [(2, 1, 3), (3, 1, 2)])
def test_support_equivariance(fargs):
    F = make_field(*fargs)
    rng = _rng("support")
    prof = (3, 2) if F.m == 3 else (2, 2)
    for _ in range(CASES):
        x = rng.integers(0, F.order, sum(prof)).tolist()
        a = [int(v) for v in rng.integers(1, F.order, len(prof))]
        As = [_gl(F, n, rng) for n in prof]
        y, s = [], 0
        for ai, A, n in zip(a, As, prof):
            blk = x[s : s + n]
            y.extend(F.mul(ai, sum_fq(F, blk, [A[i][j] for i in range(n)])) for j in range(n))
            s += n
        for Sx, Sy, A, n in zip(support(F, x, prof), support(F, y, prof), As, prof):
            assert Sx.dim == Sy.dim
            if Sx.dim:
                img = [
                    tuple(sum_fq(F, lam, [A[i][j] for i in range(n)]) for j in range(n)) for lam in Sx.basis
                ]
                assert Sy.same_as(FqSubspace(F, n, tuple(img)))


def test_singleton_bound_never_violated():
    rng = _rng("singleton")
    specs = [((2, 1, 2), (2, 1)), ((2, 1, 2), (2, 2, 1)), ((3, 1, 2), (2, 1, 1)), ((2, 1, 3), (3, 2)), ((2, 2, 2), (2, 2))]
    n = 0
    for i in range(CASES):
        fargs, prof = specs[i % len(specs)]
        F = make_field(*fargs)
        k = int(rng.integers(1, sum(prof) + 1))
        C = random_code(F, prof, k, rng, nondegenerate=False)
        assert weight_distribution(C).min_distance <= C.singleton_bound()
        n += 1
    assert n >= CASES
