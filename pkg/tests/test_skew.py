import numpy as np
import pytest

from sumrank.errors import DegreeTooLarge, InvalidPair, SigmaMismatch, ValidationError, ZeroPolynomial
from sumrank.gf import make_field
from sumrank.skew import (
    EvaluationPair,
    SkewPoly,
    default_pair,
    eval_inf,
    eval_zero,
    ev_multi,
    kernel_dim,
    monomial,
    n_i,
    op_eval,
    remainder_eval,
)


def rand_poly(F, rng, deg, s=1):
    return SkewPoly(F, rng.integers(0, F.order, deg + 1).tolist(), s)


def test_twisted_commutation(f8):
    F = f8
    x = monomial(F, 1)
    for a in range(F.order):
        c = SkewPoly(F, [a])
        assert x * c == SkewPoly(F, [F.frob(a)]) * x


@pytest.mark.parametrize("s", [1, 2])
def test_product_evaluates_as_composition(s):
    F = make_field(2, 1, 3)
    rng = np.random.default_rng(s)
    for _ in range(100):
        f, g = rand_poly(F, rng, 3, s), rand_poly(F, rng, 2, s)
        beta, a = (int(v) for v in rng.integers(0, F.order, 2))
        assert op_eval(f * g, beta, a) == op_eval(f, op_eval(g, beta, a), a)


def test_norms_and_evaluations(f9):
    F = f9
    for a in range(F.order):
        assert n_i(F, a, 0) == 1
        assert n_i(F, a, F.m) == F.norm(a)
    f = SkewPoly(F, [3, 0, 5])
    for b in range(F.order):
        assert remainder_eval(f, b) == F.add(F.mul(3, b), F.mul(5, F.frob(b, 2)))
        assert eval_zero(f, b) == F.mul(3, b)
    assert eval_inf(f, 4, 3) == F.mul(4, 5)
    with pytest.raises(DegreeTooLarge):
        eval_inf(f, 4, 2)


def test_kernel_dimension_by_counting(f8):
    F = f8
    rng = np.random.default_rng(8)
    for _ in range(50):
        f = rand_poly(F, rng, int(rng.integers(0, 3)))
        if f.degree < 0:
            continue
        roots = sum(1 for b in range(F.order) if remainder_eval(f, b) == 0)
        d = kernel_dim(f)
        assert 2**d == roots and d <= f.degree
    with pytest.raises(ZeroPolynomial):
        kernel_dim(SkewPoly(F, []))


def test_pairs(f9):
    F = f9
    P = default_pair(F, 2, 2)
    assert len({F.norm(a) for a in P.a}) == 2
    with pytest.raises(InvalidPair):
        EvaluationPair(F, (1, 1), P.beta)
    with pytest.raises(InvalidPair):
        EvaluationPair(F, (1,), (1, 2))
    with pytest.raises(InvalidPair):
        default_pair(F, 3, 2)
    with pytest.raises(InvalidPair):
        EvaluationPair(F, (0,), (1,))
    f = SkewPoly(F, [1, 1])
    blocks = ev_multi(f, P)
    assert blocks == [tuple(op_eval(f, b, a) for b in P.beta) for a in P.a]


def test_sigma_validation():
    F = make_field(2, 1, 4)
    with pytest.raises(ValidationError):
        SkewPoly(F, [1], 2)
    with pytest.raises(SigmaMismatch):
        SkewPoly(F, [1], 1) * SkewPoly(F, [1], 3)


def test_json(f9):
    f = SkewPoly(f9, [0, 3, 4], 1)
    assert SkewPoly.from_json(f9, f.to_json()) == f
