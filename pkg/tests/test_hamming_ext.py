import itertools

import numpy as np
import pytest

from sumrank.errors import DegenerateCode, TooLarge
from sumrank.gf import make_field
from sumrank.geometry import psi
from sumrank.hamming_ext import (
    bonisoli_constraints,
    ext,
    ext_formula_check,
    feasible_profiles,
    g_ext,
    hamming_distance_from_ranks,
    hamming_weight_formula,
    rank_range,
)
from sumrank.srcode import SumRankCode, random_code


def test_ext_multiset_size(f4):
    C = random_code(f4, (2, 2, 1), 2, np.random.default_rng(1))
    ms = ext(psi(C))
    assert ms.size == 3 + 3 + 1
    G = g_ext(C)
    assert len(G) == 2 and len(G[0]) == 7


def test_formula_matches_direct_weights(f4):
    rng = np.random.default_rng(2)
    for prof in [(2, 1), (2, 2), (2, 2, 1)]:
        C = random_code(f4, prof, 2, rng)
        r = ext_formula_check(C)
        assert r.mismatches == 0 and r.points == 5
        G = g_ext(C)
        direct = min(
            sum(1 for j in range(len(G[0])) if f4.add(f4.mul(v[0], G[0][j]), f4.mul(v[1], G[1][j])))
            for v in itertools.product(range(4), repeat=2)
            if any(v)
        )
        assert hamming_distance_from_ranks(C) == direct


def test_formula_values():
    assert hamming_weight_formula((2, 1), (2, 1), 2) == 3 + 1
    assert hamming_weight_formula((0, 0), (2, 1), 3) == 0


def test_degenerate_rejected(f4):
    with pytest.raises(DegenerateCode):
        g_ext(SumRankCode(f4, (2,), [[1, 1]]))


def test_column_limit():
    F = make_field(2, 1, 17)
    C = SumRankCode(F, (17,), [list(F.basis)])
    with pytest.raises(TooLarge):
        g_ext(C)


def test_constraints_and_feasibility():
    assert feasible_profiles(2, 2, 2, 3, 5) == [(2, 2, 2, 2, 1)]
    c = bonisoli_constraints(2, 2, 2, 3, 5, (2, 2, 2, 2, 1))
    assert c["ell"] == "7/1" and c["lhs"] == c["rhs"] == 420
    assert list(rank_range(2, 2, 2, 3)) == [1, 2]
    assert list(rank_range(2, 3, 2, 2)) == [0, 1, 2]
