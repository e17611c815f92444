import numpy as np
import pytest

from oracles import rank_list_brute, weight_distribution_brute
from sumrank.errors import BadDimension, FullSpace, IllegalPermutation, ProfileMismatch, ValidationError
from sumrank.fqlin import FqSubspace, fq_inverse
from sumrank.gf import make_field
from sumrank.srcode import (
    BlockProfile,
    SumRankCode,
    apply_isometry,
    dual,
    dual_has_weight_one,
    is_nondegenerate,
    random_code,
    sum_fq,
    sum_rank_weight,
    support,
    weight_distribution,
)

CASES = [((2, 1, 2), (2, 1), 1), ((2, 1, 2), (2, 2, 1), 2), ((3, 1, 2), (2, 1), 2), ((2, 1, 3), (3, 2), 2), ((2, 2, 2), (2, 1), 1)]


@pytest.mark.parametrize("fargs,profile,k", CASES)
def test_weight_distribution_matches_brute_force(fargs, profile, k):
    F = make_field(*fargs)
    rng = np.random.default_rng(11)
    for _ in range(4):
        C = random_code(F, profile, k, rng, nondegenerate=False)
        wd = weight_distribution(C)
        assert wd.by_weight == weight_distribution_brute(F, C.rows(), profile)
        assert wd.total == (F.order**k - 1) // (F.order - 1)
        assert wd.min_distance <= C.singleton_bound()


def test_rank_data_and_support(f8):
    F = f8
    rng = np.random.default_rng(2)
    prof = BlockProfile((3, 2))
    for _ in range(50):
        x = rng.integers(0, F.order, 5).tolist()
        rd = sum_rank_weight(F, x, prof)
        assert rd.rank_list == rank_list_brute(F, x, (3, 2))
        assert rd.weight == sum(rd.rank_list)
        assert tuple(S.dim for S in support(F, x, prof)) == rd.rank_list


def test_profile_validation():
    assert BlockProfile((3, 2, 2)).starts == (0, 3, 5, 7)
    with pytest.raises(ValidationError):
        BlockProfile((1, 2))
    with pytest.raises(ValidationError):
        BlockProfile(())


def test_code_validation(f4):
    F = f4
    with pytest.raises(ProfileMismatch):
        SumRankCode(F, (2, 1), [[1, 0]])
    with pytest.raises(BadDimension):
        SumRankCode(F, (2, 1), [[1, 0, 0], [0, 0, 0]])
    with pytest.raises(BadDimension):
        SumRankCode(F, (2, 1), [[1, 2, 3], [2, 3, 1]])
    with pytest.raises(ValidationError):
        SumRankCode(F, (2, 1), [[1, 0, 9]])


def test_json_roundtrip(f9):
    C = random_code(f9, (2, 2, 1), 2, np.random.default_rng(0))
    D = SumRankCode.from_json(C.to_json())
    assert D.same_code(C) and D.profile == C.profile


def test_dual(f4):
    F = f4
    C = random_code(F, (2, 2, 1), 2, np.random.default_rng(5))
    D = dual(C)
    assert D.k == C.N - C.k
    for r in C.rows():
        for s in D.rows():
            assert F.dot(r, s) == 0
    with pytest.raises(FullSpace):
        dual(SumRankCode(F, (1,), [[1]]))


def test_dual_weight_one_by_enumeration(f4):
    F = f4
    rng = np.random.default_rng(9)
    for _ in range(30):
        C = random_code(F, (2, 1), 1, rng, nondegenerate=False)
        brute = any(
            sum(rank_list_brute(F, x, (2, 1))) == 1 and all(F.dot(r, x) == 0 for r in C.rows())
            for x in (tuple(v) for v in np.ndindex(4, 4, 4))
            if any(x)
        )
        assert dual_has_weight_one(C) == brute
        assert is_nondegenerate(C) == (not brute)


def test_isometry_preserves_weights(f8):
    F = f8
    rng = np.random.default_rng(4)
    C = random_code(F, (2, 2, 1), 2, rng)
    A = [[[1, 1], [0, 1]], [[0, 1], [1, 0]], [[1]]]
    D = apply_isometry(C, [F.z, 3, 5], A, [1, 0, 2])
    assert weight_distribution(D).by_weight == weight_distribution(C).by_weight
    assert weight_distribution(D).by_profile == weight_distribution(C).by_profile
    with pytest.raises(IllegalPermutation):
        apply_isometry(C, [1, 1, 1], A, [2, 1, 0])
    with pytest.raises(ValidationError):
        apply_isometry(C, [0, 1, 1], A)


def test_support_equivariance(f8):
    """supp(a x A) = supp(x) A for a in F_{q^m}^* and A in GL(n, q)."""
    F = f8
    rng = np.random.default_rng(21)
    for _ in range(40):
        x = rng.integers(0, F.order, 3).tolist()
        while True:
            A = rng.integers(0, 2, size=(3, 3)).tolist()
            try:
                fq_inverse(F, A)
                break
            except ValidationError:
                pass
        a = int(rng.integers(1, F.order))
        y = [F.mul(a, sum_fq(F, x, [A[i][j] for i in range(3)])) for j in range(3)]
        Sx = support(F, x, (3,))[0]
        Sy = support(F, y, (3,))[0]
        assert Sy.dim == Sx.dim
        if Sx.dim:
            img = [tuple(sum(lam[i] * A[i][j] for i in range(3)) % 2 for j in range(3)) for lam in Sx.basis]
            assert Sy.same_as(FqSubspace.span(F, img, 3))
