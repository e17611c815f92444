import pytest

from sumrank.constructions import (
    club,
    complete_to_line,
    default_singer_poly,
    default_twisted_params,
    doubly_extended_lrs,
    lift,
    lrs,
    orbit,
    orbital_code,
    simplex,
    simplex_weight,
    singer,
    twisted_system,
    two_fold_system,
)
from sumrank.errors import (
    BadCharacteristic,
    DeltaInH,
    NormSubgroupViolation,
    NotFqrSubspace,
    NotPrimitive,
    NotScattered,
    ReduciblePolynomial,
    ZeroExtension,
)
from sumrank.fqlin import FqSubspace, fqm_matmul, vec_mat
from sumrank.gf import make_field
from sumrank.geometry import linear_set, phi
from sumrank.skew import default_pair
from sumrank.srcode import constant_rank_profile, is_msrd, weight_distribution


def test_singer_generator_order(f4):
    F = f4
    G = singer(F, 2)
    I = [[1, 0], [0, 1]]
    R = I
    for i in range(1, G.order + 1):
        R = fqm_matmul(F, R, G.M)
        if R == I:
            break
    assert i == G.order == 15
    # transitive on nonzero vectors
    v = (1, 0)
    seen = set()
    for _ in range(G.order):
        seen.add(v)
        v = tuple(vec_mat(F, v, G.M))
    assert len(seen) == 15


def test_singer_errors(f4):
    F = f4
    with pytest.raises(ReduciblePolynomial):
        singer(F, 2, [0, 0, 1])
    # x^2 + x + 1 splits over F_4
    with pytest.raises(ReduciblePolynomial):
        singer(F, 2, [1, 1, 1])
    # some irreducible quadratics over F_4 have roots of order 5 or 3
    nonprim = [p for p in ([c0, c1, 1] for c0 in range(1, 4) for c1 in range(4)) if _irreducible_not_primitive(F, p)]
    assert nonprim
    with pytest.raises(NotPrimitive):
        singer(F, 2, nonprim[0])


def _irreducible_not_primitive(F, p):
    from sumrank.constructions import companion, has_full_order
    from sumrank.polyring import is_irreducible

    return is_irreducible(F, p) and not has_full_order(F, companion(F, p))


def test_default_singer_poly_is_smallest(f4):
    p = default_singer_poly(f4, 2)
    assert singer(f4, 2).poly == p


def test_simplex_against_formula(simplex_input):
    F, poly, U = simplex_input
    G = singer(F, 2, poly)
    C = simplex(G, U)
    wd = weight_distribution(C)
    assert list(wd.by_weight) == [simplex_weight(G, U)]
    assert constant_rank_profile(C) is not None


def test_orbit_modulo_scalars(simplex_input):
    F, poly, U = simplex_input
    G = singer(F, 2, poly)
    orb = orbit(G, U)
    assert len(orb) == 5
    C = orbital_code(G, U)
    assert C.t == 5
    with pytest.raises(NotFqrSubspace):
        orbit(G, U, 2)


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 2)])
def test_lrs_msrd_small(q, m):
    F = make_field(q, 1, m)
    for k in range(1, m * (q - 1) + 1):
        C = lrs(F, k, default_pair(F, q - 1, m))
        assert is_msrd(C)


def test_doubly_extended_errors(f8):
    with pytest.raises(ZeroExtension):
        doubly_extended_lrs(f8, 2, default_pair(f8, 1, 3), 0, 1)


def test_two_fold_errors(f8, f9):
    with pytest.raises(BadCharacteristic):
        two_fold_system(f9)
    with pytest.raises(DeltaInH):
        two_fold_system(f8, [1, f8.z], f8.add(1, f8.z))


def test_twisted_and_completion():
    F = make_field(5, 1, 2)
    prm = default_twisted_params(F)
    S = twisted_system(F, prm["a"], prm["gamma"], prm["eta"])
    C = phi(S)
    assert is_msrd(C)
    full = complete_to_line(F, S.blocks)
    D = phi(full)
    wd = weight_distribution(D)
    assert len(wd.by_weight) == 1 and wd.min_distance == D.singleton_bound()
    with pytest.raises(NormSubgroupViolation):
        twisted_system(F, prm["a"], prm["gamma"], prm["a"][0])


def test_completion_rejects_non_scattered(f8):
    U = FqSubspace(f8, 2, ((1, 0), (f8.z, 0)))
    with pytest.raises(NotScattered):
        complete_to_line(f8, [U, U])


def test_club_and_lift(f8):
    F = f8
    U = club(F)
    ws = sorted(linear_set(U).weights.values())
    assert ws[-1] == F.m - 1 and ws.count(1) == len(ws) - 1
    L = lift(F, [U])
    C = phi(L.system)
    wd = weight_distribution(C)
    assert list(wd.by_weight) == [L.predicted_distance]
