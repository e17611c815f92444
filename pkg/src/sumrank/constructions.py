"""Code families: linearized Reed-Solomon and its extensions, twisted and
completed systems, Singer-orbit and simplex codes, and the lift of a system
on the projective line.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadCharacteristic,
    BadDimension,
    DeltaInH,
    InvalidPair,
    NormSubgroupViolation,
    NotFqrSubspace,
    NotPrimitive,
    NotScattered,
    ReduciblePolynomial,
    ValidationError,
    ZeroExtension,
)
from .fqlin import (
    FqSubspace,
    fqm_matmul,
    fqm_rref,
    num_points,
    point_at,
    point_subspace,
    rank_q,
)
from .geometry import QSystem, linear_set, phi
from .gf import Field
from .polyring import is_irreducible, prime_factors
from .skew import EvaluationPair, monomial, op_eval
from .srcode import SumRankCode, weight_distribution


# ------------------------------------------------------------- LRS family
def lrs_rows(F: Field, k: int, pair: EvaluationPair) -> list[list[int]]:
    s = pair.sigma_power
    rows = []
    for l in range(k):
        f = monomial(F, l, 1, s)
        rows.append([op_eval(f, b, a) for a in pair.a for b in pair.beta])
    return rows


def lrs(F: Field, k: int, pair: EvaluationPair) -> SumRankCode:
    """Evaluations ev_{a,beta}(f) of all skew polynomials of degree < k."""
    N = pair.t * pair.n
    if not 1 <= k <= N:
        raise BadDimension(f"need 1 <= k <= N = {N}")
    return SumRankCode(F, [pair.n] * pair.t, lrs_rows(F, k, pair), {"family": "lrs", "k": k})


def doubly_extended_lrs(F: Field, k: int, pair: EvaluationPair, gamma: int, delta: int) -> SumRankCode:
    """LRS with two extra length-one blocks f(gamma)_0 = f_0 gamma and delta f_{k-1}."""
    if gamma == 0 or delta == 0:
        raise ZeroExtension("gamma and delta must be nonzero")
    N = pair.t * pair.n + 2
    if not 2 <= k <= N:
        raise BadDimension(f"need 2 <= k <= N = {N}")
    rows = lrs_rows(F, k, pair)
    for l, row in enumerate(rows):
        row.append(gamma if l == 0 else 0)
        row.append(delta if l == k - 1 else 0)
    return SumRankCode(F, [pair.n] * pair.t + [1, 1], rows, {"family": "doubly_extended_lrs", "k": k})


def two_fold_system(F: Field, H: Sequence[int] | None = None, delta: int | None = None) -> QSystem:
    """Three subspaces of F_{2^m}^2 built from an F_2-hyperplane H of F_{2^m}:
    X = {(x, x^2)}, Y = {(x, x^2 + delta x)} over x in H, Z = <(1, 0), (0, delta)>.
    """
    if F.q != 2:
        raise BadCharacteristic("this construction needs q = 2")
    m = F.m
    if m < 3:
        raise ValidationError("need m >= 3")
    H = list(F.basis[: m - 1]) if H is None else [int(h) for h in H]
    delta = F.basis[m - 1] if delta is None else int(delta)
    if len(H) != m - 1 or rank_q(F, H) != m - 1:
        raise ValidationError("H must be given by m-1 F_2-independent elements")
    if rank_q(F, H + [delta]) == m - 1:
        raise DeltaInH("delta lies in H")
    sq = lambda x: F.mul(x, x)
    X = FqSubspace(F, 2, tuple((h, sq(h)) for h in H))
    Y = FqSubspace(F, 2, tuple((h, F.add(sq(h), F.mul(delta, h))) for h in H))
    Z = FqSubspace(F, 2, ((1, 0), (0, delta)))
    return QSystem(F, 2, (X, Y, Z))


def two_fold_lrs(F: Field, H=None, delta=None) -> SumRankCode:
    code = phi(two_fold_system(F, H, delta))
    code.provenance = {"family": "two_fold_lrs"}
    return code


# ---------------------------------------------------------------- twisted
def _fq_log(F: Field, x: int) -> int:
    """Discrete log of x in F_q^* to the base g^{(Q-1)/(q-1)}."""
    step = (F.order - 1) // (F.q - 1)
    lg = F.log(x)
    assert lg % step == 0
    return lg // step


def norm_subgroup_gcd(F: Field, a: Sequence[int]) -> int:
    """d such that the norms of ``a`` generate the subgroup of index d in F_q^*."""
    d = F.q - 1
    for x in a:
        d = math.gcd(d, _fq_log(F, F.norm(x)))
    return d


def twisted_system(F: Field, a: Sequence[int], gamma: Sequence[int], eta: int, s: int = 1) -> QSystem:
    """U_i = {(y + sigma^2(y) eta N_2(a_i), a_i sigma(y)) : y in F_{q^m}}.

    The norms of the a_i must be distinct and lie in a proper subgroup of
    F_q^* that does not contain the norm of eta.
    """
    a = [int(x) for x in a]
    if any(x == 0 for x in a) or eta == 0:
        raise NormSubgroupViolation("points and eta must be nonzero")
    norms = [F.norm(x) for x in a]
    if len(set(norms)) != len(norms):
        raise NormSubgroupViolation("norms are not distinct")
    d = norm_subgroup_gcd(F, a)
    if d == 1:
        raise NormSubgroupViolation("the norms generate all of F_q^*")
    if _fq_log(F, F.norm(eta)) % d == 0:
        raise NormSubgroupViolation("the norm of eta lies in the subgroup of the norms")
    if len(gamma) != F.m or rank_q(F, gamma) != F.m:
        raise InvalidPair("gamma must be an F_q-basis of F_{q^m}")
    fA = monomial(F, 0, 1, s) + monomial(F, 2, eta, s)
    fB = monomial(F, 1, 1, s)
    blocks = []
    for ai in a:
        blocks.append(FqSubspace(F, 2, tuple((op_eval(fA, y, ai), op_eval(fB, y, ai)) for y in gamma)))
    return QSystem(F, 2, tuple(blocks))


def twisted_lrs(F: Field, a, gamma, eta, s: int = 1) -> SumRankCode:
    code = phi(twisted_system(F, a, gamma, eta, s))
    code.provenance = {"family": "twisted_lrs"}
    return code


def default_twisted_params(F: Field, t: int | None = None) -> dict:
    """Smallest prime r dividing q-1; points with norms in the index-r subgroup.

    a_i = g^{r(i-1)} for i = 1..t and eta = g, where g is the fixed primitive
    element.  ``t`` defaults to (q-1)/r, the largest allowed.
    """
    if F.q <= 2:
        raise NormSubgroupViolation("F_q^* has no proper nontrivial index here")
    r = prime_factors(F.q - 1)[0]
    tmax = (F.q - 1) // r
    t = tmax if t is None else t
    if not 1 <= t:
        raise ValidationError("t must be positive")
    if t > tmax:
        raise NormSubgroupViolation(f"t = {t} exceeds (q-1)/r = {tmax}")
    return {"a": [F.gpow(r * i) for i in range(t)], "gamma": list(F.basis), "eta": F.gpow(1), "r": r}


def complete_to_line(F: Field, blocks: Sequence[FqSubspace]) -> QSystem:
    """Append <v>_{F_q} for every point of PG(1, q^m) not yet covered.

    The input subspaces must form a scattered system: every point has
    multi-weight at most one.
    """
    blocks = list(blocks)
    covered = {}
    if blocks:
        for U in blocks:
            if U.ambient != 2:
                raise ValidationError("completion works on the projective line (k = 2)")
        covered = multi_weight_blocks(F, blocks)
        if any(w > 1 for w in covered.values()):
            raise NotScattered("some point has multi-weight above one")
    extra = []
    for i in range(num_points(F.order, 2)):
        P = point_at(F, 2, i)
        if P not in covered:
            extra.append(FqSubspace(F, 2, (P,)))
    return QSystem(F, 2, tuple(blocks + extra))


def multi_weight_blocks(F: Field, blocks) -> dict:
    total: dict = {}
    for U in blocks:
        for P, w in linear_set(U).weights.items():
            total[P] = total.get(P, 0) + w
    return total


def complete_twisted(system: QSystem) -> QSystem:
    return complete_to_line(system.field, system.blocks)


# ----------------------------------------------------------------- Singer
def companion(F: Field, poly: Sequence[int]) -> list[list[int]]:
    """Companion matrix: ones below the diagonal, -c_i in the last column."""
    k = len(poly) - 1
    M = [[0] * k for _ in range(k)]
    for i in range(k):
        if i + 1 < k:
            M[i + 1][i] = 1
        M[i][k - 1] = F.neg(poly[i])
    return M


def mat_pow(F: Field, M, e: int):
    k = len(M)
    R = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    B = M
    while e:
        if e & 1:
            R = fqm_matmul(F, R, B)
        e >>= 1
        if e:
            B = fqm_matmul(F, B, B)
    return R


def _is_identity(M) -> bool:
    return all(M[i][j] == (1 if i == j else 0) for i in range(len(M)) for j in range(len(M)))


def has_full_order(F: Field, M) -> bool:
    order = F.order ** len(M) - 1
    if not _is_identity(mat_pow(F, M, order)):
        return False
    return all(not _is_identity(mat_pow(F, M, order // r)) for r in prime_factors(order))


def default_singer_poly(F: Field, k: int) -> tuple:
    """Smallest monic primitive polynomial of degree k over F_{q^m}.

    Candidates are ordered by coefficient vector, constant term first, each
    coefficient in canonical element order.
    """
    els = F.elements()
    for low in itertools.product(els, repeat=k):
        if low[0] == 0:
            continue
        f = list(low) + [1]
        if is_irreducible(F, f) and has_full_order(F, companion(F, f)):
            return tuple(f)
    raise AssertionError("no primitive polynomial found")  # pragma: no cover


@dataclass(eq=False)
class SingerGroup:
    """Cyclic group generated by the companion matrix of a primitive polynomial."""

    field: Field
    k: int
    poly: tuple
    M: list

    @property
    def order(self) -> int:
        return self.field.order**self.k - 1

    @property
    def quotient_size(self) -> int:
        """Number of cosets modulo scalar matrices: (Q^k - 1)/(Q - 1)."""
        return num_points(self.field.order, self.k)

    def power(self, i: int):
        return mat_pow(self.field, self.M, i)

    def reps(self) -> list:
        out = []
        R = [[1 if i == j else 0 for j in range(self.k)] for i in range(self.k)]
        for _ in range(self.quotient_size):
            out.append(R)
            R = fqm_matmul(self.field, R, self.M)
        return out


def singer(F: Field, k: int, poly: Sequence[int] | None = None) -> SingerGroup:
    if poly is None:
        poly = default_singer_poly(F, k)
    poly = tuple(int(c) for c in poly)
    if len(poly) != k + 1 or poly[-1] != 1:
        raise ValidationError(f"need a monic polynomial of degree {k}")
    if not is_irreducible(F, list(poly)):
        raise ReduciblePolynomial("polynomial is reducible over F_{q^m}")
    M = companion(F, poly)
    if not has_full_order(F, M):
        raise NotPrimitive("companion matrix does not have order q^{km} - 1")
    return SingerGroup(F, k, poly, M)


def _transpose(M):
    return [list(r) for r in zip(*M)]


def is_fqr_subspace(U: FqSubspace, r: int) -> bool:
    F = U.field
    if F.m % r:
        return False
    if r == 1:
        return True
    w = F.gpow((F.order - 1) // (F.q**r - 1))
    return all(U.contains(tuple(F.mul(w, a) for a in u)) for u in U.basis)


def class_key(U: FqSubspace) -> tuple:
    """Key shared exactly by the subspaces lambda*U, lambda in F_{q^m}^*."""
    F = U.field
    return min(U.scale(F.gpow(i)).key() for i in range(F.order - 1))


def orbit(group, U: FqSubspace, r: int = 1) -> tuple:
    """Orbit of U under the right action u -> uA, in first-visited order.

    ``group`` is a SingerGroup or a list of generating matrices.  Subspaces
    differing by an F_{q^m}^* scalar are identified, matching the action of
    the group modulo scalar matrices.
    """
    if not is_fqr_subspace(U, r):
        raise NotFqrSubspace(f"U is not closed under F_(q^{r})")
    gens = [group.M] if isinstance(group, SingerGroup) else list(group)
    seen = {class_key(U)}
    out = [U]
    i = 0
    while i < len(out):
        cur = out[i]
        i += 1
        for A in gens:
            nxt = cur.act(A)
            key = class_key(nxt)
            if key not in seen:
                seen.add(key)
                out.append(nxt)
    return tuple(out)


def orbital_code(group, U: FqSubspace, r: int = 1) -> SumRankCode:
    orb = orbit(group, U, r)
    code = phi(QSystem(U.field, U.ambient, orb))
    code.provenance = {"family": "orbital", "orbit_size": len(orb)}
    return code


def simplex(group: SingerGroup, U: FqSubspace) -> SumRankCode:
    """Blocks (M^i)^T A for i < (Q^k-1)/(Q-1), A having U's basis as columns."""
    F = group.field
    A = [[u[r] for u in U.basis] for r in range(group.k)]
    blocks = []
    Mt = _transpose(group.M)
    B = A
    for _ in range(group.quotient_size):
        blocks.append(B)
        B = fqm_matmul(F, Mt, B)
    G = [sum((blk[r] for blk in blocks), []) for r in range(group.k)]
    return SumRankCode(F, [U.dim] * len(blocks), G, {"family": "simplex"})


def simplex_weight(group: SingerGroup, U: FqSubspace) -> int:
    """Predicted constant weight Q^{k-s} * (sum of weights over the projective
    codewords of the rank-metric code spanned by the rows of A), where s is the
    F_{q^m}-dimension of <U>.
    """
    F = group.field
    A = [[u[r] for u in U.basis] for r in range(group.k)]
    R, piv = fqm_rref(F, A)
    s = len(piv)
    small = SumRankCode(F, [U.dim], R)
    wd = weight_distribution(small)
    total = sum(w * c for w, c in wd.by_weight.items())
    return F.order ** (group.k - s) * total


# ------------------------------------------------------------------ lifts
def club(F: Field) -> FqSubspace:
    """{(y, Tr(y)) : y in F_{q^m}}."""
    return FqSubspace(F, 2, tuple((b, F.trace(b)) for b in F.basis))


@dataclass
class LiftedSystem:
    system: QSystem
    M: int
    uncovered: int
    ell: int
    base_dims: tuple

    @property
    def predicted_distance(self) -> int:
        return sum(self.base_dims) + (self.uncovered - 1) * self.M + self.ell


def lift(F: Field, blocks: Sequence[FqSubspace]) -> LiftedSystem:
    """Pad every point of PG(1, q^m) up to the maximum multi-weight M.

    A point of weight w gets c copies of <v>_{F_{q^m}} and one d-dimensional
    piece <v, zv, ..., z^{d-1}v>_{F_q}, where M - w = cm + d.  Subspaces are
    then sorted by non-increasing dimension.
    """
    blocks = list(blocks)
    if not blocks or any(U.ambient != 2 for U in blocks):
        raise ValidationError("lift needs subspaces of F_{q^m}^2")
    mw = multi_weight_blocks(F, blocks)
    M = max(mw.values())
    extra = []
    z = 0
    ell = 0
    for i in range(num_points(F.order, 2)):
        P = point_at(F, 2, i)
        w = mw.get(P, 0)
        if w == 0:
            z += 1
        else:
            ell += M - w
        c, d = divmod(M - w, F.m)
        full = point_subspace(F, P)
        extra.extend([full] * c)
        if d:
            extra.append(FqSubspace(F, 2, full.basis[:d]))
    allb = blocks + extra
    allb.sort(key=lambda U: -U.dim)
    return LiftedSystem(QSystem(F, 2, tuple(allb)), M, z, ell, tuple(U.dim for U in blocks))
