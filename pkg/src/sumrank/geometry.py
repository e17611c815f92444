"""q-systems: tuples of F_q-subspaces U_1..U_t of F_{q^m}^k spanning it over F_{q^m}.

A nondegenerate code and a system determine each other: U_i is the F_q-span
of the columns of G_i, and conversely basis vectors of U_i become columns.
For any nonzero v, the weight of vG is N minus the sum over i of
dim(U_i ∩ v^⊥).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import sweep
from .errors import BadDimension, DegenerateCode, ValidationError
from .fqlin import (
    FqSubspace,
    fq_left_kernel,
    fqm_rank,
    hyperplane_of,
    intersect,
    normalize,
    point_index,
    points_array,
)
from .gf import Field
from .srcode import BlockProfile, SumRankCode, support


@dataclass(frozen=True, eq=False)
class QSystem:
    field: Field
    k: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValidationError("a system needs at least one subspace")
        for U in blocks:
            if U.ambient != self.k or U.field != self.field:
                raise ValidationError("subspace lives in the wrong ambient space")
            if U.dim == 0:
                raise ValidationError("subspaces must be nonzero")
        dims = [U.dim for U in blocks]
        if any(a < b for a, b in zip(dims, dims[1:])):
            raise ValidationError(f"subspace dimensions must be non-increasing, got {dims}")
        vecs = [v for U in blocks for v in U.basis]
        if fqm_rank(self.field, vecs) != self.k:
            raise BadDimension("the subspaces do not span F_{q^m}^k over F_{q^m}")

    @property
    def dims(self) -> tuple:
        return tuple(U.dim for U in self.blocks)

    @property
    def N(self) -> int:
        return sum(self.dims)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "k": self.k, "blocks": [U.to_json() for U in self.blocks]}

    @classmethod
    def from_json(cls, d: dict) -> "QSystem":
        F = Field.from_json(d["field"])
        return cls(F, d["k"], tuple(FqSubspace.from_json(F, b) for b in d["blocks"]))


def psi(code: SumRankCode) -> QSystem:
    """Column spans of the blocks; the code must be nondegenerate."""
    F = code.field
    blocks = []
    for i, n in enumerate(code.profile.lengths):
        cols = [tuple(c) for c in zip(*code.block(i))]
        U = FqSubspace.span(F, cols, code.k)
        if U.dim != n:
            raise DegenerateCode(f"block {i} has F_q-dependent columns")
        blocks.append(U)
    return QSystem(F, code.k, tuple(blocks))


def phi(system: QSystem) -> SumRankCode:
    """Generator matrix whose block i has the basis of U_i as columns."""
    cols = [v for U in system.blocks for v in U.basis]
    G = [[c[r] for c in cols] for r in range(system.k)]
    return SumRankCode(system.field, system.dims, G, {"derived": "system"})


def system_matrix(system: QSystem) -> np.ndarray:
    cols = [v for U in system.blocks for v in U.basis]
    return np.array(cols, dtype=np.int64).T.copy()


def _starts(system: QSystem):
    return BlockProfile(system.dims).starts


def dimension_list(system: QSystem, v: Sequence[int]) -> tuple:
    H = hyperplane_of(system.field, v)
    return tuple(intersect(U, H).dim for U in system.blocks)


def subspace_section(system: QSystem, v: Sequence[int]) -> tuple:
    """The sections U_i ∩ v^⊥."""
    H = hyperplane_of(system.field, v)
    return tuple(intersect(U, H) for U in system.blocks)


def psi_image(code: SumRankCode, i: int, lams) -> FqSubspace:
    """Image of F_q-vectors lam under lam -> lam G_i^T = sum_j lam_j g_j."""
    F = code.field
    cols = [tuple(c) for c in zip(*code.block(i))]
    vecs = []
    for lam in lams:
        w = [0] * code.k
        for c, g in zip(lam, cols):
            if c:
                w = [F.add(a, F.mul(c, b)) for a, b in zip(w, g)]
        vecs.append(tuple(w))
    return FqSubspace(F, code.k, tuple(vecs))


def verify_duality(code: SumRankCode, v: Sequence[int]) -> bool:
    """Check U_i ∩ v^⊥ = psi_{G_i}(supp(vG)_i^⊥) in every block, for one v.

    The left side is computed by intersecting subspaces, the right side from
    the support of the codeword vG.
    """
    system = psi(code)
    sections = subspace_section(system, v)
    x = code.encode(v)
    supp = support(code.field, x, code.profile)
    for i, (S, T) in enumerate(zip(sections, supp)):
        n = code.profile.lengths[i]
        # orthogonal complement of T inside F_q^n
        perp = fq_left_kernel(code.field, [[vec[j] for vec in T.basis] for j in range(n)]) if T.dim else [
            tuple(1 if a == j else 0 for a in range(n)) for j in range(n)
        ]
        if not S.same_as(psi_image(code, i, perp)):
            return False
    return True


@dataclass
class DualityReport:
    points: int
    failures: int
    first_failure: tuple | None
    identity_holds: bool


def duality_sweep(code: SumRankCode, workers: int = 1, budget: int = sweep.DEFAULT_BUDGET) -> DualityReport:
    """Duality check for every projective v plus w(vG) + sum dims = N."""
    system = psi(code)
    F = code.field
    fails, first, dims = sweep.run("duality", F, code.k, code.G, code.profile.starts, workers=workers, budget=budget)
    ranks = sweep.run("rank_array", F, code.k, code.G, code.profile.starts, workers=workers, budget=budget)
    secs = sweep.run("section_array", F, code.k, system_matrix(system), _starts(system), mode=0, workers=workers, budget=budget)
    identity = bool(np.all(ranks.sum(axis=1) + secs.sum(axis=1) == code.N)) and bool(np.array_equal(dims, secs))
    fp = None if first is None else tuple(int(a) for a in points_array(F, code.k, first, first + 1)[0])
    return DualityReport(len(ranks), int(fails), fp, identity)


def max_hyperplane_section(system: QSystem, workers: int = 1, budget: int = sweep.DEFAULT_BUDGET) -> int:
    hist = sweep.run("section", system.field, system.k, system_matrix(system), _starts(system), mode=0, workers=workers, budget=budget)
    return max(sum(d) for d in hist)


def geometric_msrd(system: QSystem, **kw) -> bool:
    """Every hyperplane meets the system in total dimension at most k-1."""
    return max_hyperplane_section(system, **kw) <= system.k - 1


# ------------------------------------------------------------ linear sets
@dataclass
class WeightMap:
    """Point weights w(P) = dim(U ∩ P) over PG(k-1, q^m), nonzero ones only."""

    field: Field
    k: int
    weights: dict  # normalized point -> weight

    def weight(self, v) -> int:
        return self.weights.get(normalize(self.field, v), 0)

    def items_sorted(self) -> list:
        F = self.field
        return sorted(self.weights.items(), key=lambda kv: point_index(F, kv[0]))

    def to_json(self) -> list:
        F = self.field
        return [{"point": [F.coeffs(a) for a in P], "weight": w} for P, w in self.items_sorted()]


def linear_set(U: FqSubspace) -> WeightMap:
    """Points <u>_{F_{q^m}} for u in U \\ {0}, weighted by dim(U ∩ <u>).

    Enumerates the q^dim vectors of U; a point carrying q^w - 1 of them has
    weight w.
    """
    F = U.field
    if F.q ** U.dim > sweep.DEFAULT_BUDGET:
        raise ValidationError("subspace too large to enumerate")
    counts: Counter = Counter()
    for u in U.elements():
        if any(u):
            counts[normalize(F, u)] += 1
    weights = {}
    for P, c in counts.items():
        w = 0
        while F.q**w - 1 < c:
            w += 1
        assert F.q**w - 1 == c
        weights[P] = w
    return WeightMap(F, U.ambient, weights)


def point_weights(system: QSystem, workers: int = 1) -> np.ndarray:
    """Per-point, per-block dim(U_i ∩ <v>) over all points, in index order."""
    return sweep.run("section_array", system.field, system.k, system_matrix(system), _starts(system), mode=1, workers=workers)


def multi_weight(system: QSystem) -> dict:
    """Point -> sum over blocks of the point weights (nonzero entries only)."""
    total: Counter = Counter()
    for U in system.blocks:
        for P, w in linear_set(U).weights.items():
            total[P] += w
    return dict(total)


def is_scattered(wm: WeightMap) -> bool:
    return all(w <= 1 for w in wm.weights.values())


def covers_line(wm: WeightMap) -> bool:
    return wm.k == 2 and len(wm.weights) == wm.field.order + 1


def one_weight_check(system: QSystem) -> int | None:
    """For k = 2: the common weight N - c if every point has multi-weight c."""
    if system.k != 2:
        raise ValidationError("one-weight check via multi-weights needs k = 2")
    mw = multi_weight(system)
    if len(mw) != system.field.order + 1:
        return None
    vals = set(mw.values())
    return system.N - vals.pop() if len(vals) == 1 else None


def msrd_block_bounds(profile: Sequence[int], q: int, m: int) -> dict:
    """Necessary conditions on the block profile of a one-weight MSRD code, k = 2."""
    ns = sorted((int(n) for n in profile), reverse=True)
    t = len(ns)
    pts = sum((q**n - 1) // (q - 1) for n in ns)
    checks = {
        "t_at_least_q_plus_1": t >= q + 1,
        "t_at_most_q^m_plus_1": t <= q**m + 1,
        "t_congruent_1_mod_q": t % q == 1 % q,
        "point_count_identity": pts == q**m + 1,
        "blocks_at_most_m": all(n <= m for n in ns),
    }
    reasons = []
    if t % q == 0:
        reasons.append(f"t = {t} is divisible by q = {q}, so sum (q^n_i - 1)/(q - 1) is 0 mod q but q^m + 1 is 1 mod q")
    elif not checks["t_congruent_1_mod_q"]:
        reasons.append(f"t = {t} is not 1 mod q = {q}")
    if not checks["point_count_identity"]:
        reasons.append(f"sum (q^n_i - 1)/(q - 1) = {pts} differs from q^m + 1 = {q**m + 1}")
    if not checks["t_at_least_q_plus_1"]:
        reasons.append(f"t = {t} < q + 1")
    shape = None
    if t == q + 1:
        case1 = tuple([m] * (q - 1) + [1, 1])
        case2 = (m - 1, m - 1, 2) if q == 2 and m >= 3 else None
        if tuple(ns) == case1:
            shape = "m^(q-1),1,1"
        elif case2 is not None and tuple(ns) == case2:
            shape = "m-1,m-1,2"
        checks["shape_for_t_eq_q_plus_1"] = shape is not None
    return {
        "profile": ns,
        "q": q,
        "m": m,
        "t": t,
        "point_count": pts,
        "checks": checks,
        "admissible": all(checks.values()),
        "shape": shape,
        "reasons": reasons,
    }
