"""Hamming-metric codes attached to a sum-rank-metric code.

Each subspace U_i contributes every point of its linear set with multiplicity
(q^{w(P)} - 1)/(q - 1), where w(P) = dim(U_i ∩ P).  The resulting projective
multiset has (q^{n_i} - 1)/(q - 1) points per block and defines a Hamming-metric
code whose weights follow from the rank lists of the sum-rank code.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import sweep
from .errors import DegenerateCode, TooLarge, ValidationError
from .fqlin import fqm_rank, point_index
from .geometry import QSystem, linear_set, psi
from .gf import Field
from .srcode import SumRankCode, is_nondegenerate

EXT_COLUMN_LIMIT = 1 << 16


@dataclass
class ProjectiveMultiset:
    field: Field
    k: int
    mult: dict  # normalized point -> multiplicity

    @property
    def size(self) -> int:
        return sum(self.mult.values())

    def items_sorted(self) -> list:
        return sorted(self.mult.items(), key=lambda kv: point_index(self.field, kv[0]))


def ext1(U) -> ProjectiveMultiset:
    F = U.field
    wm = linear_set(U)
    q = F.q
    return ProjectiveMultiset(F, U.ambient, {P: (q**w - 1) // (q - 1) for P, w in wm.weights.items()})


def ext(system: QSystem) -> ProjectiveMultiset:
    F = system.field
    total: Counter = Counter()
    for U in system.blocks:
        total.update(ext1(U).mult)
    ms = ProjectiveMultiset(F, system.k, dict(total))
    expected = sum((F.q**n - 1) // (F.q - 1) for n in system.dims)
    assert ms.size == expected
    if fqm_rank(F, list(ms.mult)) != system.k:
        raise ValidationError("the multiset does not span F_{q^m}^k")
    return ms


def g_ext(code: SumRankCode) -> list[list[int]]:
    """Generator matrix of the associated Hamming code: one column per point
    of the multiset, repeated by multiplicity, in canonical point order."""
    if not is_nondegenerate(code):
        raise DegenerateCode("the associated Hamming code needs a nondegenerate code")
    F = code.field
    total = sum((F.q**n - 1) // (F.q - 1) for n in code.profile.lengths)
    if total > EXT_COLUMN_LIMIT:
        raise TooLarge(f"{total} columns exceed {EXT_COLUMN_LIMIT}")
    ms = ext(psi(code))
    cols = []
    for P, c in ms.items_sorted():
        cols.extend([P] * c)
    return [[col[r] for col in cols] for r in range(code.k)]


def hamming_weight_formula(rank_list: Sequence[int], profile: Sequence[int], q: int) -> int:
    """sum_i (q^{n_i} - q^{n_i - rho_i}) / (q - 1)."""
    return sum((q**n - q ** (n - r)) // (q - 1) for r, n in zip(rank_list, profile))


@dataclass
class ExtCheck:
    points: int
    mismatches: int
    first_mismatch: tuple | None
    hamming_weights: dict  # Hamming weight -> projective count


def ext_formula_check(code: SumRankCode, workers: int = 1, budget: int = sweep.DEFAULT_BUDGET) -> ExtCheck:
    """Compare the formula with direct Hamming weights of vG_Ext for every v."""
    from .fqlin import points_array

    F = code.field
    G = np.array(g_ext(code), dtype=np.int64)
    ranks = sweep.run("rank_array", F, code.k, code.G, code.profile.starts, workers=workers, budget=budget)
    ls = code.profile.lengths
    bad = 0
    first = None
    hw: Counter = Counter()
    total = len(ranks)
    for lo in range(0, total, sweep.CHUNK):
        vs = points_array(F, code.k, lo, min(lo + sweep.CHUNK, total))
        acc = np.zeros((len(vs), G.shape[1]), dtype=np.int64)
        for l in range(code.k):
            acc = F.add_arr(acc, F.mul_arr(vs[:, l : l + 1], G[l : l + 1, :]))
        direct = (acc != 0).sum(axis=1)
        for j, d in enumerate(direct.tolist()):
            hw[d] += 1
            if hamming_weight_formula(ranks[lo + j], ls, F.q) != d:
                bad += 1
                if first is None:
                    first = tuple(int(a) for a in vs[j])
    return ExtCheck(total, bad, first, dict(sorted(hw.items())))


def hamming_distance_from_ranks(code: SumRankCode, **kw) -> int:
    from .srcode import weight_distribution

    wd = weight_distribution(code, **kw)
    return min(hamming_weight_formula(rl, code.profile.lengths, code.field.q) for rl in wd.rank_lists)


# -------------------------------------------------------- constant profile
def bonisoli_constraints(q: int, m: int, k: int, n: int, t: int, profile: Sequence[int]) -> dict:
    """Necessary conditions for a constant-rank-profile code with t blocks of length n."""
    ell = Fraction(t * (q**n - 1) * (q**m - 1), (q - 1) * (q ** (k * m) - 1))
    lhs = t * q ** (m * (k - 1)) * (q**n - 1) * (q**m - 1)
    rhs = (q ** (k * m) - 1) * (t * q**n - sum(q ** (n - r) for r in profile))
    return {
        "ell": f"{ell.numerator}/{ell.denominator}",
        "ell_positive_integer": ell.denominator == 1 and ell > 0,
        "lhs": lhs,
        "rhs": rhs,
        "identity_holds": lhs == rhs and len(profile) == t,
        "satisfied": ell.denominator == 1 and ell > 0 and lhs == rhs and len(profile) == t,
    }


def rank_range(q: int, m: int, k: int, n: int) -> range:
    """Possible ranks of a block of length n when dim U = n in F_q^{km}:
    n - dim(U ∩ H) with dim(U ∩ H) between max(0, n - m) and min(n, m(k-1))."""
    return range(max(0, n - m * (k - 1)), min(n, m) + 1)


def feasible_profiles(q: int, m: int, k: int, n: int, t: int) -> list[tuple]:
    """All non-increasing profiles of length t passing both constraints."""
    vals = list(rank_range(q, m, k, n))
    out = []
    for combo in itertools.combinations_with_replacement(sorted(vals, reverse=True), t):
        if bonisoli_constraints(q, m, k, n, t, combo)["satisfied"]:
            out.append(tuple(combo))
    return out
