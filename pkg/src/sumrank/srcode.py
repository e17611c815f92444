"""Sum-rank-metric codes: profiles, weights, supports, distances, duals.

A vector of F_{q^m}^N is cut into blocks of lengths n_1 >= ... >= n_t.  Its
sum-rank weight is the sum over blocks of the F_q-dimension spanned by the
block's entries.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple, Sequence

import numpy as np

from . import sweep
from .errors import (
    BadDimension,
    FullSpace,
    IllegalPermutation,
    ProfileMismatch,
    ValidationError,
)
from .fqlin import (
    FqSubspace,
    expand,
    expand_matrix,
    fq_inverse,
    fq_rank,
    fqm_nullspace,
    fqm_rank,
    rank_q,
    same_rowspace,
)
from .gf import Field


@dataclass(frozen=True)
class BlockProfile:
    """Block lengths n_1 >= n_2 >= ... >= n_t >= 1."""

    lengths: tuple

    def __post_init__(self):
        ls = tuple(int(n) for n in self.lengths)
        object.__setattr__(self, "lengths", ls)
        if not ls or min(ls) < 1:
            raise ValidationError("block lengths must be positive and non-empty")
        if any(a < b for a, b in zip(ls, ls[1:])):
            raise ValidationError(f"block lengths must be non-increasing, got {list(ls)}")

    @property
    def N(self) -> int:
        return sum(self.lengths)

    @property
    def t(self) -> int:
        return len(self.lengths)

    @property
    def starts(self) -> tuple:
        return tuple(itertools.accumulate(self.lengths, initial=0))

    def split(self, x: Sequence[int]) -> list[tuple]:
        s = self.starts
        if len(x) != self.N:
            raise ProfileMismatch(f"vector of length {len(x)} for profile of length {self.N}")
        return [tuple(x[s[i] : s[i + 1]]) for i in range(self.t)]

    def classes(self) -> dict:
        """Multiplicity of each block length."""
        return dict(Counter(self.lengths))


def as_profile(profile) -> BlockProfile:
    return profile if isinstance(profile, BlockProfile) else BlockProfile(tuple(profile))


class RankData(NamedTuple):
    rank_list: tuple
    rank_profile: tuple
    weight: int


def rank_data(rank_list: Sequence[int]) -> RankData:
    rl = tuple(int(r) for r in rank_list)
    return RankData(rl, tuple(sorted(rl, reverse=True)), sum(rl))


def sum_rank_weight(F: Field, x: Sequence[int], profile) -> RankData:
    profile = as_profile(profile)
    return rank_data(rank_q(F, blk) for blk in profile.split(x))


def support(F: Field, x: Sequence[int], profile, gammas=None) -> tuple:
    """Per-block column space of the coordinate matrix, as F_q-subspaces of F_q^{n_i}."""
    profile = as_profile(profile)
    mats = expand_matrix(F, x, profile, gammas)
    out = []
    for n, mat in zip(profile.lengths, mats):
        cols = [tuple(row[j] for row in mat) for j in range(F.m)]
        out.append(FqSubspace.span(F, cols, n))
    return tuple(out)


class SumRankCode:
    """An F_{q^m}-linear code of dimension k in F_{q^m}^{(n_1|...|n_t)}.

    ``G`` is a k x N generator matrix of full rank with no zero row.
    """

    def __init__(self, field: Field, profile, G, provenance: dict | None = None):
        self.field = field
        self.profile = as_profile(profile)
        arr = np.array(G, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise BadDimension("generator matrix must be a non-empty 2D array")
        if arr.shape[1] != self.profile.N:
            raise ProfileMismatch(f"G has {arr.shape[1]} columns, profile needs {self.profile.N}")
        if arr.min() < 0 or arr.max() >= field.order:
            raise ValidationError("generator entries are not field elements")
        if not arr.any(axis=1).all():
            raise BadDimension("generator matrix has a zero row")
        if fqm_rank(field, arr.tolist()) != arr.shape[0]:
            raise BadDimension("generator matrix rows are F_{q^m}-dependent")
        arr.setflags(write=False)
        self.G = arr
        self.provenance = provenance or {}
        self._cache: dict = {}

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def N(self) -> int:
        return self.profile.N

    @property
    def t(self) -> int:
        return self.profile.t

    def rows(self) -> list[list[int]]:
        return self.G.tolist()

    def block(self, i: int) -> list[list[int]]:
        s = self.profile.starts
        return self.G[:, s[i] : s[i + 1]].tolist()

    def encode(self, v: Sequence[int]) -> tuple:
        F = self.field
        if len(v) != self.k:
            raise ValidationError("message length differs from the dimension")
        return tuple(F.dot(v, col) for col in self.G.T.tolist())

    def singleton_bound(self) -> int:
        return self.N - self.k + 1

    def same_code(self, other: "SumRankCode") -> bool:
        return self.field == other.field and self.profile == other.profile and same_rowspace(self.field, self.rows(), other.rows())

    def to_json(self) -> dict:
        F = self.field
        out = {
            "field": F.to_json(),
            "profile": list(self.profile.lengths),
            "k": self.k,
            "G": [[F.coeffs(a) for a in row] for row in self.rows()],
        }
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    @classmethod
    def from_json(cls, d: dict) -> "SumRankCode":
        F = Field.from_json(d["field"])
        G = [[F.from_coeffs(c) for c in row] for row in d["G"]]
        code = cls(F, d["profile"], G, d.get("provenance"))
        if "k" in d and d["k"] != code.k:
            raise BadDimension("declared k differs from the generator matrix")
        return code

    def __repr__(self):
        return f"SumRankCode(q={self.field.q}, m={self.field.m}, k={self.k}, profile={list(self.profile.lengths)})"


# --------------------------------------------------------------- sweeps
@dataclass
class WeightDistribution:
    """Counts over the projective codewords vG, v in PG(k-1, q^m)."""

    Q: int
    rank_lists: dict
    by_weight: dict = dc_field(init=False)
    by_profile: dict = dc_field(init=False)

    def __post_init__(self):
        w: Counter = Counter()
        pr: Counter = Counter()
        for rl, c in self.rank_lists.items():
            w[sum(rl)] += c
            pr[tuple(sorted(rl, reverse=True))] += c
        self.by_weight = dict(sorted(w.items()))
        self.by_profile = dict(sorted(pr.items(), reverse=True))

    @property
    def expanded(self) -> dict:
        """Counts over all nonzero codewords."""
        return {w: c * (self.Q - 1) for w, c in self.by_weight.items()}

    @property
    def min_distance(self) -> int:
        return min(self.by_weight)

    @property
    def total(self) -> int:
        return sum(self.by_weight.values())


def weight_distribution(code: SumRankCode, workers: int = 1, budget: int = sweep.DEFAULT_BUDGET) -> WeightDistribution:
    wd = code._cache.get("wd")
    if wd is None:
        hist = sweep.run("rank", code.field, code.k, code.G, code.profile.starts, workers=workers, budget=budget)
        wd = WeightDistribution(code.field.order, hist)
        code._cache["wd"] = wd
    return wd


def min_distance(code: SumRankCode, workers: int = 1, budget: int = sweep.DEFAULT_BUDGET) -> int:
    return weight_distribution(code, workers, budget).min_distance


def is_msrd(code: SumRankCode, **kw) -> bool:
    return min_distance(code, **kw) == code.singleton_bound()


def is_one_weight(code: SumRankCode, **kw) -> int | None:
    """The common weight when every nonzero codeword has it, else None."""
    ws = weight_distribution(code, **kw).by_weight
    return next(iter(ws)) if len(ws) == 1 else None


def constant_rank_profile(code: SumRankCode, **kw) -> tuple | None:
    prs = weight_distribution(code, **kw).by_profile
    return next(iter(prs)) if len(prs) == 1 else None


def is_nondegenerate(code: SumRankCode) -> bool:
    """Columns of each block are F_q-independent."""
    F = code.field
    for i in range(code.t):
        cols = list(zip(*code.block(i)))
        if fq_rank(F, (expand(F, c) for c in cols)) != len(cols):
            return False
    return True


def dual(code: SumRankCode) -> SumRankCode:
    if code.k >= code.N:
        raise FullSpace("the code is the whole space; its dual is zero")
    H = fqm_nullspace(code.field, code.rows(), code.N)
    return SumRankCode(code.field, code.profile, H, {"derived": "dual"})


def dual_has_weight_one(code: SumRankCode) -> bool:
    """True when some vector of sum-rank weight 1 is orthogonal to the code.

    Weight-one vectors are multiples of (0 | lam | 0) with lam a nonzero
    F_q-vector in a single block, so it suffices to test those.
    """
    F = code.field
    s = code.profile.starts
    rows = code.rows()
    for i, n in enumerate(code.profile.lengths):
        for lam in itertools.product(F.subfield, repeat=n):
            if not any(lam):
                continue
            first = next(c for c in lam if c)
            if first != 1:
                continue
            if all(F.dot(row[s[i] : s[i + 1]], lam) == 0 for row in rows):
                return True
    return False


def apply_isometry(code: SumRankCode, a: Sequence[int], A: Sequence, perm: Sequence[int] | None = None) -> SumRankCode:
    """Image of the code under x -> (a_i x_{perm(i)} A_i)_i.

    ``a`` holds nonzero scalars of F_{q^m}, ``A`` invertible matrices over F_q,
    and ``perm[i]`` names the source block of target block i; it may only
    exchange blocks of equal length.
    """
    F = code.field
    t = code.t
    perm = list(range(t)) if perm is None else list(perm)
    ls = code.profile.lengths
    if sorted(perm) != list(range(t)) or any(ls[perm[i]] != ls[i] for i in range(t)):
        raise IllegalPermutation("permutation must map blocks to blocks of equal length")
    if len(a) != t or any(x == 0 for x in a):
        raise ValidationError("scalars must be t nonzero field elements")
    sub = set(F.subfield)
    for Ai, n in zip(A, ls):
        if len(Ai) != n or any(len(r) != n or any(x not in sub for x in r) for r in Ai):
            raise ValidationError("each A_i must be an n_i x n_i matrix over F_q")
        fq_inverse(F, Ai)
    newG = []
    for row in code.rows():
        blocks = code.profile.split(row)
        out = []
        for i in range(t):
            src = blocks[perm[i]]
            img = [F.mul(a[i], sum_fq(F, src, [Ai_row[j] for Ai_row in A[i]])) for j in range(ls[i])]
            out.extend(img)
        newG.append(out)
    return SumRankCode(F, code.profile, newG, {"derived": "isometry"})


def sum_fq(F: Field, xs: Sequence[int], coeffs: Sequence[int]) -> int:
    s = 0
    for x, c in zip(xs, coeffs):
        if x and c:
            s = F.add(s, F.mul(x, c))
    return s


def random_code(F: Field, profile, k: int, rng: np.random.Generator, nondegenerate: bool = True, tries: int = 10_000) -> SumRankCode:
    """Uniformly drawn generator matrix, redrawn until it is valid."""
    profile = as_profile(profile)
    for _ in range(tries):
        G = rng.integers(0, F.order, size=(k, profile.N)).tolist()
        try:
            code = SumRankCode(F, profile, G, {"family": "random"})
        except ValidationError:
            continue
        if not nondegenerate or is_nondegenerate(code):
            return code
    raise ValidationError("could not draw a valid code")
