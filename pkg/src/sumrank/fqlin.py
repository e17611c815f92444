"""Linear algebra over F_q and F_{q^m}, F_q-subspaces, projective points.

Vectors and matrices are tuples/lists of field ints.  F_q-linear questions
about vectors of F_{q^m}^k go through their expansion in F_q^{km}: each entry
is replaced by its coordinates in the basis 1, z, ..., z^{m-1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import AmbientMismatch, BasisNotIndependent, ValidationError
from .gf import Field

Vector = tuple  # of field ints


# ---------------------------------------------------------------- F_q level
class FqEchelon:
    """Incrementally maintained row echelon form over F_q.

    Entries are subfield elements.  Each stored row has leading entry 1 and is
    zero in the pivot columns of the rows stored before it.
    """

    def __init__(self, F: Field):
        self.F = F
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> list[int]:
        F = self.F
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = [F.fq_sub(a, F.fq_mul(c, b)) if b else a for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence[int]) -> bool:
        """Insert ``v``; return False when it is already in the span."""
        v = self.reduce(v)
        for pc, c in enumerate(v):
            if c:
                break
        else:
            return False
        ic = self.F.fq_inv(c)
        self.rows.append([self.F.fq_mul(ic, a) for a in v])
        self.pivots.append(pc)
        return True


def fq_rank(F: Field, rows: Iterable[Sequence[int]]) -> int:
    ech = FqEchelon(F)
    for r in rows:
        ech.add(r)
    return len(ech)


def fq_left_kernel(F: Field, rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Basis of {lam in F_q^n : sum lam_i rows_i = 0}."""
    n = len(rows)
    if n == 0:
        return []
    ncols = len(rows[0])
    stored: list[tuple[list[int], int]] = []
    kernel = []
    for i, r in enumerate(rows):
        v = list(r) + [0] * n
        v[ncols + i] = 1
        for row, pc in stored:
            c = v[pc]
            if c:
                v = [F.fq_sub(a, F.fq_mul(c, b)) if b else a for a, b in zip(v, row)]
        pc = next((j for j in range(ncols) if v[j]), None)
        if pc is None:
            kernel.append(tuple(v[ncols:]))
        else:
            ic = F.fq_inv(v[pc])
            stored.append(([F.fq_mul(ic, a) for a in v], pc))
    return kernel


def fq_inverse(F: Field, M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a square matrix over F_q; raises if singular."""
    n = len(M)
    A = [list(M[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise BasisNotIndependent("matrix is singular over F_q")
        A[col], A[piv] = A[piv], A[col]
        ic = F.fq_inv(A[col][col])
        A[col] = [F.fq_mul(ic, a) for a in A[col]]
        for r in range(n):
            c = A[r][col]
            if r != col and c:
                A[r] = [F.fq_sub(a, F.fq_mul(c, b)) for a, b in zip(A[r], A[col])]
    return [row[n:] for row in A]


# ----------------------------------------------------------- expansions
def expand(F: Field, vec: Sequence[int]) -> list[int]:
    """Coordinates of a vector of F_{q^m}^k in F_q^{km}, entry by entry."""
    out: list[int] = []
    for x in vec:
        out.extend(F.coords(x))
    return out


def rank_q(F: Field, vec: Sequence[int]) -> int:
    """Dimension over F_q of the span of the entries of ``vec``."""
    return fq_rank(F, (F.coords(x) for x in vec))


def coordinates_in(F: Field, x: int, gamma: Sequence[int]) -> list[int]:
    """F_q-coordinates of ``x`` with respect to an ordered basis ``gamma``."""
    return coord_solver(F, gamma)(x)


def coord_solver(F: Field, gamma: Sequence[int]):
    if len(gamma) != F.m:
        raise BasisNotIndependent(f"a basis of F_q^m needs {F.m} elements")
    cols = [F.coords(g) for g in gamma]
    B = [[cols[j][i] for j in range(F.m)] for i in range(F.m)]
    Binv = fq_inverse(F, B)

    def solve(x: int) -> list[int]:
        c = F.coords(x)
        out = []
        for row in Binv:
            s = 0
            for a, b in zip(row, c):
                if a and b:
                    s = F.fq_add(s, F.fq_mul(a, b))
            out.append(s)
        return out

    return solve


def expand_matrix(F: Field, x: Sequence[int], profile, gammas=None) -> list[list[tuple[int, ...]]]:
    """Per-block n_i x m matrices over F_q whose rows are coordinates of x.

    ``gammas`` is one ordered F_q-basis of F_{q^m} per block; by default the
    fixed basis 1, z, ..., z^{m-1} is used everywhere.
    """
    lengths = list(getattr(profile, "lengths", profile))
    if sum(lengths) != len(x):
        raise ValidationError("vector length does not match the block profile")
    out = []
    pos = 0
    for i, n in enumerate(lengths):
        block = x[pos : pos + n]
        pos += n
        if gammas is None:
            out.append([F.coords(a) for a in block])
        else:
            solve = coord_solver(F, gammas[i])
            out.append([tuple(solve(a)) for a in block])
    return out


# ------------------------------------------------------- F_{q^m} level
def fqm_rref(F: Field, M: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_{q^m}; returns (rows, pivot columns)."""
    A = [list(r) for r in M]
    if not A:
        return [], []
    nr, nc = len(A), len(A[0])
    pivots = []
    r = 0
    for col in range(nc):
        piv = next((i for i in range(r, nr) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        ic = F.inv(A[r][col])
        A[r] = [F.mul(ic, a) for a in A[r]]
        for i in range(nr):
            c = A[i][col]
            if i != r and c:
                A[i] = [F.sub(a, F.mul(c, b)) for a, b in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
        if r == nr:
            break
    return A[:r], pivots


def fqm_rank(F: Field, M) -> int:
    return len(fqm_rref(F, M)[1])


def fqm_nullspace(F: Field, M: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of {y : M y^T = 0} over F_{q^m}."""
    if ncols is None:
        ncols = len(M[0])
    R, piv = fqm_rref(F, M) if M else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        y = [0] * ncols
        y[f] = 1
        for row, pc in zip(R, piv):
            y[pc] = F.neg(row[f])
        basis.append(y)
    return basis


def fqm_matmul(F: Field, A, B) -> list[list[int]]:
    Bt = list(zip(*B))
    return [[F.dot(row, col) for col in Bt] for row in A]


def fqm_inverse(F: Field, M) -> list[list[int]]:
    n = len(M)
    aug = [list(M[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    R, piv = fqm_rref(F, aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValidationError("matrix is singular")
    return [row[n:] for row in R[:n]]


def vec_mat(F: Field, v: Sequence[int], M) -> list[int]:
    """Row vector times matrix."""
    cols = len(M[0]) if M else 0
    out = [0] * cols
    for a, row in zip(v, M):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] = F.add(out[j], F.mul(a, b))
    return out


def same_rowspace(F: Field, A, B) -> bool:
    return fqm_rref(F, A)[0] == fqm_rref(F, B)[0]


# --------------------------------------------------------- F_q-subspaces
@dataclass(frozen=True, eq=False)
class FqSubspace:
    """An F_q-subspace of F_{q^m}^k given by an F_q-independent basis."""

    field: Field
    ambient: int
    basis: tuple

    def __post_init__(self):
        basis = tuple(tuple(int(a) for a in v) for v in self.basis)
        object.__setattr__(self, "basis", basis)
        if any(len(v) != self.ambient for v in basis):
            raise AmbientMismatch("basis vector of the wrong length")
        if fq_rank(self.field, self.expanded()) != len(basis):
            raise BasisNotIndependent("basis vectors are F_q-dependent")

    @classmethod
    def span(cls, F: Field, vectors: Iterable[Sequence[int]], ambient: int) -> "FqSubspace":
        """Greedy basis: keep each vector that enlarges the span, in order."""
        ech = FqEchelon(F)
        keep = []
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch("vector of the wrong length")
            if ech.add(expand(F, v)):
                keep.append(tuple(v))
        return cls(F, ambient, tuple(keep))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def expanded(self) -> list[list[int]]:
        return [expand(self.field, v) for v in self.basis]

    def echelon(self) -> FqEchelon:
        ech = FqEchelon(self.field)
        for r in self.expanded():
            ech.add(r)
        return ech

    def contains(self, x: Sequence[int]) -> bool:
        r = self.echelon().reduce(expand(self.field, x))
        return not any(r)

    def same_as(self, other: "FqSubspace") -> bool:
        """Set equality, checked by mutual containment."""
        _check_ambient(self, other)
        if self.dim != other.dim:
            return False
        ech = self.echelon()
        return all(not any(ech.reduce(r)) for r in other.expanded())

    def key(self) -> tuple:
        """Reduced row echelon form of the expansion; equal iff same set."""
        F = self.field
        ech = self.echelon()
        rows = ech.rows
        for i in range(len(rows) - 1, -1, -1):
            pc = ech.pivots[i]
            for j in range(len(rows)):
                c = rows[j][pc]
                if j != i and c:
                    rows[j] = [F.fq_sub(a, F.fq_mul(c, b)) for a, b in zip(rows[j], rows[i])]
        order = sorted(range(len(rows)), key=lambda i: ech.pivots[i])
        return tuple(tuple(rows[i]) for i in order)

    def elements(self) -> Iterator[tuple[int, ...]]:
        """Every vector of the subspace (q^dim of them)."""
        F = self.field
        for lam in itertools.product(F.subfield, repeat=self.dim):
            v = [0] * self.ambient
            for c, b in zip(lam, self.basis):
                if c:
                    v = [F.add(a, F.mul(c, x)) for a, x in zip(v, b)]
            yield tuple(v)

    def combine(self, lam: Sequence[int]) -> tuple[int, ...]:
        F = self.field
        v = [0] * self.ambient
        for c, b in zip(lam, self.basis):
            if c:
                v = [F.add(a, F.mul(c, x)) for a, x in zip(v, b)]
        return tuple(v)

    def act(self, A) -> "FqSubspace":
        """Right action u -> uA by an invertible k x k matrix over F_{q^m}."""
        return FqSubspace(self.field, self.ambient, tuple(tuple(vec_mat(self.field, u, A)) for u in self.basis))

    def scale(self, lam: int) -> "FqSubspace":
        F = self.field
        return FqSubspace(F, self.ambient, tuple(tuple(F.mul(lam, a) for a in u) for u in self.basis))

    def to_json(self) -> dict:
        F = self.field
        return {"ambient_k": self.ambient, "basis": [[F.coeffs(a) for a in v] for v in self.basis]}

    @classmethod
    def from_json(cls, F: Field, d: dict) -> "FqSubspace":
        return cls(F, d["ambient_k"], tuple(tuple(F.from_coeffs(c) for c in v) for v in d["basis"]))

    def __repr__(self):
        return f"FqSubspace(dim={self.dim}, ambient={self.ambient}, basis={self.basis})"


def _check_ambient(U: FqSubspace, W: FqSubspace):
    if U.ambient != W.ambient or U.field != W.field:
        raise AmbientMismatch("subspaces live in different ambient spaces")


def fq_span(F: Field, vectors: Iterable[Sequence[int]], ambient: int) -> FqSubspace:
    return FqSubspace.span(F, vectors, ambient)


def intersect(U: FqSubspace, W: FqSubspace) -> FqSubspace:
    """U ∩ W from the left kernel of the stacked expansion [U; W]."""
    _check_ambient(U, W)
    rows = U.expanded() + W.expanded()
    ker = fq_left_kernel(U.field, rows)
    return FqSubspace(U.field, U.ambient, tuple(U.combine(lam[: U.dim]) for lam in ker))


def intersect_dim(U: FqSubspace, W: FqSubspace) -> int:
    _check_ambient(U, W)
    return U.dim + W.dim - fq_rank(U.field, U.expanded() + W.expanded())


# ------------------------------------------------------- projective points
def num_points(Q: int, k: int) -> int:
    return (Q**k - 1) // (Q - 1)


def normalize(F: Field, v: Sequence[int]) -> tuple[int, ...]:
    """Scale so that the first nonzero coordinate is 1."""
    for a in v:
        if a:
            ia = F.inv(a)
            return tuple(F.mul(ia, x) for x in v)
    raise ValidationError("the zero vector is not a projective point")


def points_array(F: Field, k: int, lo: int = 0, hi: int | None = None) -> np.ndarray:
    """Normalized representatives with indices lo..hi-1, as an int64 array.

    Points are ordered lexicographically (canonical element order) by their
    normalized representatives, so those with more leading zeros come first.
    """
    Q = F.order
    total = num_points(Q, k)
    if hi is None:
        hi = total
    if not 0 <= lo <= hi <= total:
        raise ValidationError("point index range out of bounds")
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.zeros((hi - lo, k), dtype=np.int64)
    off = 0
    for f in range(k):
        cnt = Q**f
        sel = (idx >= off) & (idx < off + cnt)
        if sel.any():
            r = idx[sel] - off
            lead = k - 1 - f
            out[sel, lead] = 1
            for j in range(f - 1, -1, -1):
                out[sel, lead + 1 + j] = F.canon[r % Q]
                r = r // Q
        off += cnt
    return out


def point_at(F: Field, k: int, index: int) -> tuple[int, ...]:
    return tuple(int(a) for a in points_array(F, k, index, index + 1)[0])


def point_index(F: Field, v: Sequence[int]) -> int:
    v = normalize(F, v)
    k = len(v)
    Q = F.order
    lead = next(i for i, a in enumerate(v) if a)
    f = k - 1 - lead
    r = 0
    for a in v[lead + 1 :]:
        r = r * Q + F.sort_key(a)
    return sum(Q**j for j in range(f)) + r


def enum_projective(F: Field, k: int, start: int = 0, stop: int | None = None, chunk: int = 4096) -> Iterator[tuple[int, ...]]:
    """Normalized representatives of PG(k-1, q^m), optionally a sub-range."""
    total = num_points(F.order, k)
    stop = total if stop is None else min(stop, total)
    for lo in range(start, stop, chunk):
        for row in points_array(F, k, lo, min(lo + chunk, stop)).tolist():
            yield tuple(row)


def hyperplane_of(F: Field, v: Sequence[int]) -> FqSubspace:
    """The F_q-space v^⊥ = {w : sum v_i w_i = 0} of dimension m(k-1)."""
    k = len(v)
    j0 = next((i for i, a in enumerate(v) if a), None)
    if j0 is None:
        raise ValidationError("the zero vector has no hyperplane")
    iv = F.inv(v[j0])
    vecs = []
    for l in range(k):
        if l == j0:
            continue
        c = F.neg(F.mul(v[l], iv))
        for b in F.basis:
            w = [0] * k
            w[l] = b
            w[j0] = F.mul(c, b)
            vecs.append(tuple(w))
    return FqSubspace(F, k, tuple(vecs))


def point_subspace(F: Field, v: Sequence[int]) -> FqSubspace:
    """<v>_{F_{q^m}} as an m-dimensional F_q-space, basis z^j v."""
    return FqSubspace(F, len(v), tuple(tuple(F.mul(b, a) for a in v) for b in F.basis))
