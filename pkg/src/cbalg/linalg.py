"""Exact linear algebra: RREF, kernels, and the subspace lattice.

Everything works over either ground field through the Field interface.
Reduced row echelon form is the canonical representative throughout, so
subspace equality is plain equality of basis tuples.  Matrices at the
scales used here have at most a few hundred entries; clarity and
determinism win over asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field

__all__ = ["Matrix", "Subspace", "rref", "kernel", "lattice", "LatticeResult"]


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix; ncols is explicit so 0-row matrices keep a width."""

    field: Field
    entries: tuple
    ncols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.ncols:
                raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(field.canon(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(field, rows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return cls(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def mat_vec(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"matrix has {self.ncols} columns, vector has {len(v)}")
        F = self.field
        out = []
        for row in self.entries:
            acc = F.zero()
            for a, x in zip(row, v):
                if not F.is_zero(a) and not F.is_zero(x):
                    acc = F.add(acc, F.mul(a, x))
            out.append(acc)
        return tuple(out)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatch("matrix product over different fields")
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions differ")
        F = self.field
        cols = [other.column(j) for j in range(other.ncols)]
        rows = []
        for row in self.entries:
            out = []
            for col in cols:
                acc = F.zero()
                for a, b in zip(row, col):
                    if not F.is_zero(a) and not F.is_zero(b):
                        acc = F.add(acc, F.mul(a, b))
                out.append(acc)
            rows.append(tuple(out))
        return Matrix(F, tuple(rows), other.ncols)

    def is_zero(self) -> bool:
        F = self.field
        return all(F.is_zero(x) for row in self.entries for x in row)

    def rank(self) -> int:
        _, pivots = _rref_rows(self.field, [list(r) for r in self.entries], self.ncols)
        return len(pivots)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.ncols

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise DimensionMismatch("only square matrices invert")
        F = self.field
        n = self.ncols
        aug = [list(row) + list(Matrix.identity(F, n).entries[i]) for i, row in enumerate(self.entries)]
        rows, pivots = _rref_rows(F, aug, 2 * n)
        if len(pivots) != n or any(p >= n for p in pivots):
            raise DimensionMismatch("matrix is singular")
        return Matrix(F, tuple(tuple(r[n:]) for r in rows), n)


def _rref_rows(field: Field, rows: list, ncols: int):
    """In-place Gauss-Jordan; pivot = first nonzero in column order."""
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, tuple(pivots)


def rref(M: Matrix) -> Matrix:
    """The unique reduced row echelon form; zero rows stay at the bottom."""
    rows, _ = _rref_rows(M.field, [list(r) for r in M.entries], M.ncols)
    return Matrix(M.field, tuple(tuple(r) for r in rows), M.ncols)


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^n with a canonical RREF basis and no zero rows.

    Two subspaces are equal iff their basis tuples are identical; the
    zero subspace is the 0-row basis with a recorded ambient dimension.
    """

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dim {ambient_dim}")
            vecs.append([field.canon(x) for x in v])
        rows, pivots = _rref_rows(field, vecs, ambient_dim)
        basis = tuple(tuple(r) for r in rows[: len(pivots)])
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls.span(field, ambient_dim, Matrix.identity(field, ambient_dim).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def reduce(self, v: Sequence) -> tuple:
        """Canonical representative of v modulo this subspace."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector/ambient dimension mismatch")
        F = self.field
        w = list(v)
        # one pass is exact: the basis is RREF with unit pivots
        for row, pc in zip(self.basis, self.pivots):
            f = w[pc]
            if not F.is_zero(f):
                w = [F.sub(x, F.mul(f, y)) for x, y in zip(w, row)]
        return tuple(w)

    def contains_vector(self, v: Sequence) -> bool:
        F = self.field
        return all(F.is_zero(x) for x in self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains_vector(row) for row in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Solve a*U = b*V: the kernel of the stacked coefficient system."""
        self._check(other)
        F = self.field
        du, dv = self.dim, other.dim
        if du == 0 or dv == 0:
            return Subspace.zero(F, self.ambient_dim)
        rows = []
        for coord in range(self.ambient_dim):
            row = [self.basis[a][coord] for a in range(du)]
            row += [F.neg(other.basis[b][coord]) for b in range(dv)]
            rows.append(tuple(row))
        combo = kernel(Matrix(F, tuple(rows), du + dv))
        vectors = []
        for cv in combo.basis:
            w = [F.zero()] * self.ambient_dim
            for a in range(du):
                if not F.is_zero(cv[a]):
                    w = [F.add(x, F.mul(cv[a], y)) for x, y in zip(w, self.basis[a])]
            vectors.append(w)
        return Subspace.span(F, self.ambient_dim, vectors)

    def _check(self, other: "Subspace"):
        if self.field != other.field:
            raise FieldMismatch("subspaces over different fields")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces in different ambient dimensions")

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient_dim)


def kernel(M: Matrix) -> Subspace:
    """Null space {v : M v = 0} with canonical RREF basis."""
    F = M.field
    rows, pivots = _rref_rows(F, [list(r) for r in M.entries], M.ncols)
    pivot_set = set(pivots)
    vectors = []
    for f in range(M.ncols):
        if f in pivot_set:
            continue
        v = [F.zero()] * M.ncols
        v[f] = F.one()
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(rows[r][f])
        vectors.append(v)
    return Subspace.span(F, M.ncols, vectors)


@dataclass(frozen=True)
class LatticeResult:
    sum: Subspace
    intersection: Subspace
    u_contains_v: bool
    equal: bool


def lattice(U: Subspace, V: Subspace) -> LatticeResult:
    """Sum, intersection and the containment flags in one record."""
    return LatticeResult(
        sum=U.sum(V),
        intersection=U.intersection(V),
        u_contains_v=U.contains(V),
        equal=U == V,
    )
