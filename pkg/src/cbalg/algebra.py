"""Finite-dimensional nonassociative algebras given by structure constants.

An Algebra stores the full tensor c[i][j] = e_i * e_j as tuples of
scalars over its field.  Tables built with the anticommutative
convention specify only i < j products; the diagonal is zero and the
mirrored entries are synthesized with a sign.  Basis indices are
0-based internally and 1-based in every user-facing surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .errors import DimensionMismatch, FieldMismatch, NotAnIdeal, NotClosed
from .fields import Field
from .linalg import Matrix, Subspace

__all__ = ["Algebra", "direct_sum", "QuotientResult", "SubalgebraResult"]


def default_labels(n: int) -> tuple:
    return tuple(f"e{i + 1}" for i in range(n))


@dataclass(frozen=True)
class Algebra:
    field: Field
    dim: int
    table: tuple  # table[i][j] = coordinates of e_i * e_j
    labels: tuple
    anticommutative: bool = False
    _sparse: tuple = dc_field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if len(self.labels) != self.dim or len(self.table) != self.dim:
            raise DimensionMismatch("table/labels do not match the dimension")
        F = self.field
        sparse = []
        for i, row in enumerate(self.table):
            if len(row) != self.dim:
                raise DimensionMismatch("ragged structure tensor")
            for j, vec in enumerate(row):
                if len(vec) != self.dim:
                    raise DimensionMismatch("structure constants of wrong length")
                nz = tuple((k, c) for k, c in enumerate(vec) if not F.is_zero(c))
                if nz:
                    sparse.append((i, j, nz))
        object.__setattr__(self, "_sparse", tuple(sparse))

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_products(
        cls,
        field: Field,
        dim: int,
        products: Mapping,
        anticommutative: bool = True,
        labels: Sequence[str] | None = None,
    ) -> "Algebra":
        """Build from sparse 1-based products {(i, j): {k: scalar}}.

        With the anticommutative convention only i < j pairs may be
        given; e_j e_i = -e_i e_j and e_i e_i = 0 are filled in.
        """
        z = field.zero()
        c = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), result in products.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise DimensionMismatch(f"product index ({i},{j}) out of range 1..{dim}")
            if anticommutative and i >= j:
                raise DimensionMismatch(
                    f"anticommutative tables list only i < j products, got ({i},{j})"
                )
            for k, coeff in result.items():
                if not 1 <= k <= dim:
                    raise DimensionMismatch(f"result index {k} out of range 1..{dim}")
                c[i - 1][j - 1][k - 1] = field.canon(coeff)
            if anticommutative:
                c[j - 1][i - 1] = [field.neg(x) for x in c[i - 1][j - 1]]
        table = tuple(tuple(tuple(v) for v in row) for row in c)
        lab = tuple(labels) if labels is not None else default_labels(dim)
        return cls(field, dim, table, lab, anticommutative)

    @classmethod
    def from_table(
        cls,
        field: Field,
        table: Sequence,
        labels: Sequence[str] | None = None,
        anticommutative: bool = False,
    ) -> "Algebra":
        dim = len(table)
        t = tuple(tuple(tuple(field.canon(x) for x in vec) for vec in row) for row in table)
        lab = tuple(labels) if labels is not None else default_labels(dim)
        return cls(field, dim, t, lab, anticommutative)

    @classmethod
    def abelian(cls, field: Field, dim: int) -> "Algebra":
        return cls.from_products(field, dim, {}, anticommutative=True)

    # ------------------------------------------------------------------
    # elements
    # ------------------------------------------------------------------
    def zero_element(self) -> tuple:
        return (self.field.zero(),) * self.dim

    def basis_element(self, i: int) -> tuple:
        """The 1-based basis vector e_i."""
        if not 1 <= i <= self.dim:
            raise DimensionMismatch(f"basis index {i} out of range 1..{self.dim}")
        z, o = self.field.zero(), self.field.one()
        return tuple(o if k == i - 1 else z for k in range(self.dim))

    def element(self, coords: Sequence) -> tuple:
        if len(coords) != self.dim:
            raise DimensionMismatch("coordinate vector of wrong length")
        return tuple(self.field.canon(x) for x in coords)

    def add(self, x: Sequence, y: Sequence) -> tuple:
        F = self.field
        return tuple(F.add(a, b) for a, b in zip(x, y))

    def scale(self, a, x: Sequence) -> tuple:
        F = self.field
        return tuple(F.mul(a, b) for b in x)

    def is_zero_element(self, x: Sequence) -> bool:
        F = self.field
        return all(F.is_zero(a) for a in x)

    def format_element(self, x: Sequence) -> str:
        F = self.field
        parts = []
        for i, a in enumerate(x):
            if F.is_zero(a):
                continue
            s = F.render(a)
            parts.append(self.labels[i] if s == "1" else f"{s}*{self.labels[i]}")
        return " + ".join(parts) if parts else "0"

    # ------------------------------------------------------------------
    # products
    # ------------------------------------------------------------------
    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        """Bilinear extension of the structure table."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("element of wrong length")
        F = self.field
        out = [F.zero()] * self.dim
        for i, j, nz in self._sparse:
            xi = x[i]
            if F.is_zero(xi):
                continue
            yj = y[j]
            if F.is_zero(yj):
                continue
            coeff = F.mul(xi, yj)
            for k, c in nz:
                out[k] = F.add(out[k], F.mul(coeff, c))
        return tuple(out)

    def mul_operator(self, x: Sequence, side: str = "right") -> Matrix:
        """Matrix of a |-> a*x (right) or a |-> x*a (left) on basis columns."""
        if side not in ("right", "left"):
            raise ValueError("side must be 'right' or 'left'")
        cols = []
        for j in range(self.dim):
            e = self.basis_element(j + 1)
            cols.append(self.multiply(e, x) if side == "right" else self.multiply(x, e))
        entries = tuple(tuple(cols[j][k] for j in range(self.dim)) for k in range(self.dim))
        return Matrix(self.field, entries, self.dim)

    def subspace_product(self, U: Subspace, V: Subspace) -> Subspace:
        """Span of u*v over basis vectors; exact by bilinearity."""
        self._check_subspace(U)
        self._check_subspace(V)
        vectors = [self.multiply(u, v) for u in U.basis for v in V.basis]
        return Subspace.span(self.field, self.dim, vectors)

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_subspace(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    # ------------------------------------------------------------------
    # ideals, quotients, subalgebras
    # ------------------------------------------------------------------
    def ideal_containments(self, I: Subspace) -> tuple:
        """(I*A <= I, A*I <= I); both are required of an ideal."""
        self._check_subspace(I)
        A = self.full_space()
        return (
            I.contains(self.subspace_product(I, A)),
            I.contains(self.subspace_product(A, I)),
        )

    def is_ideal(self, I: Subspace) -> bool:
        left, right = self.ideal_containments(I)
        return left and right

    def ideal_closure(self, S: Subspace) -> Subspace:
        """Smallest ideal containing S (iterated products with A)."""
        A = self.full_space()
        current = S
        while True:
            grown = current.sum(self.subspace_product(current, A))
            grown = grown.sum(self.subspace_product(A, current))
            if grown == current:
                return current
            current = grown

    def quotient(self, I: Subspace) -> "QuotientResult":
        """Quotient by an ideal, on the non-pivot coordinates of I's basis."""
        if not self.is_ideal(I):
            raise NotAnIdeal("quotient requires an ideal")
        keep = [c for c in range(self.dim) if c not in I.pivots]
        m = len(keep)

        def project(v):
            red = I.reduce(v)
            return tuple(red[c] for c in keep)

        table = tuple(
            tuple(
                project(self.multiply(self.basis_element(keep[a] + 1), self.basis_element(keep[b] + 1)))
                for b in range(m)
            )
            for a in range(m)
        )
        labels = tuple(self.labels[c] for c in keep)
        quot = Algebra(self.field, m, table, labels, self.anticommutative)
        proj_entries = []
        for j in range(self.dim):
            col = project(self.basis_element(j + 1))
            proj_entries.append(col)
        projection = Matrix(
            self.field,
            tuple(tuple(proj_entries[j][a] for j in range(self.dim)) for a in range(m)),
            self.dim,
        )
        return QuotientResult(quot, projection)

    def induced_subalgebra(self, S: Subspace) -> "SubalgebraResult":
        """The algebra on S in its own basis; requires S*S <= S."""
        self._check_subspace(S)
        if not S.contains(self.subspace_product(S, S)):
            raise NotClosed("subspace is not closed under the product")
        m = S.dim

        def coords(w):
            # RREF basis has unit pivots, so coordinates sit at pivot columns
            return tuple(w[p] for p in S.pivots)

        table = tuple(
            tuple(coords(self.multiply(S.basis[a], S.basis[b])) for b in range(m))
            for a in range(m)
        )
        sub = Algebra(self.field, m, table, default_labels(m), self.anticommutative)
        inclusion = Matrix(
            self.field,
            tuple(tuple(S.basis[a][j] for a in range(m)) for j in range(self.dim)),
            m,
        )
        return SubalgebraResult(sub, inclusion)

    def _check_subspace(self, S: Subspace):
        if S.field != self.field:
            raise FieldMismatch("subspace over a different field")
        if S.ambient_dim != self.dim:
            raise DimensionMismatch("subspace of a different ambient dimension")

    def same_table(self, other: "Algebra") -> bool:
        return self.field == other.field and self.dim == other.dim and self.table == other.table


@dataclass(frozen=True)
class QuotientResult:
    algebra: Algebra
    projection: Matrix  # m x n, an algebra homomorphism


@dataclass(frozen=True)
class SubalgebraResult:
    algebra: Algebra
    inclusion: Matrix  # n x m


def direct_sum(A1: Algebra, A2: Algebra) -> Algebra:
    """Block product with zero cross terms."""
    if A1.field != A2.field:
        raise FieldMismatch("direct sum over different fields")
    F = A1.field
    n1, n2 = A1.dim, A2.dim
    n = n1 + n2
    z = F.zero()

    def pad_left(v):
        return tuple(v) + (z,) * n2

    def pad_right(v):
        return (z,) * n1 + tuple(v)

    zero = (z,) * n
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < n1 and j < n1:
                row.append(pad_left(A1.table[i][j]))
            elif i >= n1 and j >= n1:
                row.append(pad_right(A2.table[i - n1][j - n1]))
            else:
                row.append(zero)
        table.append(tuple(row))
    return Algebra(
        F,
        n,
        tuple(table),
        default_labels(n),
        A1.anticommutative and A2.anticommutative,
    )
