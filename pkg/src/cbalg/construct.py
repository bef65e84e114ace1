"""Builders: the (Z, B, C) decomposition constructor, the seven
dimensional witness algebra, random generators for fuzzing, and
Leibniz liesation.

A decomposition of an anticommutative bonding algebra splits it as
(Z + B) + C with C a complement of the derived subspace, B a
complement of the center inside it, and all products determined by
e_i e_j = e_ij + z_ij and e_i e_jk = z_ijk.  Conditions (1)-(6) are
tracked in a ConditionReport; an algebra is emitted only when the
product is well defined (conditions 4 and 5).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .algebra import Algebra, QuotientResult
from .errors import (
    BadDims,
    IllDefined,
    NotADirectSum,
    NotLeibniz,
    VerdictMismatch,
)
from .fields import Field, PrimeField
from .identities import (
    is_anti_associative,
    is_anti_commutative,
    is_leibniz,
    is_lie,
)
from .linalg import Matrix, Subspace
from .structure import center

__all__ = [
    "DecompositionData",
    "ConditionReport",
    "BuildResult",
    "build_from_decomposition",
    "verify_decomposition",
    "example_seven",
    "random_cb_algebra",
    "random_anticommutative",
    "random_general",
    "random_graded",
    "liesation",
    "LiesationResult",
]


def _pair_list(r: int):
    return [(j, k) for j in range(1, r + 1) for k in range(j + 1, r + 1)]


def _perm_sign3(i: int, j: int, k: int) -> int:
    inv = (i > j) + (i > k) + (j > k)
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class DecompositionData:
    """Sparse data for the three-subspace construction.

    e maps ordered pairs (i, j), i < j, to coordinates in B; zij maps
    the same pairs to coordinates in Z; zijk maps ordered triples
    i < j < k to coordinates in Z and extends as a strictly
    alternating function (any repeated index gives zero; in
    characteristic two a bare sign rule would not force that, but
    anti-associativity does).
    """

    field: Field
    r: int
    dim_b: int
    dim_z: int
    e: Mapping
    zij: Mapping
    zijk: Mapping

    def __post_init__(self):
        if self.r < 0 or self.dim_b < 0 or self.dim_z < 0:
            raise BadDims("negative dimensions")
        max_b = self.r * (self.r - 1) // 2
        if self.dim_b > max_b:
            raise BadDims(f"dimB = {self.dim_b} exceeds r(r-1)/2 = {max_b}")
        for (i, j) in self.e:
            if not (1 <= i < j <= self.r):
                raise BadDims(f"e index ({i},{j}) is not an ordered pair in 1..{self.r}")
            if len(self.e[(i, j)]) != self.dim_b:
                raise BadDims("e coordinates of wrong length")
        for (i, j) in self.zij:
            if not (1 <= i < j <= self.r):
                raise BadDims(f"zij index ({i},{j}) is not an ordered pair in 1..{self.r}")
            if len(self.zij[(i, j)]) != self.dim_z:
                raise BadDims("zij coordinates of wrong length")
        for (i, j, k) in self.zijk:
            if not (1 <= i < j < k <= self.r):
                raise BadDims(f"zijk index ({i},{j},{k}) is not an ordered triple")
            if len(self.zijk[(i, j, k)]) != self.dim_z:
                raise BadDims("zijk coordinates of wrong length")

    def _zero_b(self):
        return (self.field.zero(),) * self.dim_b

    def _zero_z(self):
        return (self.field.zero(),) * self.dim_z

    def e_vec(self, i: int, j: int) -> tuple:
        if i == j:
            return self._zero_b()
        if i < j:
            return tuple(self.field.canon(x) for x in self.e.get((i, j), self._zero_b()))
        return tuple(self.field.neg(x) for x in self.e_vec(j, i))

    def zij_vec(self, i: int, j: int) -> tuple:
        if i == j:
            return self._zero_z()
        if i < j:
            return tuple(self.field.canon(x) for x in self.zij.get((i, j), self._zero_z()))
        return tuple(self.field.neg(x) for x in self.zij_vec(j, i))

    def zijk_vec(self, i: int, j: int, k: int) -> tuple:
        if i == j or j == k or i == k:
            return self._zero_z()
        a, b, c = sorted((i, j, k))
        base = tuple(self.field.canon(x) for x in self.zijk.get((a, b, c), self._zero_z()))
        if _perm_sign3(i, j, k) == 1:
            return base
        return tuple(self.field.neg(x) for x in base)


@dataclass(frozen=True)
class ConditionReport:
    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool
    cond5: bool
    cond6: bool
    notes: dict

    @property
    def well_defined(self) -> bool:
        return self.cond5

    @property
    def center_exact(self) -> bool:
        return self.cond6

    def all_structural(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3 and self.cond4 and self.cond5


@dataclass(frozen=True)
class BuildResult:
    algebra: Algebra
    report: ConditionReport
    c_span: Subspace
    b_span: Subspace
    z_span: Subspace


def _solve_particular(field: Field, rows, ncols: int, target):
    """One solution of (rows) * mu = target with free variables at zero."""
    from .linalg import _rref_rows

    aug = [list(row) + [t] for row, t in zip(rows, target)]
    red, pivots = _rref_rows(field, aug, ncols + 1)
    if ncols in pivots:
        return None
    mu = [field.zero()] * ncols
    for r, pc in enumerate(pivots):
        mu[pc] = red[r][ncols]
    return mu


def build_from_decomposition(d: DecompositionData) -> BuildResult:
    """Assemble the algebra with basis ordered C, then B, then Z.

    Products: e_i e_j = e_ij + z_ij on C, e_i b = sum of z_ijk pulled
    through any expression of b in the spanning products e_jk (well
    defined exactly when condition 5 holds), B*B = 0 and Z annihilates
    everything; the result always satisfies x*x = 0 and is
    anti-associative.
    """
    F = d.field
    r, dim_b, dim_z = d.r, d.dim_b, d.dim_z
    n = r + dim_b + dim_z
    pairs = _pair_list(r)
    npairs = len(pairs)

    # E has a column per ordered pair, a row per B coordinate
    e_cols = {pr: d.e_vec(*pr) for pr in pairs}
    e_rows = [tuple(e_cols[pr][row] for pr in pairs) for row in range(dim_b)]

    notes = {}
    cond4 = True
    cond5 = True
    if dim_b:
        from .linalg import Matrix as _M, kernel as _kernel

        Em = _M(F, tuple(e_rows), npairs)
        if Em.rank() != dim_b:
            cond4 = False
            notes["cond4"] = "the products e_i e_j do not span B"
        lam_space = _kernel(Em)
        for lam in lam_space.basis:
            for i in range(1, r + 1):
                acc = [F.zero()] * dim_z
                for t, (j, k) in enumerate(pairs):
                    if F.is_zero(lam[t]):
                        continue
                    zv = d.zijk_vec(i, j, k)
                    acc = [F.add(a, F.mul(lam[t], z)) for a, z in zip(acc, zv)]
                if any(not F.is_zero(a) for a in acc):
                    cond5 = False
                    notes["cond5"] = (
                        "a dependency among the e_jk has a nonzero z_ijk combination "
                        f"(i = {i})"
                    )
                    break
            if not cond5:
                break
    if not cond4:
        raise IllDefined(notes.get("cond4", "condition 4 fails"))
    if not cond5:
        raise IllDefined(notes.get("cond5", "condition 5 fails"))

    z = F.zero()

    def c_embed(bvec, zvec):
        return (z,) * 0 + (z,) * r + tuple(bvec) + tuple(zvec)

    zero_el = (z,) * n
    table = [[zero_el] * n for _ in range(n)]
    # C x C
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            if i == j:
                continue
            table[i - 1][j - 1] = c_embed(d.e_vec(i, j), d.zij_vec(i, j))
    # C x B (and the mirrored B x C): e_i * b_a through a preimage of b_a
    if dim_b:
        unit = [F.zero()] * dim_b
        for a in range(dim_b):
            target = list(unit)
            target[a] = F.one()
            mu = _solve_particular(F, e_rows, npairs, target)
            if mu is None:
                raise IllDefined("the products e_i e_j do not span B")
            for i in range(1, r + 1):
                acc = [F.zero()] * dim_z
                for t, (j, k) in enumerate(pairs):
                    if F.is_zero(mu[t]):
                        continue
                    zv = d.zijk_vec(i, j, k)
                    acc = [F.add(x, F.mul(mu[t], y)) for x, y in zip(acc, zv)]
                prod = (z,) * (r + dim_b) + tuple(acc)
                table[i - 1][r + a] = prod
                table[r + a][i - 1] = tuple(F.neg(x) for x in prod)

    labels = (
        tuple(f"e{i}" for i in range(1, r + 1))
        + tuple(f"b{a + 1}" for a in range(dim_b))
        + tuple(f"z{t + 1}" for t in range(dim_z))
    )
    A = Algebra(F, n, tuple(tuple(row) for row in table), labels, anticommutative=True)

    ok_ac, _ = is_anti_commutative(A)
    ok_aa, _ = is_anti_associative(A)
    if not (ok_ac and ok_aa):
        raise VerdictMismatch("constructed algebra is not anti-associative; this is a bug")

    c_span = Subspace.span(F, n, [A.basis_element(i) for i in range(1, r + 1)])
    b_span = Subspace.span(F, n, [A.basis_element(r + a + 1) for a in range(dim_b)])
    z_span = Subspace.span(F, n, [A.basis_element(r + dim_b + t + 1) for t in range(dim_z)])
    # Z always sits inside the center here, so exact equality is the same
    # as the center missing B + C
    cond6 = center(A) == z_span
    if not cond6:
        notes["cond6"] = "Z is smaller than the center; the decomposition is not canonical"
    report = ConditionReport(True, True, True, cond4, cond5, cond6, notes)
    return BuildResult(A, report, c_span, b_span, z_span)


def verify_decomposition(A: Algebra, Z: Subspace, B: Subspace, C: Subspace) -> ConditionReport:
    """Check conditions (1)-(6) for a proposed splitting of A."""
    F = A.field
    n = A.dim
    total = Z.sum(B).sum(C)
    if Z.dim + B.dim + C.dim != n or total.dim != n:
        raise NotADirectSum("Z, B, C do not split the algebra")
    notes = {}
    bz = B.sum(Z)
    full = A.full_space()

    cond1 = bz.contains(A.subspace_product(C, C)) and Z.contains(A.subspace_product(C, B))
    if not cond1:
        notes["cond1"] = "products of C do not land in B + Z, or C*B leaves Z"
    cond2 = (
        A.subspace_product(B, B).is_zero()
        and A.subspace_product(full, Z).is_zero()
        and A.subspace_product(Z, full).is_zero()
    )
    if not cond2:
        notes["cond2"] = "B*B != 0 or Z is not annihilated"

    ok_ac, wit = is_anti_commutative(A)
    cond3 = ok_ac
    r = C.dim
    cbasis = C.basis

    def split_bz(w):
        # coordinates of w in the bases of B and Z (unique on B + Z)
        rows = list(B.basis) + list(Z.basis)
        cols = len(rows)
        mat_rows = [tuple(rows[c][coord] for c in range(cols)) for coord in range(n)]
        sol = _solve_particular(F, mat_rows, cols, list(w))
        if sol is None:
            return None, None
        return tuple(sol[: B.dim]), tuple(sol[B.dim:])

    z3 = {}
    if cond1 and cond3:
        e_coords = {}
        for i in range(r):
            for j in range(r):
                bpart, _ = split_bz(A.multiply(cbasis[i], cbasis[j]))
                if bpart is None:
                    cond1 = False
                    notes["cond1"] = "a C*C product escapes B + Z"
                    break
                e_coords[(i, j)] = bpart
            if not cond1:
                break
        if cond1:
            for i in range(r):
                for j in range(r):
                    b_elem = [F.zero()] * n
                    for c_idx in range(B.dim):
                        if not F.is_zero(e_coords[(i, j)][c_idx]):
                            b_elem = [
                                F.add(x, F.mul(e_coords[(i, j)][c_idx], y))
                                for x, y in zip(b_elem, B.basis[c_idx])
                            ]
                    for k in range(r):
                        z3[(k + 1, i + 1, j + 1)] = A.multiply(cbasis[k], b_elem)
            for i in range(1, r + 1):
                for j in range(1, r + 1):
                    for k in range(1, r + 1):
                        if len({i, j, k}) < 3:
                            if not A.is_zero_element(z3[(i, j, k)]):
                                cond3 = False
                                notes["cond3"] = f"z_({i},{j},{k}) with a repeated index is nonzero"
                            continue
                        a, b, c = sorted((i, j, k))
                        ref = z3[(a, b, c)]
                        if _perm_sign3(i, j, k) == -1:
                            ref = tuple(F.neg(x) for x in ref)
                        if z3[(i, j, k)] != ref:
                            cond3 = False
                            notes["cond3"] = f"z indices ({i},{j},{k}) do not alternate"
    elif not cond3:
        notes["cond3"] = f"x*x = 0 fails: {wit.expression}"

    cond4 = True
    cond5 = True
    if cond1:
        prods = [A.multiply(cbasis[i], cbasis[j]) for i in range(r) for j in range(i + 1, r)]
        bparts = []
        for w in prods:
            bp, _ = split_bz(w)
            bparts.append(bp if bp is not None else (F.zero(),) * B.dim)
        span_b = Subspace.span(F, B.dim, bparts) if B.dim else Subspace.zero(F, 0)
        cond4 = span_b.dim == B.dim
        if not cond4:
            notes["cond4"] = "the products e_i e_j do not span B"
        if B.dim:
            from .linalg import Matrix as _M, kernel as _kernel

            pairs = _pair_list(r)
            cols = {
                (j, k): bparts[idx]
                for idx, (j, k) in enumerate(pairs)
            }
            e_rows = [tuple(cols[pr][row] for pr in pairs) for row in range(B.dim)]
            lam_space = _kernel(_M(F, tuple(e_rows), len(pairs)))
            for lam in lam_space.basis:
                for i in range(1, r + 1):
                    acc = (F.zero(),) * n
                    for t, (j, k) in enumerate(pairs):
                        if F.is_zero(lam[t]):
                            continue
                        term = z3.get((i, j, k))
                        if term is None:
                            continue
                        acc = tuple(F.add(x, F.mul(lam[t], y)) for x, y in zip(acc, term))
                    if any(not F.is_zero(x) for x in acc):
                        cond5 = False
                        notes["cond5"] = "a dependency among the e_jk carries nonzero z_ijk"
                        break
                if not cond5:
                    break

    cond6 = center(A) == Z
    if not cond6:
        notes["cond6"] = "Z is not exactly the center of A"
    return ConditionReport(cond1, cond2, cond3, cond4, cond5, cond6, notes)


def example_seven(F: Field) -> Algebra:
    """The seven dimensional algebra with a nonzero triple product.

    Lie exactly in characteristic three, associative exactly in
    characteristic two, and anti-associative over every field.
    """
    return Algebra.from_products(
        F,
        7,
        {
            (1, 2): {4: 1},
            (1, 3): {5: 1},
            (2, 3): {6: 1},
            (1, 6): {7: 1},
            (2, 5): {7: -1},
            (3, 4): {7: 1},
        },
        anticommutative=True,
    )


def _nonzero_pool(field: Field):
    if isinstance(field, PrimeField):
        return [field.canon(v) for v in range(1, field.p)]
    return [field.canon(v) for v in (-2, -1, 1, 2)]


def random_cb_algebra(
    seed: int,
    field: Field,
    r: int,
    dim_z: int,
    sparsity: float = 0.5,
) -> Algebra:
    """Deterministic random bonding algebra from free decomposition data.

    B is taken free of dimension r(r-1)/2 with the pair products as its
    basis, which makes conditions 4 and 5 automatic; z_ij and z_ijk
    entries are sampled with the given density.  Condition 6 is not
    enforced.
    """
    if r < 1:
        raise BadDims("r must be at least 1")
    rng = random.Random(seed)
    pairs = _pair_list(r)
    dim_b = len(pairs)
    F = field
    pool = _nonzero_pool(F)
    e = {}
    for idx, pr in enumerate(pairs):
        unit = [F.zero()] * dim_b
        unit[idx] = F.one()
        e[pr] = tuple(unit)

    def sample_z():
        return tuple(
            rng.choice(pool) if rng.random() < sparsity else F.zero()
            for _ in range(dim_z)
        )

    zij = {pr: sample_z() for pr in pairs}
    zijk = {}
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            for k in range(j + 1, r + 1):
                zijk[(i, j, k)] = sample_z()
    data = DecompositionData(F, r, dim_b, dim_z, e, zij, zijk)
    return build_from_decomposition(data).algebra


def random_anticommutative(seed: int, field: Field, dim: int, sparsity: float = 0.4) -> Algebra:
    """Random table with x*x = 0; no other structure imposed."""
    rng = random.Random(seed)
    pool = _nonzero_pool(field)
    products = {}
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            row = {
                k: rng.choice(pool)
                for k in range(1, dim + 1)
                if rng.random() < sparsity
            }
            if row:
                products[(i, j)] = row
    return Algebra.from_products(field, dim, products, anticommutative=True)


def random_general(seed: int, field: Field, dim: int, sparsity: float = 0.25) -> Algebra:
    """Fully random sparse table, no identities imposed."""
    rng = random.Random(seed)
    pool = _nonzero_pool(field)
    products = {}
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            row = {
                k: rng.choice(pool)
                for k in range(1, dim + 1)
                if rng.random() < sparsity
            }
            if row:
                products[(i, j)] = row
    if products:
        return Algebra.from_products(field, dim, products, anticommutative=False)
    return Algebra.from_products(field, dim, {}, anticommutative=False)


def random_graded(seed: int, field: Field, dim: int, sparsity: float = 0.5) -> Algebra:
    """Random table whose products raise the basis index (nilpotent shape)."""
    rng = random.Random(seed)
    pool = _nonzero_pool(field)
    products = {}
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            row = {
                k: rng.choice(pool)
                for k in range(max(i, j) + 1, dim + 1)
                if rng.random() < sparsity
            }
            if row:
                products[(i, j)] = row
    return Algebra.from_products(field, dim, products, anticommutative=False)


@dataclass(frozen=True)
class LiesationResult:
    ideal: Subspace
    quotient: Algebra
    projection: Matrix


def liesation(L: Algebra) -> LiesationResult:
    """Quotient by the ideal closure of all squares; the largest Lie image.

    The span of e_i e_i together with the polarized sums
    e_i e_j + e_j e_i is exactly the span of all squares, over any
    field.
    """
    r_ok, _ = is_leibniz(L, "right")
    l_ok, _ = is_leibniz(L, "left")
    if not (r_ok or l_ok):
        raise NotLeibniz("liesation needs a one-sided Leibniz algebra")
    gens = []
    for i in range(1, L.dim + 1):
        gens.append(L.table[i - 1][i - 1])
        for j in range(i + 1, L.dim + 1):
            gens.append(L.add(L.table[i - 1][j - 1], L.table[j - 1][i - 1]))
    I = L.ideal_closure(Subspace.span(L.field, L.dim, gens))
    q: QuotientResult = L.quotient(I)
    ok, _ = is_lie(q.algebra)
    if not ok:
        raise VerdictMismatch("liesation quotient failed the Lie check; this is a bug")
    return LiesationResult(ideal=I, quotient=q.algebra, projection=q.projection)
