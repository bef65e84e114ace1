"""Finite group actions by algebra automorphisms.

A group acts through invertible matrices g with g(e_i e_j) =
(g e_i)(g e_j); that bilinear condition on basis pairs is enough for
the whole action axiom.  Groups are given by generators and closed
under multiplication; a finite closure of invertible matrices is
automatically a group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .algebra import Algebra
from .errors import CapExceeded, DimensionMismatch, InfiniteField, NotAutomorphism
from .fields import PrimeField
from .linalg import Matrix, Subspace
from .structure import DEFAULT_CAP

__all__ = [
    "GroupAction",
    "is_automorphism",
    "generate_group",
    "orbit",
    "verify_cb_preservation",
    "PreservationReport",
    "orbit_union",
    "OrbitUnionReport",
]


def is_automorphism(A: Algebra, g: Matrix):
    """Invertible and multiplicative on basis pairs; witness is (i, j)."""
    if g.nrows != A.dim or g.ncols != A.dim:
        raise DimensionMismatch("matrix size does not match the algebra")
    if not g.is_invertible():
        return False, (0, 0)
    images = [g.mat_vec(A.basis_element(i)) for i in range(1, A.dim + 1)]
    for i in range(1, A.dim + 1):
        for j in range(1, A.dim + 1):
            lhs = g.mat_vec(A.table[i - 1][j - 1])
            rhs = A.multiply(images[i - 1], images[j - 1])
            if lhs != rhs:
                return False, (i, j)
    return True, None


@dataclass(frozen=True)
class GroupAction:
    algebra: Algebra
    generators: tuple
    elements: tuple  # full closure, identity first

    @property
    def order(self) -> int:
        return len(self.elements)


def generate_group(A: Algebra, gens: Sequence[Matrix], cap: int = 10_000) -> GroupAction:
    """Breadth-first closure of the generators under multiplication."""
    for g in gens:
        ok, wit = is_automorphism(A, g)
        if not ok:
            raise NotAutomorphism(f"generator breaks the product at basis pair {wit}")
    ident = Matrix.identity(A.field, A.dim)
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for b in frontier:
            for g in gens:
                prod = g.matmul(b)
                if prod not in seen:
                    seen.add(prod)
                    elements.append(prod)
                    new.append(prod)
                    if len(elements) > cap:
                        raise CapExceeded(f"group closure exceeded cap {cap}")
        frontier = new
    return GroupAction(A, tuple(gens), tuple(elements))


def orbit(action: GroupAction, x) -> frozenset:
    """{g x : g in G}; orbits of two points are equal or disjoint."""
    x = action.algebra.element(x)
    return frozenset(g.mat_vec(x) for g in action.elements)


def _mask_and_index(action: GroupAction, cap: int):
    A = action.algebra
    if not isinstance(A.field, PrimeField):
        raise InfiniteField("CB-element certification needs a finite field")
    p = A.field.p
    total = p ** A.dim
    if total > cap:
        raise CapExceeded(f"{p}^{A.dim} = {total} exceeds cap {cap}")
    c = kernels.mod_tensor(A)
    V = kernels.vectors_mod_p(p, A.dim)
    mask = kernels.cb_element_mask(c, p, V)
    weights = [p ** (A.dim - 1 - i) for i in range(A.dim)]

    def index_of(vec) -> int:
        return sum(int(v) % p * w for v, w in zip(vec, weights))

    return mask, V, index_of


@dataclass(frozen=True)
class PreservationReport:
    space_size: int
    cb_count: int
    pairs_checked: int
    violations: tuple  # ((z, g_index), ...); empty unless something is broken

    @property
    def holds(self) -> bool:
        return not self.violations


def verify_cb_preservation(action: GroupAction, cap: int = DEFAULT_CAP) -> PreservationReport:
    """Every group element must map certified CB-elements to CB-elements."""
    A = action.algebra
    mask, V, index_of = _mask_and_index(action, cap)
    violations = []
    checked = 0
    for idx in np.nonzero(mask)[0]:
        z = A.element(tuple(int(v) for v in V[idx]))
        for gi, g in enumerate(action.elements):
            checked += 1
            if not mask[index_of(g.mat_vec(z))]:
                violations.append((z, gi))
    return PreservationReport(
        space_size=V.shape[0],
        cb_count=int(mask.sum()),
        pairs_checked=checked,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class OrbitUnionReport:
    b_set: frozenset
    span: Subspace
    is_subalgebra: bool      # the span is closed under the product
    set_equals_span: bool    # the union is itself the full subspace

    @property
    def size(self) -> int:
        return len(self.b_set)


def orbit_union(action: GroupAction, cap: int = DEFAULT_CAP) -> OrbitUnionReport:
    """Union of the orbits of all certified CB-elements.

    The span is checked for closure under the product; whether the raw
    union already equals its span is reported rather than assumed.
    """
    A = action.algebra
    mask, V, _ = _mask_and_index(action, cap)
    b_set = set()
    for idx in np.nonzero(mask)[0]:
        z = A.element(tuple(int(v) for v in V[idx]))
        b_set.update(orbit(action, z))
    span = Subspace.span(A.field, A.dim, sorted(b_set))
    closed = span.contains(A.subspace_product(span, span))
    equals = len(b_set) == A.field.p ** span.dim
    return OrbitUnionReport(
        b_set=frozenset(b_set),
        span=span,
        is_subalgebra=closed,
        set_equals_span=equals,
    )
