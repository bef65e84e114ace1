"""Basis-level checkers for the product identities used by the toolkit.

Each multilinear identity is checked on basis tuples, which is exact
over every field.  The two quadratic conditions (x*x = 0 and
(y*x)*x = 0) are checked through their coefficient systems, which are
equivalent to the pointwise statements over every field because the
square coefficients appear as isolated basis conditions.  The only
genuinely non-multilinear identity, [[x,y],[x,y]] = 0, is checked at
the coefficient level; that is sufficient over all fields and
equivalent to the pointwise statement whenever the field has at least
three elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from .algebra import Algebra
from .errors import CapExceeded, InfiniteField
from .fields import PrimeField, enumerate_vectors

__all__ = [
    "Witness",
    "IdentityReport",
    "is_anti_commutative",
    "is_anti_associative",
    "is_lie",
    "is_associative",
    "is_leibniz",
    "is_symmetric_leibniz",
    "all_absolute_zero_divisors",
    "identity_report",
    "symmetric_leibniz_pointwise",
]


@dataclass(frozen=True)
class Witness:
    """A failing basis tuple (1-based) with its nonzero defect."""

    indices: tuple
    defect: tuple
    expression: str

    def describe(self, A: Algebra) -> str:
        return f"{self.expression} = {A.format_element(self.defect)}"


@dataclass(frozen=True)
class IdentityReport:
    anti_commutative: bool
    anti_associative: bool
    lie: bool
    associative: bool
    right_leibniz: bool
    left_leibniz: bool
    symmetric_leibniz: bool
    witnesses: dict  # flag name -> Witness for every false flag


def _lbl(A: Algebra, i: int) -> str:
    return A.labels[i - 1]


def is_anti_commutative(A: Algebra):
    """x*x = 0 for every x; checked as e_i^2 = 0 and e_i e_j + e_j e_i = 0."""
    F = A.field
    for i in range(1, A.dim + 1):
        d = A.table[i - 1][i - 1]
        if not A.is_zero_element(d):
            return False, Witness((i, i), d, f"{_lbl(A, i)}*{_lbl(A, i)}")
    for i in range(1, A.dim + 1):
        for j in range(i + 1, A.dim + 1):
            d = A.add(A.table[i - 1][j - 1], A.table[j - 1][i - 1])
            if not A.is_zero_element(d):
                expr = f"{_lbl(A, i)}*{_lbl(A, j)} + {_lbl(A, j)}*{_lbl(A, i)}"
                return False, Witness((i, j), d, expr)
    return True, None


def is_anti_associative(A: Algebra):
    """(xy)z = -x(yz); trilinear, so the basis check is exact pointwise."""
    for i in range(1, A.dim + 1):
        for j in range(1, A.dim + 1):
            eiej = A.table[i - 1][j - 1]
            for k in range(1, A.dim + 1):
                lhs = A.multiply(eiej, A.basis_element(k))
                rhs = A.multiply(A.basis_element(i), A.table[j - 1][k - 1])
                d = A.add(lhs, rhs)
                if not A.is_zero_element(d):
                    li, lj, lk = _lbl(A, i), _lbl(A, j), _lbl(A, k)
                    return False, Witness((i, j, k), d, f"({li}*{lj})*{lk} + {li}*({lj}*{lk})")
    return True, None


def is_lie(A: Algebra):
    """Anti-commutativity plus the Jacobi identity on i < j < k triples."""
    ok, w = is_anti_commutative(A)
    if not ok:
        return False, w
    for i in range(1, A.dim + 1):
        for j in range(i + 1, A.dim + 1):
            for k in range(j + 1, A.dim + 1):
                d = A.multiply(A.basis_element(i), A.table[j - 1][k - 1])
                d = A.add(d, A.multiply(A.basis_element(j), A.table[k - 1][i - 1]))
                d = A.add(d, A.multiply(A.basis_element(k), A.table[i - 1][j - 1]))
                if not A.is_zero_element(d):
                    li, lj, lk = _lbl(A, i), _lbl(A, j), _lbl(A, k)
                    expr = f"{li}*({lj}*{lk}) + {lj}*({lk}*{li}) + {lk}*({li}*{lj})"
                    return False, Witness((i, j, k), d, expr)
    return True, None


def is_associative(A: Algebra):
    for i in range(1, A.dim + 1):
        for j in range(1, A.dim + 1):
            eiej = A.table[i - 1][j - 1]
            for k in range(1, A.dim + 1):
                lhs = A.multiply(eiej, A.basis_element(k))
                rhs = A.multiply(A.basis_element(i), A.table[j - 1][k - 1])
                d = tuple(A.field.sub(a, b) for a, b in zip(lhs, rhs))
                if not A.is_zero_element(d):
                    li, lj, lk = _lbl(A, i), _lbl(A, j), _lbl(A, k)
                    return False, Witness((i, j, k), d, f"({li}*{lj})*{lk} - {li}*({lj}*{lk})")
    return True, None


def is_leibniz(A: Algebra, side: str = "right"):
    """Right: x(yz) = (xy)z - (xz)y.  Left: x(yz) = (xy)z + y(xz).

    Products are written multiplicatively; for bracket algebras read
    x*y as [x,y].  Trilinear, hence exact on basis triples.
    """
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    F = A.field
    for i in range(1, A.dim + 1):
        ei = A.basis_element(i)
        for j in range(1, A.dim + 1):
            for k in range(1, A.dim + 1):
                lhs = A.multiply(ei, A.table[j - 1][k - 1])
                t1 = A.multiply(A.table[i - 1][j - 1], A.basis_element(k))
                if side == "right":
                    t2 = A.multiply(A.table[i - 1][k - 1], A.basis_element(j))
                    rhs = tuple(F.sub(a, b) for a, b in zip(t1, t2))
                else:
                    t2 = A.multiply(A.basis_element(j), A.table[i - 1][k - 1])
                    rhs = tuple(F.add(a, b) for a, b in zip(t1, t2))
                d = tuple(F.sub(a, b) for a, b in zip(lhs, rhs))
                if not A.is_zero_element(d):
                    li, lj, lk = _lbl(A, i), _lbl(A, j), _lbl(A, k)
                    if side == "right":
                        expr = f"{li}*({lj}*{lk}) - ({li}*{lj})*{lk} + ({li}*{lk})*{lj}"
                    else:
                        expr = f"{li}*({lj}*{lk}) - ({li}*{lj})*{lk} - {lj}*({li}*{lk})"
                    return False, Witness((i, j, k), d, expr)
    return True, None


def _bracket_square(A: Algebra, i, j, k, l) -> tuple:
    """T(i,j,k,l) = (e_i e_j)(e_k e_l), 1-based."""
    return A.multiply(A.table[i - 1][j - 1], A.table[k - 1][l - 1])


def is_symmetric_leibniz(A: Algebra):
    """Right and left Leibniz plus coefficient vanishing of (xy)(xy) = 0.

    With T(i,j,k,l) = (e_i e_j)(e_k e_l) the coefficient families are
    T(i,j,i,j); T(i,j,i,l) + T(i,l,i,j) for j < l; T(i,j,k,j) +
    T(k,j,i,j) for i < k; and the four-term sum for i < k, j < l.
    """
    ok, w = is_leibniz(A, "right")
    if not ok:
        return False, w
    ok, w = is_leibniz(A, "left")
    if not ok:
        return False, w
    n = A.dim

    def fail(idx, d, expr):
        return False, Witness(idx, d, expr)

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = _bracket_square(A, i, j, i, j)
            if not A.is_zero_element(d):
                li, lj = _lbl(A, i), _lbl(A, j)
                return fail((i, j, i, j), d, f"({li}*{lj})*({li}*{lj})")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for l in range(j + 1, n + 1):
                d = A.add(_bracket_square(A, i, j, i, l), _bracket_square(A, i, l, i, j))
                if not A.is_zero_element(d):
                    return fail((i, j, i, l), d, "T(i,j,i,l) + T(i,l,i,j)")
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            for k in range(i + 1, n + 1):
                d = A.add(_bracket_square(A, i, j, k, j), _bracket_square(A, k, j, i, j))
                if not A.is_zero_element(d):
                    return fail((i, j, k, j), d, "T(i,j,k,j) + T(k,j,i,j)")
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            for j in range(1, n + 1):
                for l in range(j + 1, n + 1):
                    d = A.add(_bracket_square(A, i, j, k, l), _bracket_square(A, i, l, k, j))
                    d = A.add(d, _bracket_square(A, k, j, i, l))
                    d = A.add(d, _bracket_square(A, k, l, i, j))
                    if not A.is_zero_element(d):
                        return fail((i, j, k, l), d, "T(i,j,k,l)+T(i,l,k,j)+T(k,j,i,l)+T(k,l,i,j)")
    return True, None


def all_absolute_zero_divisors(A: Algebra):
    """(y*x)*x = 0 for all x, y, i.e. every right multiplication squares to zero.

    Squares are checked before cross terms so that a cross witness
    converts to a genuine bonding violation downstream.
    """
    for j in range(1, A.dim + 1):
        for i in range(1, A.dim + 1):
            d = A.multiply(A.table[j - 1][i - 1], A.basis_element(i))
            if not A.is_zero_element(d):
                li, lj = _lbl(A, i), _lbl(A, j)
                return False, Witness((j, i, i), d, f"({lj}*{li})*{li}")
    for j in range(1, A.dim + 1):
        for i in range(1, A.dim + 1):
            for k in range(i + 1, A.dim + 1):
                d = A.add(
                    A.multiply(A.table[j - 1][i - 1], A.basis_element(k)),
                    A.multiply(A.table[j - 1][k - 1], A.basis_element(i)),
                )
                if not A.is_zero_element(d):
                    li, lj, lk = _lbl(A, i), _lbl(A, j), _lbl(A, k)
                    return False, Witness((j, i, k), d, f"({lj}*{li})*{lk} + ({lj}*{lk})*{li}")
    return True, None


def identity_report(A: Algebra) -> IdentityReport:
    results = {
        "anti_commutative": is_anti_commutative(A),
        "anti_associative": is_anti_associative(A),
        "lie": is_lie(A),
        "associative": is_associative(A),
        "right_leibniz": is_leibniz(A, "right"),
        "left_leibniz": is_leibniz(A, "left"),
        "symmetric_leibniz": is_symmetric_leibniz(A),
    }
    witnesses = {name: w for name, (ok, w) in results.items() if not ok}
    return IdentityReport(
        anti_commutative=results["anti_commutative"][0],
        anti_associative=results["anti_associative"][0],
        lie=results["lie"][0],
        associative=results["associative"][0],
        right_leibniz=results["right_leibniz"][0],
        left_leibniz=results["left_leibniz"][0],
        symmetric_leibniz=results["symmetric_leibniz"][0],
        witnesses=witnesses,
    )


def symmetric_leibniz_pointwise(A: Algebra, cap: int = 100_000):
    """Enumerated check of (xy)(xy) = 0 over a finite field.

    Over F_2 the coefficient families can fail while every evaluation
    vanishes, so finite-field reports carry both answers.
    """
    if not isinstance(A.field, PrimeField):
        raise InfiniteField("pointwise check needs a finite field")
    total = A.field.p ** A.dim
    if total * total > cap * cap:
        raise CapExceeded(f"{total}^2 pairs exceed cap {cap}^2")
    vecs = list(enumerate_vectors(A.field, A.dim, cap))
    for x in vecs:
        for y in vecs:
            w = A.multiply(x, y)
            if A.is_zero_element(w):
                continue
            if not A.is_zero_element(A.multiply(w, w)):
                return False, (x, y)
    return True, None
