"""Centers, centralizers, series, and the CB/CL decision machinery.

Two independent routes decide the bonding property:

* theorem route - for algebras with x*x = 0, the verdict is exactly
  anti-associativity of the structure tensor, an O(n^3) exact check;
* brute-force route - over a prime field, enumerate every element and
  eliminate the remaining quantifiers by linearity (the partner runs
  over a kernel basis, the middle factor over the algebra basis).

The two must agree wherever both apply; `both` mode asserts it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .algebra import Algebra
from .errors import (
    CapExceeded,
    InfiniteField,
    NotASubspace,
    NotAntiCommutative,
    NotLie,
    VerdictMismatch,
)
from .fields import PrimeField
from .identities import (
    all_absolute_zero_divisors,
    is_anti_associative,
    is_anti_commutative,
    is_lie,
)
from .linalg import Matrix, Subspace, kernel

__all__ = [
    "DEFAULT_CAP",
    "center",
    "centralizer",
    "series",
    "SeriesReport",
    "is_filiform",
    "decide_cb_cl",
    "CBReport",
    "BondingWitness",
    "CentralizerIdealWitness",
    "cb_element_test",
    "CbElementResult",
    "cb_element_subalgebra",
    "KReport",
]

DEFAULT_CAP = 100_000


# ----------------------------------------------------------------------
# centralizers and series
# ----------------------------------------------------------------------
def center(A: Algebra) -> Subspace:
    """{x : x*y = y*x = 0 for all y}, via one stacked kernel."""
    rows = []
    for j in range(1, A.dim + 1):
        e = A.basis_element(j)
        rows.extend(A.mul_operator(e, "left").entries)   # x -> e_j * x
        rows.extend(A.mul_operator(e, "right").entries)  # x -> x * e_j
    if not rows:
        return Subspace.full(A.field, A.dim)
    return kernel(Matrix(A.field, tuple(rows), A.dim))


def centralizer(A: Algebra, x) -> Subspace:
    """Two-sided: ker of y -> y*x stacked with y -> x*y.

    For anticommutative algebras the two kernels coincide and this is
    the usual one-sided centralizer.
    """
    R = A.mul_operator(x, "right")
    L = A.mul_operator(x, "left")
    return kernel(Matrix(A.field, R.entries + L.entries, A.dim))


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "lower_central" | "derived"
    terms: tuple  # Subspaces, starting at the whole algebra
    dims: tuple
    nilpotency_class: Optional[int]
    solvable: bool
    metabelian: bool


def _lower_central_terms(A: Algebra):
    full = A.full_space()
    terms = [full]
    while True:
        nxt = A.subspace_product(terms[-1], full)
        if nxt == terms[-1]:
            break
        terms.append(nxt)
        if nxt.is_zero():
            break
    return terms


def _derived_terms(A: Algebra):
    terms = [A.full_space()]
    while True:
        nxt = A.subspace_product(terms[-1], terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
        if nxt.is_zero():
            break
    return terms


def series(A: Algebra, kind: str = "lower_central") -> SeriesReport:
    """Terms until zero or stabilization, plus the derived-series flags.

    Lower central: A^1 = A, A^k = A^(k-1) * A.  Derived: D^0 = A,
    D^k = D^(k-1) * D^(k-1).  Nilpotency class n means A^(n+1) = 0
    and A^n != 0; metabelian means D^2 = 0.
    """
    if kind not in ("lower_central", "derived"):
        raise ValueError("kind must be 'lower_central' or 'derived'")
    lower = _lower_central_terms(A)
    derived = _derived_terms(A)
    nilpotent = lower[-1].is_zero()
    if A.dim == 0:
        nil_class = 0
    elif nilpotent:
        nil_class = len(lower) - 1
    else:
        nil_class = None
    solvable = derived[-1].is_zero()
    # D^2 = 0 computed directly; the stabilized list may stop earlier
    d1 = A.subspace_product(A.full_space(), A.full_space())
    metabelian = A.subspace_product(d1, d1).is_zero()
    terms = lower if kind == "lower_central" else derived
    return SeriesReport(
        kind=kind,
        terms=tuple(terms),
        dims=tuple(t.dim for t in terms),
        nilpotency_class=nil_class,
        solvable=solvable,
        metabelian=metabelian,
    )


def is_filiform(A: Algebra) -> bool:
    """dim A^i = n - i for i = 2..n; requires a Lie algebra."""
    ok, _ = is_lie(A)
    if not ok:
        raise NotLie("filiform is defined for Lie algebras")
    n = A.dim
    terms = _lower_central_terms(A)

    def term_dim(i):  # A^i with A^1 the whole algebra
        if i - 1 < len(terms):
            return terms[i - 1].dim
        return terms[-1].dim

    return all(term_dim(i) == n - i for i in range(2, n + 1))


# ----------------------------------------------------------------------
# CB / CL decisions
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class BondingWitness:
    """x*y = 0 yet (x*z)*y != 0."""

    x: tuple
    y: tuple
    z: tuple
    defect: tuple


@dataclass(frozen=True)
class CentralizerIdealWitness:
    """member lies in C(x) but its product with factor does not."""

    x: tuple
    member: tuple
    factor: tuple
    side: str  # "right": member*factor, "left": factor*member
    product: tuple


@dataclass(frozen=True)
class CBReport:
    method: str  # "theorem" | "brute_force" | "both"
    is_cb: bool
    is_cl: bool
    cb_witness: Optional[BondingWitness]
    cl_witness: Optional[CentralizerIdealWitness]


def _theorem_verdict(A: Algebra):
    ok, _ = is_anti_commutative(A)
    if not ok:
        raise NotAntiCommutative("the structural criterion needs x*x = 0")
    aa_ok, _ = is_anti_associative(A)
    azd_ok, azd_w = all_absolute_zero_divisors(A)
    if aa_ok != azd_ok:
        raise VerdictMismatch(
            "anti-associativity and absolute-zero-divisor checks disagree"
        )
    if aa_ok:
        return True, None, None
    # convert the absolute-zero-divisor witness into a bonding violation;
    # squares were checked before cross terms, so the conversion is exact
    j = azd_w.indices[0]
    i = azd_w.indices[1]
    k = azd_w.indices[2]
    if i == k:
        x = A.basis_element(i)
    else:
        x = A.add(A.basis_element(i), A.basis_element(k))
    z = A.basis_element(j)
    defect = A.multiply(A.multiply(x, z), x)
    cb_w = BondingWitness(x=x, y=x, z=z, defect=defect)
    xz = A.multiply(x, z)
    cl_w = CentralizerIdealWitness(x=x, member=x, factor=z, side="right", product=xz)
    return False, cb_w, cl_w


def _brute_env(A: Algebra, cap: int):
    if not isinstance(A.field, PrimeField):
        raise InfiniteField("brute force needs a finite field")
    total = A.field.p ** A.dim
    if total > cap:
        raise CapExceeded(f"{A.field.p}^{A.dim} = {total} exceeds cap {cap}")
    c = kernels.mod_tensor(A)
    V = kernels.vectors_mod_p(A.field.p, A.dim)
    return c, V


def _element_from_row(A: Algebra, row) -> tuple:
    return tuple(A.field.canon(int(v)) for v in row)


def _brute_cb(A: Algebra, c, V):
    m, a, zb = kernels.cb_scan(c, A.field.p, V)
    if m < 0:
        return True, None
    x = _element_from_row(A, V[m])
    ker = kernel(A.mul_operator(x, "left"))
    y = ker.basis[a]
    z = A.basis_element(zb + 1)
    defect = A.multiply(A.multiply(x, z), y)
    return False, BondingWitness(x=x, y=y, z=z, defect=defect)


def _brute_cl(A: Algebra, c, V):
    m = kernels.cl_scan(c, A.field.p, V)
    if m < 0:
        return True, None
    x = _element_from_row(A, V[m])
    C = centralizer(A, x)
    for row in C.basis:
        for j in range(1, A.dim + 1):
            e = A.basis_element(j)
            prod = A.multiply(row, e)
            if not C.contains_vector(prod):
                return False, CentralizerIdealWitness(x, row, e, "right", prod)
            prod = A.multiply(e, row)
            if not C.contains_vector(prod):
                return False, CentralizerIdealWitness(x, row, e, "left", prod)
    raise VerdictMismatch("scan reported a centralizer violation that did not replay")


def decide_cb_cl(A: Algebra, mode: str = "theorem", cap: int = DEFAULT_CAP) -> CBReport:
    """Decide the bonding and centralizer-ideal properties.

    theorem: exact structural criterion, anticommutative algebras only.
    brute_force: full enumeration over a prime field within cap.
    both: run the two and require agreement.
    """
    if mode not in ("theorem", "brute_force", "both"):
        raise ValueError("mode must be 'theorem', 'brute_force' or 'both'")
    th = br = None
    if mode in ("theorem", "both"):
        th = _theorem_verdict(A)
    if mode in ("brute_force", "both"):
        c, V = _brute_env(A, cap)
        cb_ok, cb_w = _brute_cb(A, c, V)
        cl_ok, cl_w = _brute_cl(A, c, V)
        br = (cb_ok, cl_ok, cb_w, cl_w)
    if mode == "theorem":
        ok, cb_w, cl_w = th
        return CBReport("theorem", ok, ok, cb_w, cl_w)
    if mode == "brute_force":
        cb_ok, cl_ok, cb_w, cl_w = br
        return CBReport("brute_force", cb_ok, cl_ok, cb_w, cl_w)
    ok, _, _ = th
    cb_ok, cl_ok, cb_w, cl_w = br
    if ok != cb_ok or ok != cl_ok:
        raise VerdictMismatch(
            f"theorem verdict {ok} vs brute force cb={cb_ok} cl={cl_ok}"
        )
    return CBReport("both", cb_ok, cl_ok, cb_w, cl_w)


# ----------------------------------------------------------------------
# CB-elements
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class CbElementResult:
    verdict: str  # "yes" | "no" | "inconclusive"
    witness: Optional[tuple]  # (x, y) with y in C(x) and (x z) y != 0


def cb_element_test(A: Algebra, z, mode: str = "necessary", cap: int = DEFAULT_CAP) -> CbElementResult:
    """Is z a CB-element: (x z) y = 0 whenever y centralizes x?

    necessary mode checks the linearization of (x z) x = 0, which can
    only refute; a pass is `inconclusive` since `yes` needs the full
    enumeration of brute_force mode.  The zero element is certified
    directly.
    """
    if mode not in ("necessary", "brute_force"):
        raise ValueError("mode must be 'necessary' or 'brute_force'")
    z = A.element(z)
    if A.is_zero_element(z):
        return CbElementResult("yes", None)
    if mode == "necessary":
        ok, _ = is_anti_commutative(A)
        if not ok:
            raise NotAntiCommutative("the necessary condition needs x*x = 0")
        # squares first, cross terms second: a cross witness then
        # evaluates to a genuine violation at x = e_i + e_j
        for i in range(1, A.dim + 1):
            ei = A.basis_element(i)
            if not A.is_zero_element(A.multiply(A.multiply(ei, z), ei)):
                return CbElementResult("no", (ei, ei))
        for i in range(1, A.dim + 1):
            ei = A.basis_element(i)
            for j in range(i + 1, A.dim + 1):
                ej = A.basis_element(j)
                d = A.add(
                    A.multiply(A.multiply(ei, z), ej),
                    A.multiply(A.multiply(ej, z), ei),
                )
                if not A.is_zero_element(d):
                    x = A.add(ei, ej)
                    return CbElementResult("no", (x, x))
        return CbElementResult("inconclusive", None)
    c, V = _brute_env(A, cap)
    zv = np.array([A.field.canon(v) for v in z], dtype=np.int64)
    m, a = kernels.cb_element_check(c, A.field.p, V, zv)
    if m < 0:
        return CbElementResult("yes", None)
    x = _element_from_row(A, V[m])
    y = centralizer(A, x).basis[a]
    return CbElementResult("no", (x, y))


@dataclass(frozen=True)
class KReport:
    K: Subspace
    closed: bool
    count: int  # elements that passed the enumerated test


def cb_element_subalgebra(A: Algebra, cap: int = DEFAULT_CAP) -> KReport:
    """Enumerate all CB-elements and verify they form a subalgebra.

    The passing set is only *verified* to be a subspace (its size must
    be p^rank of its span); NotASubspace is raised otherwise.  `closed`
    records the product-closure check K*K <= K.
    """
    c, V = _brute_env(A, cap)
    mask = kernels.cb_element_mask(c, A.field.p, V)
    passing = [_element_from_row(A, V[i]) for i in range(V.shape[0]) if mask[i]]
    span = Subspace.span(A.field, A.dim, passing)
    if A.field.p ** span.dim != len(passing):
        raise NotASubspace(
            f"{len(passing)} CB-elements but their span has {A.field.p}^{span.dim} points"
        )
    closed = span.contains(A.subspace_product(span, span))
    return KReport(K=span, closed=closed, count=len(passing))
