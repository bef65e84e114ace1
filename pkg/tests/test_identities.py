import random

import pytest

from conftest import heisenberg, l43, square_leibniz, two_dim_solvable
from cbalg.algebra import Algebra, direct_sum
from cbalg.construct import example_seven, random_anticommutative
from cbalg.fields import PrimeField, Rationals
from cbalg.identities import (
    all_absolute_zero_divisors,
    identity_report,
    is_anti_associative,
    is_anti_commutative,
    is_associative,
    is_leibniz,
    is_lie,
    is_symmetric_leibniz,
    symmetric_leibniz_pointwise,
)
from cbalg.structure import decide_cb_cl

Q = Rationals()
F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


# ----------------------------------------------------------------------
# anti-commutativity
# ----------------------------------------------------------------------
def test_anti_commutative_heisenberg():
    assert is_anti_commutative(heisenberg(Q)) == (True, None)


def test_anti_commutative_fails_on_idempotent():
    A = Algebra.from_products(Q, 1, {(1, 1): {1: 1}}, anticommutative=False)
    ok, w = is_anti_commutative(A)
    assert not ok and w.indices == (1, 1)


def test_anti_commutative_example_seven_f2():
    assert is_anti_commutative(example_seven(F2))[0]


# ----------------------------------------------------------------------
# anti-associativity
# ----------------------------------------------------------------------
def test_anti_associative_heisenberg():
    assert is_anti_associative(heisenberg(Q))[0]


def test_anti_associative_l43_witness():
    ok, w = is_anti_associative(l43(Q))
    assert not ok
    assert w.indices == (1, 1, 2)
    assert w.defect == l43(Q).basis_element(4)


def test_anti_associative_example_seven_rationals():
    assert is_anti_associative(example_seven(Q))[0]


# ----------------------------------------------------------------------
# Lie / associative
# ----------------------------------------------------------------------
def test_lie_example_seven_char3_only():
    assert is_lie(example_seven(F3))[0]
    ok, w = is_lie(example_seven(Q))
    assert not ok and w.indices == (1, 2, 3)
    A = example_seven(Q)
    assert w.defect == A.scale(Q.canon(3), A.basis_element(7))


def test_lie_abelian():
    assert is_lie(Algebra.abelian(Q, 4))[0]


def test_associative_example_seven_char2_only():
    assert is_associative(example_seven(F2))[0]
    assert not is_associative(example_seven(F5))[0]
    assert not is_associative(example_seven(Q))[0]
    assert is_associative(Algebra.abelian(Q, 3))[0]


# ----------------------------------------------------------------------
# Leibniz
# ----------------------------------------------------------------------
def test_catalog_lie_algebras_are_leibniz():
    from cbalg.catalog import entries, get_entry

    for entry in entries():
        eps = Q.canon(1) if entry.parametric else None
        A = get_entry(entry.name, Q, eps)
        assert is_leibniz(A, "right")[0]
        assert is_leibniz(A, "left")[0]


def test_square_leibniz_is_two_sided():
    L = square_leibniz(Q)
    assert is_leibniz(L, "right")[0]
    assert is_leibniz(L, "left")[0]
    assert not is_lie(L)[0]


def test_idempotent_breaks_right_leibniz():
    A = Algebra.from_products(Q, 1, {(1, 1): {1: 1}}, anticommutative=False)
    ok, w = is_leibniz(A, "right")
    assert not ok and w.indices == (1, 1, 1)


def test_symmetric_leibniz():
    assert is_symmetric_leibniz(square_leibniz(Q))[0]
    assert is_symmetric_leibniz(heisenberg(Q))[0]
    assert is_symmetric_leibniz(l43(F5))[0]


def test_symmetric_leibniz_pointwise_agrees_away_from_f2():
    for A in (square_leibniz(F3), l43(F3), heisenberg(F5)):
        coeff = is_symmetric_leibniz(A)[0]
        point = symmetric_leibniz_pointwise(A)[0]
        assert coeff == point


def test_pointwise_agrees_with_coefficients_over_f2():
    # every 0/1 assignment isolates one polarization family in turn, so
    # the two checks coincide even over F_2; fuzz for separations anyway
    from cbalg.construct import random_general

    for seed in range(300):
        A = random_general(seed, F2, 3, sparsity=0.3)
        assert is_symmetric_leibniz(A)[0] == (
            is_leibniz(A, "right")[0]
            and is_leibniz(A, "left")[0]
            and symmetric_leibniz_pointwise(A)[0]
        )


def test_quad_family_fails_in_char_two():
    # two-sided Leibniz yet (e1 e3)(e1 e3) = [e3,e3] = e2 != 0: the
    # quadratic axiom is genuinely extra in characteristic two
    A = Algebra.from_products(
        F2, 3, {(1, 3): {3: 1}, (3, 1): {3: 1}, (3, 3): {2: 1}}, anticommutative=False
    )
    assert is_leibniz(A, "right")[0] and is_leibniz(A, "left")[0]
    ok, w = is_symmetric_leibniz(A)
    assert not ok and w.indices == (1, 3, 1, 3)
    assert w.defect == A.basis_element(2)
    assert not symmetric_leibniz_pointwise(A)[0]


# ----------------------------------------------------------------------
# absolute zero divisors
# ----------------------------------------------------------------------
def test_azd_heisenberg():
    assert all_absolute_zero_divisors(heisenberg(Q))[0]


def test_azd_two_dim_solvable_witness():
    ok, w = all_absolute_zero_divisors(two_dim_solvable(Q))
    assert not ok
    assert w.indices == (2, 1, 1)  # (e2 e1) e1 = e2
    assert w.defect == two_dim_solvable(Q).basis_element(2)


def test_azd_l58():
    from cbalg.catalog import get_entry

    assert all_absolute_zero_divisors(get_entry("L5,8", Q))[0]


# ----------------------------------------------------------------------
# witnesses re-evaluate to their defects
# ----------------------------------------------------------------------
def _replay(A, flag, w):
    e = A.basis_element
    mul = A.multiply
    if flag == "anti_commutative" or len(w.indices) == 2:
        # lie reuses the anti-commutativity witness when x*x = 0 fails
        if w.indices[0] == w.indices[1]:
            return mul(e(w.indices[0]), e(w.indices[0]))
        i, j = w.indices
        return A.add(mul(e(i), e(j)), mul(e(j), e(i)))
    if flag == "symmetric_leibniz":
        # a three-index witness came from one of the Leibniz passes
        for side in ("right_leibniz", "left_leibniz"):
            try:
                if _replay(A, side, w) == w.defect:
                    return w.defect
            except AssertionError:
                pass
        raise AssertionError("symmetric witness replays as neither Leibniz side")
    i, j, k = w.indices[:3]
    if flag == "anti_associative":
        return A.add(mul(mul(e(i), e(j)), e(k)), mul(e(i), mul(e(j), e(k))))
    if flag == "lie":
        return A.add(
            A.add(mul(e(i), mul(e(j), e(k))), mul(e(j), mul(e(k), e(i)))),
            mul(e(k), mul(e(i), e(j))),
        )
    if flag == "associative":
        lhs = mul(mul(e(i), e(j)), e(k))
        rhs = mul(e(i), mul(e(j), e(k)))
        return tuple(A.field.sub(a, b) for a, b in zip(lhs, rhs))
    if flag == "right_leibniz":
        lhs = mul(e(i), mul(e(j), e(k)))
        rhs = tuple(
            A.field.sub(a, b)
            for a, b in zip(mul(mul(e(i), e(j)), e(k)), mul(mul(e(i), e(k)), e(j)))
        )
        return tuple(A.field.sub(a, b) for a, b in zip(lhs, rhs))
    if flag == "left_leibniz":
        lhs = mul(e(i), mul(e(j), e(k)))
        rhs = tuple(
            A.field.add(a, b)
            for a, b in zip(mul(mul(e(i), e(j)), e(k)), mul(e(j), mul(e(i), e(k))))
        )
        return tuple(A.field.sub(a, b) for a, b in zip(lhs, rhs))
    raise AssertionError(flag)


def test_witnesses_reproduce_defects():
    from cbalg.construct import random_general

    rng = random.Random(101)
    checked = 0
    for seed in range(120):
        field = (Q, F2, F3, F5)[seed % 4]
        A = random_general(seed, field, rng.randint(1, 4), sparsity=0.3)
        rep = identity_report(A)
        for flag, w in rep.witnesses.items():
            assert not A.is_zero_element(w.defect)
            if flag == "symmetric_leibniz" and len(w.indices) == 4:
                continue  # quad families replayed in their own test
            assert _replay(A, flag, w) == w.defect
            checked += 1
    assert checked > 50


def test_quad_witness_replays():
    # the quadratic-family witness carries indices (i, j, k, l); the
    # family is recoverable from the equality pattern
    def T(A, i, j, k, l):
        return A.multiply(A.table[i - 1][j - 1], A.table[k - 1][l - 1])

    cases = [
        Algebra.from_products(
            F2, 3, {(1, 3): {3: 1}, (3, 1): {3: 1}, (3, 3): {2: 1}}, anticommutative=False
        ),
        Algebra.from_products(
            F2, 3, {(1, 1): {2: 1}, (1, 3): {1: 1}, (3, 1): {1: 1}}, anticommutative=False
        ),
    ]
    for A in cases:
        ok, w = is_symmetric_leibniz(A)
        assert not ok and len(w.indices) == 4
        i, j, k, l = w.indices
        if i == k and j == l:
            d = T(A, i, j, i, j)
        elif i == k:
            d = A.add(T(A, i, j, i, l), T(A, i, l, i, j))
        elif j == l:
            d = A.add(T(A, i, j, k, j), T(A, k, j, i, j))
        else:
            d = A.add(A.add(T(A, i, j, k, l), T(A, i, l, k, j)),
                      A.add(T(A, k, j, i, l), T(A, k, l, i, j)))
        assert d == w.defect and not A.is_zero_element(d)


# ----------------------------------------------------------------------
# the equivalence triangle and closure properties
# ----------------------------------------------------------------------
@pytest.mark.parametrize("field", [Q, F2, F3, F5])
def test_azd_equals_anti_associative_on_anticommutative(field):
    rng = random.Random(7)
    for seed in range(80):
        A = random_anticommutative(seed, field, rng.randint(1, 5), sparsity=0.35)
        assert all_absolute_zero_divisors(A)[0] == is_anti_associative(A)[0]


@pytest.mark.parametrize("field,dim", [(F2, 4), (F3, 3)])
def test_triangle_matches_brute_force(field, dim):
    for seed in range(60):
        A = random_anticommutative(seed, field, 1 + seed % dim, sparsity=0.4)
        structural = is_anti_associative(A)[0]
        rep = decide_cb_cl(A, "brute_force")
        assert rep.is_cb == structural
        assert all_absolute_zero_divisors(A)[0] == structural


def test_lie_implies_leibniz_on_catalog():
    from cbalg.catalog import entries, get_entry

    for entry in entries():
        eps = Q.canon(2) if entry.parametric else None
        A = get_entry(entry.name, Q, eps)
        assert is_lie(A)[0]
        assert is_leibniz(A, "right")[0] and is_leibniz(A, "left")[0]


def test_anti_associative_closure_under_constructions():
    rng = random.Random(13)
    kept = 0
    for seed in range(150):
        A = random_anticommutative(seed, F3, rng.randint(2, 4), sparsity=0.3)
        if not is_anti_associative(A)[0]:
            continue
        kept += 1
        B = random_anticommutative(seed + 999, F3, 2, sparsity=0.3)
        if is_anti_associative(B)[0]:
            assert is_anti_associative(direct_sum(A, B))[0]
        # quotient by any ideal closure stays anti-associative
        x = A.element([rng.randrange(3) for _ in range(A.dim)])
        I = A.ideal_closure(A.subspace_product(A.full_space(), A.full_space()))
        assert is_anti_associative(A.quotient(I).algebra)[0]
        # induced subalgebra on the derived subspace stays anti-associative
        sq = A.subspace_product(A.full_space(), A.full_space())
        assert is_anti_associative(A.induced_subalgebra(sq).algebra)[0]
        _ = x
    assert kept > 10
