import random

import pytest

from conftest import heisenberg, l43, square_leibniz, two_dim_solvable
from cbalg.algebra import Algebra, direct_sum
from cbalg.construct import example_seven, random_anticommutative
from cbalg.errors import FieldMismatch, NotAnIdeal, NotClosed
from cbalg.fields import PrimeField, Rationals
from cbalg.identities import identity_report
from cbalg.linalg import Subspace

Q = Rationals()
F3 = PrimeField(3)


def test_multiply_heisenberg():
    A = heisenberg(Q)
    assert A.multiply(A.basis_element(1), A.basis_element(2)) == A.basis_element(3)


def test_multiply_zero_absorbs():
    A = heisenberg(Q)
    y = A.element((3, -2, 5))
    assert A.multiply(A.zero_element(), y) == A.zero_element()


def test_multiply_example_seven_table():
    A = example_seven(Q)
    assert A.multiply(A.basis_element(3), A.basis_element(4)) == A.basis_element(7)
    assert A.multiply(A.basis_element(2), A.basis_element(5)) == A.scale(Q.canon(-1), A.basis_element(7))


def _random_element(A, rng):
    if A.field.characteristic():
        return A.element([rng.randrange(A.field.characteristic()) for _ in range(A.dim)])
    return A.element([rng.randint(-3, 3) for _ in range(A.dim)])


@pytest.mark.parametrize("field", [Q, F3])
def test_multiply_bilinear(field):
    rng = random.Random(3)
    for seed in range(20):
        A = random_anticommutative(seed, field, rng.randint(1, 4))
        x, xp, y = (_random_element(A, rng) for _ in range(3))
        a = field.canon(2)
        b = field.canon(-1)
        lhs = A.multiply(A.add(A.scale(a, x), A.scale(b, xp)), y)
        rhs = A.add(
            A.scale(a, A.multiply(x, y)),
            A.scale(b, A.multiply(xp, y)),
        )
        assert lhs == rhs


def test_mul_operator_heisenberg_right():
    A = heisenberg(Q)
    R = A.mul_operator(A.basis_element(1), "right")
    # e2 -> e2*e1 = -e3; e1, e3 -> 0
    assert R.column(0) == A.zero_element()
    assert R.column(1) == A.scale(Q.canon(-1), A.basis_element(3))
    assert R.column(2) == A.zero_element()


def test_mul_operator_zero_element():
    A = l43(Q)
    assert A.mul_operator(A.zero_element(), "right").is_zero()
    assert A.mul_operator(A.zero_element(), "left").is_zero()


def test_mul_operator_two_dim_solvable():
    A = two_dim_solvable(Q)
    R = A.mul_operator(A.basis_element(1), "right")
    assert R.column(1) == A.scale(Q.canon(-1), A.basis_element(2))


@pytest.mark.parametrize("field", [Q, F3])
def test_mul_operator_consistency(field):
    rng = random.Random(17)
    for seed in range(20):
        A = random_anticommutative(seed + 100, field, rng.randint(1, 4))
        x = _random_element(A, rng)
        y = _random_element(A, rng)
        assert A.mul_operator(x, "right").mat_vec(y) == A.multiply(y, x)
        assert A.mul_operator(x, "left").mat_vec(y) == A.multiply(x, y)


def test_subspace_product_heisenberg():
    A = heisenberg(Q)
    full = A.full_space()
    assert A.subspace_product(full, full) == Subspace.span(Q, 3, [A.basis_element(3)])


def test_subspace_product_with_zero():
    A = l43(Q)
    assert A.subspace_product(A.full_space(), A.zero_subspace()).is_zero()


def test_subspace_product_example_seven_derived():
    A = example_seven(Q)
    sq = A.subspace_product(A.full_space(), A.full_space())
    assert A.subspace_product(sq, sq).is_zero()


def test_is_ideal():
    A = heisenberg(Q)
    assert A.is_ideal(Subspace.span(Q, 3, [A.basis_element(3)]))
    assert A.is_ideal(A.full_space())
    B = two_dim_solvable(Q)
    assert not B.is_ideal(Subspace.span(Q, 2, [B.basis_element(1)]))


def test_quotient_heisenberg_by_center():
    A = heisenberg(Q)
    res = A.quotient(Subspace.span(Q, 3, [A.basis_element(3)]))
    assert res.algebra.dim == 2
    assert all(v == res.algebra.zero_element() for row in res.algebra.table for v in row)


def test_quotient_by_zero_is_identity():
    A = l43(Q)
    res = A.quotient(A.zero_subspace())
    assert res.algebra.table == A.table


def test_quotient_leibniz_square():
    L = square_leibniz(Q)
    res = L.quotient(Subspace.span(Q, 2, [L.basis_element(2)]))
    assert res.algebra.dim == 1
    assert res.algebra.table[0][0] == res.algebra.zero_element()


def test_quotient_requires_ideal():
    B = two_dim_solvable(Q)
    with pytest.raises(NotAnIdeal):
        B.quotient(Subspace.span(Q, 2, [B.basis_element(1)]))


@pytest.mark.parametrize("field", [Q, F3])
def test_quotient_projection_is_homomorphism(field):
    rng = random.Random(29)
    for seed in range(15):
        A = random_anticommutative(seed + 50, field, 4)
        full = A.full_space()
        I = A.ideal_closure(Subspace.span(field, 4, [_random_element(A, rng)]))
        if I == full:
            continue
        res = A.quotient(I)
        for _ in range(5):
            x = _random_element(A, rng)
            y = _random_element(A, rng)
            lhs = res.projection.mat_vec(A.multiply(x, y))
            rhs = res.algebra.multiply(res.projection.mat_vec(x), res.projection.mat_vec(y))
            assert lhs == rhs


def test_induced_subalgebra_heisenberg():
    A = heisenberg(Q)
    S = Subspace.span(Q, 3, [A.basis_element(1), A.basis_element(3)])
    res = A.induced_subalgebra(S)
    assert res.algebra.dim == 2
    assert all(v == res.algebra.zero_element() for row in res.algebra.table for v in row)


def test_induced_subalgebra_zero():
    A = heisenberg(Q)
    res = A.induced_subalgebra(A.zero_subspace())
    assert res.algebra.dim == 0


def test_induced_subalgebra_l43_abelian_part():
    A = l43(Q)
    S = Subspace.span(Q, 4, [A.basis_element(i) for i in (2, 3, 4)])
    res = A.induced_subalgebra(S)
    assert res.algebra.dim == 3
    assert all(v == res.algebra.zero_element() for row in res.algebra.table for v in row)


def test_induced_subalgebra_rejects_open_subspace():
    A = l43(Q)
    S = Subspace.span(Q, 4, [A.basis_element(1), A.basis_element(2)])
    with pytest.raises(NotClosed):
        A.induced_subalgebra(S)


def test_direct_sum_builds_catalog_extension():
    from cbalg.catalog import get_entry

    lhs = direct_sum(heisenberg(Q), Algebra.abelian(Q, 1))
    assert lhs.table == get_entry("L4,2", Q).table


def test_direct_sum_with_zero_dim():
    A = l43(Q)
    assert direct_sum(A, Algebra.abelian(Q, 0)).table == A.table


def test_direct_sum_abelian():
    S = direct_sum(Algebra.abelian(Q, 2), Algebra.abelian(Q, 3))
    assert S.dim == 5
    assert all(v == S.zero_element() for row in S.table for v in row)


def test_direct_sum_field_mismatch():
    with pytest.raises(FieldMismatch):
        direct_sum(heisenberg(Q), heisenberg(F3))


def test_direct_sum_preserves_identity_flags():
    from cbalg.construct import random_general

    rng = random.Random(31)
    flags = (
        "anti_commutative",
        "anti_associative",
        "lie",
        "associative",
        "right_leibniz",
        "left_leibniz",
        "symmetric_leibniz",
    )
    for seed in range(25):
        if seed % 2:
            A1 = random_anticommutative(seed, F3, rng.randint(1, 3))
            A2 = random_anticommutative(seed + 1000, F3, rng.randint(1, 3))
        else:
            A1 = random_general(seed, Q, rng.randint(1, 3))
            A2 = random_general(seed + 1000, Q, rng.randint(1, 3))
        r1, r2 = identity_report(A1), identity_report(A2)
        rs = identity_report(direct_sum(A1, A2))
        for f in flags:
            if getattr(r1, f) and getattr(r2, f):
                assert getattr(rs, f), f


def test_zero_dim_algebra_everywhere():
    A = Algebra.abelian(Q, 0)
    assert A.multiply((), ()) == ()
    assert A.full_space().is_zero()
    from cbalg.structure import series

    rep = series(A)
    assert rep.dims == (0,)
    assert rep.solvable and rep.metabelian
