import random

import pytest

from conftest import heisenberg, l43
from cbalg.actions import (
    generate_group,
    is_automorphism,
    orbit,
    orbit_union,
    verify_cb_preservation,
)
from cbalg.algebra import Algebra
from cbalg.construct import random_anticommutative
from cbalg.errors import CapExceeded, InfiniteField, NotAutomorphism
from cbalg.fields import PrimeField, Rationals
from cbalg.identities import identity_report
from cbalg.linalg import Matrix
from cbalg.structure import cb_element_subalgebra, series

Q = Rationals()
F2 = PrimeField(2)
F3 = PrimeField(3)


def swap_negate(field):
    # e1 <-> e2, e3 -> -e3 on the Heisenberg algebra
    return Matrix.from_rows(field, [[0, 1, 0], [1, 0, 0], [0, 0, -1]])


def unipotent_l43(field):
    # e2 -> e2 + e4 fixes the two defining products
    return Matrix.from_rows(field, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]])


def test_identity_is_automorphism():
    A = l43(Q)
    assert is_automorphism(A, Matrix.identity(Q, 4))[0]


def test_swap_negate_is_automorphism():
    assert is_automorphism(heisenberg(Q), swap_negate(Q))[0]


def test_plain_swap_is_not():
    g = Matrix.from_rows(Q, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    ok, wit = is_automorphism(heisenberg(Q), g)
    assert not ok and wit == (1, 2)


def test_singular_matrix_rejected():
    g = Matrix.zeros(Q, 3, 3)
    assert not is_automorphism(heisenberg(Q), g)[0]


def test_generate_group_identity_only():
    action = generate_group(heisenberg(Q), [Matrix.identity(Q, 3)])
    assert action.order == 1


def test_generate_group_involution():
    action = generate_group(heisenberg(Q), [swap_negate(Q)])
    assert action.order == 2


def test_generate_group_diag_involution():
    g = Matrix.from_rows(Q, [[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    action = generate_group(heisenberg(Q), [g])
    assert action.order == 2


def test_generate_group_checks_generators():
    bad = Matrix.from_rows(Q, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    with pytest.raises(NotAutomorphism):
        generate_group(heisenberg(Q), [bad])


def test_generate_group_cap():
    with pytest.raises(CapExceeded):
        generate_group(heisenberg(Q), [swap_negate(Q)], cap=1)


def test_closure_contains_inverses():
    A = heisenberg(F3)
    g = Matrix.from_rows(F3, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])  # order 3
    action = generate_group(A, [g])
    assert action.order == 3
    elems = set(action.elements)
    for m in action.elements:
        assert m.inverse() in elems


def test_orbit_of_zero():
    action = generate_group(heisenberg(Q), [swap_negate(Q)])
    assert orbit(action, heisenberg(Q).zero_element()) == {heisenberg(Q).zero_element()}


def test_orbit_swap():
    A = heisenberg(Q)
    action = generate_group(A, [swap_negate(Q)])
    assert orbit(action, A.basis_element(1)) == {A.basis_element(1), A.basis_element(2)}


def test_orbit_fixed_point():
    A = heisenberg(Q)
    g = Matrix.from_rows(Q, [[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    action = generate_group(A, [g])
    assert orbit(action, A.basis_element(1)) == {A.basis_element(1)}


def test_orbits_partition_space():
    A = heisenberg(F3)
    action = generate_group(A, [swap_negate(F3)])
    from cbalg.fields import enumerate_vectors

    all_orbits = [orbit(action, x) for x in enumerate_vectors(F3, 3, 100)]
    covered = set().union(*all_orbits)
    assert len(covered) == 27
    for o1 in all_orbits:
        for o2 in all_orbits:
            assert o1 == o2 or not (o1 & o2)


def test_preservation_heisenberg_f3():
    A = heisenberg(F3)
    action = generate_group(A, [swap_negate(F3)])
    rep = verify_cb_preservation(action)
    assert rep.holds and rep.cb_count == 27 and rep.space_size == 27


def test_preservation_identity_action_l43():
    A = l43(F2)
    action = generate_group(A, [Matrix.identity(F2, 4)])
    rep = verify_cb_preservation(action)
    assert rep.holds and rep.cb_count == 4


def test_preservation_nontrivial_l43():
    A = l43(F2)
    g = unipotent_l43(F2)
    action = generate_group(A, [g])
    assert action.order == 2
    rep = verify_cb_preservation(action)
    assert rep.holds
    # K is mapped into K by every group element
    K = cb_element_subalgebra(A).K
    for row in K.basis:
        for m in action.elements:
            assert K.contains_vector(m.mat_vec(row))


def test_preservation_needs_finite_field():
    action = generate_group(heisenberg(Q), [swap_negate(Q)])
    with pytest.raises(InfiniteField):
        verify_cb_preservation(action)


def test_orbit_union_bonding_algebra_is_whole_space():
    A = heisenberg(F3)
    action = generate_group(A, [swap_negate(F3)])
    rep = orbit_union(action)
    assert rep.size == 27 and rep.span.dim == 3
    assert rep.is_subalgebra and rep.set_equals_span


def test_orbit_union_identity_action_equals_k():
    A = l43(F2)
    action = generate_group(A, [Matrix.identity(F2, 4)])
    rep = orbit_union(action)
    K = cb_element_subalgebra(A)
    assert rep.span == K.K
    assert rep.size == K.count and rep.set_equals_span


def test_orbit_union_contained_in_k():
    A = l43(F2)
    action = generate_group(A, [unipotent_l43(F2)])
    rep = orbit_union(action)
    K = cb_element_subalgebra(A).K
    assert K.contains(rep.span)
    for v in rep.b_set:
        assert K.contains_vector(v)
    assert rep.is_subalgebra


def test_basis_change_preserves_flags_and_series():
    # conjugating the table by any invertible matrix is an isomorphism
    rng = random.Random(44)
    for seed in range(12):
        A = random_anticommutative(seed, F3, 3, sparsity=0.5)
        g = _random_invertible(F3, 3, rng)
        ginv = g.inverse()
        table = [
            [
                ginv.mat_vec(
                    A.multiply(g.mat_vec(A.basis_element(i + 1)), g.mat_vec(A.basis_element(j + 1)))
                )
                for j in range(3)
            ]
            for i in range(3)
        ]
        B = Algebra.from_table(F3, table)
        ra, rb = identity_report(A), identity_report(B)
        for flag in ("anti_commutative", "anti_associative", "lie", "associative",
                     "right_leibniz", "left_leibniz", "symmetric_leibniz"):
            assert getattr(ra, flag) == getattr(rb, flag)
        assert series(A).dims == series(B).dims
        assert series(A, "derived").dims == series(B, "derived").dims


def _random_invertible(field, n, rng):
    while True:
        m = Matrix.from_rows(
            field, [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
        )
        if m.is_invertible():
            return m
