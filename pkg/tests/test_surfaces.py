"""Hirzebruch section counts, the parity obstruction, and product-surface
numerology."""

import pytest

from bidisk.surfaces import (
    HirzebruchDivisor,
    NumericalProfile,
    ProductSurface,
    h0_lattice,
    h0_recursive,
    h0_reduction_steps,
    p2_parity_obstruction,
    product_invariants,
    product_special_tensor_dim,
    product_uniqueness_note,
    split_tangent_identities,
)


# ---------------------------------------------------------------------------
# section counts on F_n


def test_vanishing_divisor_all_n():
    for n in range(0, 21):
        d = HirzebruchDivisor(n, 2, -(n + 2))
        assert h0_recursive(d) == 0
        assert h0_lattice(d) == 0


def test_vanishing_chain_reproduced_stepwise():
    for n in range(0, 21):
        steps = h0_reduction_steps(HirzebruchDivisor(n, 2, -(n + 2)))
        visited = [d for d, _ in steps]
        assert [d.a for d in visited] == [2, 1, 0]
        assert all(d.b == -(n + 2) for d in visited)
        # every intermediate divisor in the chain has h^0 = 0
        for k in range(len(steps)):
            assert sum(c for _, c in steps[k:]) == 0
            assert h0_lattice(visited[k]) == 0


def test_trivial_divisor():
    assert h0_recursive(HirzebruchDivisor(3, 0, 0)) == 1
    assert h0_lattice(HirzebruchDivisor(3, 0, 0)) == 1


def test_positive_divisor_on_f1():
    d = HirzebruchDivisor(1, 2, 3)
    assert h0_lattice(d) == 9  # max(0,4) + max(0,3) + max(0,2)
    assert h0_recursive(d) == 9


def test_bidegree_count_on_quadric():
    for a in range(0, 6):
        for b in range(0, 6):
            assert h0_lattice(HirzebruchDivisor(0, a, b)) == (a + 1) * (b + 1)


def test_oracle_agreement_full_grid():
    for n in range(0, 6):
        for a in range(-10, 11):
            for b in range(-10, 11):
                d = HirzebruchDivisor(n, a, b)
                assert h0_recursive(d) == h0_lattice(d)


def test_negative_section_multiple():
    assert h0_recursive(HirzebruchDivisor(2, -1, 5)) == 0


def test_intersection_form():
    sigma = HirzebruchDivisor(3, 1, 0)
    fibre = HirzebruchDivisor(3, 0, 1)
    assert sigma.dot(sigma) == -3
    assert sigma.dot(fibre) == 1
    assert fibre.dot(fibre) == 0
    with pytest.raises(ValueError):
        sigma.dot(HirzebruchDivisor(2, 0, 1))
    with pytest.raises(ValueError):
        HirzebruchDivisor(-1, 0, 0)


# ---------------------------------------------------------------------------
# parity obstruction


def test_parity_obstruction():
    assert p2_parity_obstruction(-3) is True
    assert p2_parity_obstruction(-4) is False
    assert p2_parity_obstruction(0) is False


# ---------------------------------------------------------------------------
# products of curves


def test_product_invariants_fixed_cases():
    torus_like = product_invariants(ProductSurface(1, 1))
    assert (torus_like.chi, torus_like.K2, torus_like.q) == (0, 0, 2)
    quadric = product_invariants(ProductSurface(0, 0))
    assert (quadric.chi, quadric.K2, quadric.q, quadric.pg) == (1, 8, 0, 0)
    genus22 = product_invariants(ProductSurface(2, 2))
    assert (genus22.chi, genus22.K2, genus22.q, genus22.pg) == (1, 8, 4, 4)


def test_product_invariants_consistency_grid():
    for g1 in range(0, 7):
        for g2 in range(0, 7):
            prof = product_invariants(ProductSurface(g1, g2))
            assert prof.noether_consistent()
            assert prof.chi_consistent()
            assert split_tangent_identities(prof)


def test_product_special_tensor_dim():
    assert product_special_tensor_dim(ProductSurface(0, 0)) == 1
    assert product_special_tensor_dim(ProductSurface(1, 1)) == 3
    assert product_special_tensor_dim(ProductSurface(2, 3)) == 1
    assert product_special_tensor_dim(ProductSurface(1, 2)) == 3
    for g1 in range(2, 7):
        for g2 in range(2, 7):
            assert product_special_tensor_dim(ProductSurface(g1, g2)) == 1


def test_product_uniqueness_note_only_for_genus_one_two():
    assert product_uniqueness_note(ProductSurface(1, 2)) is not None
    assert product_uniqueness_note(ProductSurface(2, 1)) is not None
    assert "dimension 3" in product_uniqueness_note(ProductSurface(1, 2))
    assert product_uniqueness_note(ProductSurface(1, 1)) is None
    assert product_uniqueness_note(ProductSurface(2, 2)) is None
    assert product_uniqueness_note(ProductSurface(0, 0)) is None


def test_split_tangent_identities_fixed_cases():
    assert split_tangent_identities(NumericalProfile(K2=8, chi=1, c2=4, q=0, pg=0))
    assert not split_tangent_identities(NumericalProfile(K2=9, chi=1, c2=3, q=0, pg=0))
    assert split_tangent_identities(NumericalProfile(K2=0, chi=0, c2=0, q=2, pg=1))


def test_rejects_negative_genus():
    with pytest.raises(ValueError):
        ProductSurface(-1, 2)
