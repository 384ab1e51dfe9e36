import itertools

import pytest
from hypothesis import given

from nhv.extpoly import (
    ExtPolynomial, IndexOutOfRange, Permutation, RankMismatch, all_perms, apply_permutation,
    apply_transposition, complete_h, decompose_over_invariants, demazure, demazure_by_division,
    demazure_word, elementary_e, is_invariant, labeled_omega, longest_perm, monomial_keys,
    perm_from_word, perm_length, reconstruct, reduced_word, staircase,
)

import oracles
from strategies import even_polys, ext_polys

x = ExtPolynomial.x
w = ExtPolynomial.w


def test_exterior_signs():
    n = 3
    assert w(1, n) * w(1, n) == ExtPolynomial.zero(n)
    assert w(2, n) * w(1, n) == -(w(1, n) * w(2, n))
    assert w(3, n) * w(1, n) * w(2, n) == w(1, n) * w(2, n) * w(3, n)


def test_monomial_constructor_sorts_with_sign():
    for idx in itertools.permutations([1, 2, 3]):
        m = ExtPolynomial.monomial((0, 0, 0), idx)
        assert m.coefficient((0, 0, 0), (1, 2, 3)) == oracles.sort_sign(idx)


@given(ext_polys(3), ext_polys(3), ext_polys(3))
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(ext_polys(3, max_terms=3), ext_polys(3, max_terms=3))
def test_graded_commutative(a, b):
    # homogeneous in parity: f g = (-1)^{|f||g|} g f
    for fa in a.homogeneous_parts().values():
        for gb in b.homogeneous_parts().values():
            sign = -1 if fa.parity() and gb.parity() else 1
            assert fa * gb == (gb * fa) * sign


def test_bidegree_and_text():
    f = x(1, 3) ** 2 * w(2, 3)
    assert f.bidegree() == (0, 2)
    assert f.to_text() == "x1^2*w2"
    assert ExtPolynomial.zero(3).to_text() == "0"


def test_rank_and_index_errors():
    with pytest.raises(IndexOutOfRange):
        x(4, 3)
    with pytest.raises(RankMismatch):
        x(1, 2) + x(1, 3)
    with pytest.raises(IndexOutOfRange):
        demazure(3, x(1, 3))


def test_reduce_mod():
    f = ExtPolynomial(2, {((1, 0), 0): 7, ((0, 1), 1): 3})
    assert f.reduce_mod(7) == ExtPolynomial(2, {((0, 1), 1): 3}, 7)


# -- Weyl group ------------------------------------------------------------


def test_permutations():
    assert len(all_perms(4)) == 24
    assert perm_length(longest_perm(4)) == 6
    for p in all_perms(4):
        assert perm_from_word(reduced_word(p), 4) == p
        assert len(reduced_word(p)) == perm_length(p)
    s1 = Permutation.simple(1, 3)
    assert s1 * s1 == Permutation.identity(3)
    assert Permutation.longest(3).reduced_word() == (1, 2, 1)


@given(ext_polys(3))
def test_transposition_is_involutive_ring_map(f):
    for j in (1, 2):
        assert apply_transposition(j, apply_transposition(j, f)) == f


def test_transposition_on_omegas():
    n = 3
    assert apply_transposition(1, w(1, n)) == w(1, n) + (x(1, n) - x(2, n)) * w(2, n)
    assert apply_transposition(1, w(2, n)) == w(2, n)
    assert apply_transposition(2, w(3, n)) == w(3, n)


@given(ext_polys(3), ext_polys(3))
def test_transposition_multiplicative(f, g):
    assert apply_transposition(1, f * g) == apply_transposition(1, f) * apply_transposition(1, g)


def test_braid_action():
    f = x(1, 3) ** 3 * w(1, 3) + x(2, 3) * w(2, 3)
    assert apply_permutation((1, 0, 2), apply_permutation((0, 2, 1), f)) == \
        apply_transposition(1, apply_transposition(2, f))


# -- Demazure operators ----------------------------------------------------


@given(even_polys(3, max_exp=4))
def test_demazure_matches_sympy_division(f):
    for j in (1, 2):
        assert oracles.to_sympy(demazure(j, f)) == oracles.demazure(oracles.to_sympy(f), j, 3)


@given(ext_polys(3))
def test_demazure_matches_long_division(f):
    for j in (1, 2):
        assert demazure(j, f) == demazure_by_division(j, f)


@given(ext_polys(3), ext_polys(3))
def test_twisted_leibniz(f, g):
    for j in (1, 2):
        assert demazure(j, f * g) == demazure(j, f) * g + apply_transposition(j, f) * demazure(j, g)


@given(ext_polys(4, max_terms=3))
def test_nilhecke_relations(f):
    assert demazure(1, demazure(1, f)).is_zero()
    assert demazure_word((1, 2, 1), f) == demazure_word((2, 1, 2), f)
    assert demazure_word((1, 3), f) == demazure_word((3, 1), f)


def test_demazure_values():
    n = 2
    assert demazure(1, x(1, n)) == ExtPolynomial.one(n)
    assert demazure(1, w(1, n)) == -w(2, n)
    assert demazure(1, w(2, n)).is_zero()


# -- symmetric functions and invariants ------------------------------------


def test_complete_and_elementary():
    assert complete_h(2, 1, 3, 3).to_text() == "x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2"
    assert complete_h(0, 2, 1, 3) == ExtPolynomial.one(3)
    assert complete_h(-1, 1, 3, 3).is_zero()
    assert elementary_e(2, 1, 3, 3).to_text() == "x1*x2 + x1*x3 + x2*x3"
    assert elementary_e(4, 1, 3, 3).is_zero()


def test_labeled_omega_values():
    assert labeled_omega(2, 1, 3).to_text() == "-x2*w2 + w1"
    assert labeled_omega(1, 0, 3) == w(1, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_top_labeled_omegas_invariant(n):
    for a in range(n):
        assert is_invariant(labeled_omega(n, a, n))


def test_staircase_and_decomposition():
    assert len(staircase(3)) == 6
    f = x(1, 3) ** 3 * x(2, 3) + w(1, 3) * x(3, 3)
    parts = decompose_over_invariants(f)
    assert set(parts) <= set(staircase(3))
    assert all(is_invariant(c) for c in parts.values())
    assert reconstruct(parts, 3) == f


def test_monomial_keys_counts():
    # q-degree 4 in R_1: x^0..x^2 with no omega, x^0..x^3 times w1
    assert len(monomial_keys(1, 4)) == 3 + 4
    assert len(monomial_keys(2, 2, exact=True)) == 14
