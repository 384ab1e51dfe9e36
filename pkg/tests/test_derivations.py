import pytest
import sympy as sp
from hypothesis import given

from nhv import derivations as dv
from nhv.extpoly import ExtPolynomial, IndexOutOfRange, apply_transposition, is_invariant
from nhv.parser import parse_expr

import oracles
from strategies import even_polys, ext_polys

x = ExtPolynomial.x
w = ExtPolynomial.w


def test_alpha_degree_and_small_values():
    assert dv.alpha_poly(2, 3, 3).to_text() == "x3^2"
    assert dv.alpha_degree(2, 3, 3) == 4
    assert dv.alpha_poly(1, 2, 2) == x(2, 2) ** 2
    for n in range(2, 6):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                assert dv.alpha_poly(i, j, n).bidegree() == (2 * (j - i) + 2, 0)


def test_alpha_table_r5():
    rep = dv.alpha_table(5)
    assert rep.passed
    names = {c.name for c in rep.checks}
    assert {f"d_5(w{i})" for i in range(1, 6)} <= names
    assert len([nm for nm in names if nm.startswith("alpha_")]) == 10


def test_alpha_chain_agrees():
    for n in (3, 4):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                assert dv.alpha_chain(i, j, n) == dv.alpha_poly(i, j, n)


def test_dn_small_values():
    assert dv.dn_spec(2)(w(1, 2)).to_text() == "x2^2*w2"
    assert dv.dn_spec(3)(w(1, 3)).to_text() == "x2^2*w2 + x2*x3^2*w3 - x3^3*w3 + x3^2*w2"
    for n in range(1, 6):
        assert dv.dn_spec(n)(w(n, n)).is_zero()


@given(even_polys(3, max_exp=4))
def test_dn_on_polynomials_is_x2_d(f):
    X = oracles.xs(3)
    g = oracles.to_sympy(f)
    expected = sp.expand(sum(v ** 2 * sp.diff(g, v) for v in X))
    assert oracles.to_sympy(dv.dn_spec(3)(f)) == expected


@given(ext_polys(3), ext_polys(3))
def test_dn_leibniz(f, g):
    d = dv.dn_spec(3)
    assert d(f * g) == d(f) * g + f * d(g)


@given(ext_polys(3))
def test_dn_is_equivariant(f):
    d = dv.dn_spec(3)
    for j in (1, 2):
        assert d(apply_transposition(j, f)) == apply_transposition(j, d(f))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sweeps(n):
    assert dv.partials_check(n, 8).passed
    assert dv.dn_as_partials_check(n, 8).passed
    assert dv.dk_power_formula_check(n, 3).passed
    assert dv.witt_check(n, 8).passed
    assert dv.sl2_relations_check(n, 8).passed
    if n > 1:
        assert dv.dt_commutation_check(n, 8).passed
        assert dv.equivariance_check(n, 8).passed


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 3), (5, 4), (7, 6)])
def test_nilpotency(p, n):
    assert dv.nilpotency_check(p, n).passed


def test_not_nilpotent_in_char_zero():
    d = dv.dn_spec(1)
    f = x(1, 1)
    # d^k x = k! x^(k+1)
    assert d.power(f, 3) == x(1, 1) ** 4 * 6


def test_shift_coefficients_against_symbolic_expansion():
    X = sp.Symbol("x")
    g = sp.Function("g")(X)
    expr = g
    a = dv.shift_coeffs(4)
    for k in range(1, 5):
        expr = sp.expand(X ** 2 * sp.diff(expr, X))
        for j in range(1, k + 1):
            assert expr.coeff(sp.Derivative(g, (X, j))) == a[(j, k)] * X ** (k + j)
    assert a[(2, 3)] == 6
    assert dv.shift_coeffs_check(4).passed


def test_partials_on_omegas():
    n = 3
    d3 = dv.partial_spec(3, n)
    assert d3(w(1, n)) == w(2, n) + (x(2, n) - x(3, n)) * w(3, n)
    assert dv.partial_spec(1, n)(w(1, n)).is_zero()
    for r in range(1, n + 1):
        for i in range(1, n + 1):
            assert dv.partial_spec(r, n).power(w(i, n), 2).is_zero()


def test_get_spec_names():
    assert dv.get_spec("dn", 3).name == "d"
    assert dv.get_spec("partial:2", 3).name == "d/dx2"
    assert dv.get_spec("witt:1", 2).name == "l1"
    assert dv.get_spec("sln-e:1", 2)(x(2, 2)) == x(1, 2)
    with pytest.raises(ValueError):
        dv.get_spec("bogus", 3)
    with pytest.raises(IndexOutOfRange):
        dv.get_spec("partial:4", 3)


def test_sl2_values():
    assert dv.sl2_spec("e", 2)(parse_expr("x1*w2", 2)).to_text() == "x1^2*w2"
    assert dv.sl2_spec("f", 1)(x(1, 1) ** 3) == x(1, 1) ** 2 * -3
    assert dv.sl2_spec("h", 1)(x(1, 1) ** 3) == x(1, 1) ** 3 * 6


def test_phi_prime_and_omega():
    assert dv.phi_prime_check(3, 6).passed
    assert dv.omega_check(5).passed
    for n in range(1, 5):
        for i in range(1, n + 1):
            om = dv.omega_map(n, i)
            assert is_invariant(om)
            assert dv.dn_spec(n)(om).is_zero()


def test_symmetric_lemmas():
    assert dv.hs_lemma_check(4, 4).passed
    assert dv.hs1_lemma_check(4, 4).passed


def test_alpha_relations():
    for n in range(2, 5):
        assert dv.alpha_relations_check(n).passed


def test_twisted_dn():
    n = 3
    alphas = dv.twisted_weights_preset(n)
    assert alphas == [-2, -1, 0]
    one = ExtPolynomial.one(n)
    assert dv.apply_twisted(one, alphas, n) == x(1, n) * -2 - x(2, n)
