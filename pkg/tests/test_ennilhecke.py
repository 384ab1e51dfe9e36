import random

import pytest
from hypothesis import given, strategies as st

from nhv import ennilhecke as nh
from nhv.ennilhecke import AnElement, act
from nhv.extpoly import IndexOutOfRange, monomial_keys, tagged_batch
from nhv.parser import parse_expr

from strategies import ext_polys


def word_strategy(n, maxlen=4):
    letters = [("x", i) for i in range(1, n + 1)] + [("w", i) for i in range(1, n + 1)] + \
              [("T", i) for i in range(1, n)]
    return st.lists(st.sampled_from(letters), min_size=1, max_size=maxlen)


def test_basic_products():
    n = 2
    T1, x1, w1 = AnElement.T(1, n), AnElement.x(1, n), AnElement.w(1, n)
    assert (T1 * x1).to_text() == "1 + x2*T1"
    assert (T1 * w1).to_text() == "-w2 + (x1*w2 - x2*w2 + w1)*T1"
    assert (T1 * T1).terms == {}
    assert parse_expr("T1*x1 - x2*T1", 2, "algebra").to_text() == "1"


def test_braid_in_normal_form():
    T = [AnElement.T(i, 3) for i in (1, 2)]
    assert T[0] * T[1] * T[0] == T[1] * T[0] * T[1]
    assert nh.AnElement.T_word((1, 2, 1), 3) == T[0] * T[1] * T[0]


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_normal_form_agrees_with_operator_action(n, data):
    word = data.draw(word_strategy(n))
    batch = tagged_batch(monomial_keys(n, 6), n)
    assert act(nh.word_normal_form(word, n), batch) == nh.word_action(word, batch)


@given(data=st.data())
def test_associativity(data):
    n = 3
    a, b, c = (nh.word_normal_form(data.draw(word_strategy(n, 3)), n) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_defining_relations(n):
    rep = nh.verify_relations(n, 8)
    assert rep.passed, [c.name for c in rep.failures()]


def test_relations_mod_p():
    assert nh.verify_relations(2, 6, 5).passed


def test_faithfulness_detects_nonzero():
    assert nh.vanishes_on_basis(AnElement.zero(3))
    assert not nh.vanishes_on_basis(AnElement.T(1, 3) * AnElement.T(2, 3))


def test_epsilon_values():
    assert nh.epsilon(2).to_text() == "1 - x1*T1"
    e3 = nh.epsilon(3)
    assert e3 * e3 == e3
    for n in range(1, 4):
        assert nh.epsilon_check(n).passed


def test_d_a_on_T():
    assert nh.d_a_apply(1, AnElement.T(1, 2)).to_text() == "1 - 2*x1*T1"
    # d_a(T_i) = a - (a+1) x_i T_i + (a-1) x_{i+1} T_i
    for a in (-1, 0, 2):
        n = 3
        expected = AnElement.const(a, n) + AnElement.x(2, n) * AnElement.T(2, n) * -(a + 1) \
            + AnElement.x(3, n) * AnElement.T(2, n) * (a - 1)
        assert nh.d_a_apply(a, AnElement.T(2, n)) == expected


@pytest.mark.parametrize("a,n", [(-1, 2), (1, 2), (1, 3), (2, 3)])
def test_d_a_is_a_commutator(a, n):
    assert nh.d_a_commutator_check(a, n, 6, words=3).passed


@pytest.mark.parametrize("p,n", [(3, 2), (5, 3), (5, 4)])
def test_an_nilpotency(p, n):
    assert nh.an_nilpotency_check(p, n, 1, words=3).passed


def test_leibniz():
    for a in (-1, 1):
        assert nh.derivation_leibniz_check(nh.d_a_derivation(a, 3)).passed


def test_phi_inclusion():
    assert nh.phi_inclusion_check(2, avals=(1,), words=3).passed


@given(data=st.data())
def test_sigma_is_an_anti_involution(data):
    n = 3
    a = nh.word_normal_form(data.draw(word_strategy(n, 3)), n)
    b = nh.word_normal_form(data.draw(word_strategy(n, 3)), n)
    assert nh.sigma(a * b) == nh.sigma(b) * nh.sigma(a)
    assert nh.sigma(nh.sigma(a)) == a


def test_sigma_conjugates_d():
    rng = random.Random(4)
    for name, xi in nh.random_words(3, 5, 3, seed=rng.randint(0, 99)):
        assert nh.sigma(nh.d_a_apply(1, xi)) == nh.d_a_apply(-1, nh.sigma(xi)), name


def test_right_normal_form():
    n = 3
    xi = AnElement.T(1, n) * AnElement.x(1, n) ** 2
    right = nh.right_normal_form(xi)
    total = AnElement.zero(n)
    for v, h in right.items():
        total = total + AnElement.T_perm(v) * AnElement.from_poly(h)
    assert total == xi


def test_errors():
    with pytest.raises(IndexOutOfRange):
        AnElement.T(2, 2)


@given(ext_polys(2, max_terms=3))
def test_polynomial_subalgebra(f):
    assert AnElement.from_poly(f) * AnElement.from_poly(f) == AnElement.from_poly(f * f)
