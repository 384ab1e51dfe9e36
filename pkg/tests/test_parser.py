from fractions import Fraction

import pytest
from hypothesis import given

from nhv.coeff_rings import QLambda
from nhv.ennilhecke import AnElement
from nhv.extpoly import ExtPolynomial, IndexOutOfRange
from nhv.parser import ContextError, ExprSyntaxError, parse_expr, parse_scalar, tokenize

from strategies import ext_polys

x = ExtPolynomial.x


def test_precedence():
    n = 2
    assert parse_expr("x1 + x2*x1^2", n) == x(1, n) + x(2, n) * x(1, n) ** 2
    assert parse_expr("(x1 + x2)^2", n) == (x(1, n) + x(2, n)) ** 2
    assert parse_expr("-x1 + 3", n) == x(1, n) * -1 + 3
    assert parse_expr("2*x1/4", n) == x(1, n) * ExtPolynomial.const(Fraction(1, 2), n)


def test_omega_order_sign():
    assert parse_expr("w2*w1", 2) == -parse_expr("w1*w2", 2)
    assert parse_expr("w1*w1", 2).is_zero()


@given(ext_polys(3, max_terms=5))
def test_print_parse_round_trip(f):
    assert parse_expr(f.to_text(), 3) == f


@given(ext_polys(2, max_terms=3), ext_polys(2, max_terms=3))
def test_algebra_round_trip(f, g):
    a = AnElement.from_poly(f) * AnElement.T(1, 2) + AnElement.from_poly(g)
    assert parse_expr(a.to_text(), 2, "algebra") == a


def test_mod_p():
    assert parse_expr("7*x1 + 2", 1, mod=7) == ExtPolynomial.const(2, 1, 7)


def test_k0_context():
    p = 5
    v = parse_scalar("l*q^-1", p)
    assert v == QLambda.monomial(p, 1, -1)
    assert parse_scalar("q^10", p) == QLambda.one(p)
    assert parse_scalar("1 + q^2 + q^4 + q^6 + q^8", p) == QLambda.zero(p)


@pytest.mark.parametrize("src,pos", [("x1 +", 4), ("x1 ** 2", 4), ("(x1", 3), ("x1 $ x2", 3), ("x1^", 3)])
def test_syntax_errors_report_position(src, pos):
    with pytest.raises(ExprSyntaxError) as ei:
        parse_expr(src, 2)
    assert ei.value.pos == pos
    assert ei.value.expected


def test_context_errors():
    with pytest.raises(ContextError):
        parse_expr("T1", 2, "ring")
    with pytest.raises(ContextError):
        parse_expr("x1", 2, "k0", p=3)
    with pytest.raises(ContextError):
        parse_expr("A1*A2", 0, "k0", p=3)
    with pytest.raises(ExprSyntaxError):
        parse_expr("x1^-1", 2)


def test_index_errors():
    with pytest.raises(IndexOutOfRange):
        parse_expr("x3", 2)
    with pytest.raises(IndexOutOfRange):
        parse_expr("T2", 2, "algebra")
    with pytest.raises(IndexOutOfRange):
        parse_expr("A3", 0, "k0", p=3)


def test_tokens():
    kinds = [t.kind for t in tokenize("x1*w2 + 3")]
    assert kinds == ["var", "op", "var", "op", "int", "end"]
