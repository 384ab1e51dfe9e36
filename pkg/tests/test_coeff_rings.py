from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nhv.coeff_rings import (
    CycloElement, NotInvertible, PrimeField, PrimeMismatch, QLambda, cyclo_invert, cyclo_reduce,
    is_prime, q_minus_qinv_inverse, quantum_int,
)

import oracles

PRIMES = [3, 5, 7]


def laurent(p):
    return st.dictionaries(st.integers(-3 * p, 3 * p), st.integers(-4, 4), max_size=5)


def test_prime_field_basics():
    a = PrimeField(3, 7)
    assert a * a.inverse() == PrimeField(1, 7)
    assert a ** 6 == 1
    assert (a - 5) == PrimeField(5, 7)
    with pytest.raises(ZeroDivisionError):
        PrimeField(0, 7).inverse()


def test_prime_check():
    assert [k for k in range(20) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        CycloElement(9)
    with pytest.raises(ValueError):
        CycloElement(2)


@pytest.mark.parametrize("p", PRIMES)
def test_q_has_order_2p(p):
    q = CycloElement.q_power(p, 1)
    assert q ** (2 * p) == CycloElement.one(p)
    assert all(q ** k != CycloElement.one(p) for k in range(1, 2 * p))


@pytest.mark.parametrize("p", PRIMES)
@given(data=st.data())
def test_reduction_matches_sympy_remainder(p, data):
    c = data.draw(laurent(p))
    ours = CycloElement(p, c)
    ref = oracles.cyclo_reduce(c, p)
    expected = [Fraction(0)] * (2 * p - 2)
    for (k,), v in ref.items():
        expected[k] = Fraction(int(v))
    assert list(ours.coeffs) == expected


@pytest.mark.parametrize("p", PRIMES)
@given(data=st.data())
def test_ring_axioms(p, data):
    a, b, c = (CycloElement(p, data.draw(laurent(p))) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == CycloElement.zero(p)


@pytest.mark.parametrize("p", PRIMES)
def test_quantum_integers(p):
    # [p] = 0 and [k] != 0 for 0 < k < p
    assert quantum_int(p, p).is_zero()
    for k in range(1, p):
        assert not quantum_int(k, p).is_zero()
        assert quantum_int(k, p) * cyclo_invert(quantum_int(k, p)) == CycloElement.one(p)


def test_quantum_int_values():
    # [3] at p = 5: q^2 + 1 + q^-2 reduces to -q^4 - q^6
    assert quantum_int(3, 5).to_text() == "-q^6 - q^4"
    assert cyclo_invert(quantum_int(2, 5)).to_text() == "-q^7 - q^3"


@pytest.mark.parametrize("p", PRIMES)
def test_q_minus_qinv_inverse(p):
    q = CycloElement.q_power(p, 1)
    assert (q - q ** -1) * q_minus_qinv_inverse(p) == CycloElement.one(p)


def test_non_invertible():
    with pytest.raises((NotInvertible, ZeroDivisionError)):
        cyclo_invert(CycloElement.zero(5))


def test_prime_mismatch():
    with pytest.raises(PrimeMismatch):
        CycloElement.one(3) + CycloElement.one(5)


@pytest.mark.parametrize("p", PRIMES)
def test_qlambda_arithmetic(p):
    l = QLambda.monomial(p, 1, 0)
    li = QLambda.monomial(p, -1, 0)
    assert l * li == QLambda.one(p)
    x = QLambda.monomial(p, 1, -1) - QLambda.monomial(p, -1, 1)
    assert (x * x) - x * x == QLambda.zero(p)
    assert QLambda.monomial(p, 2, 0, 3) == QLambda.monomial(p, 1, 0, 3) * l


def test_cyclo_reduce_function():
    assert cyclo_reduce({0: 1, 2: 1, 4: 1}, 3).is_zero()
