"""Exact coefficient rings.

Prime fields, the cyclotomic quotient ``O_p = Q[q]/(1 + q^2 + ... + q^(2p-2))``
and Laurent polynomials in ``l`` (lambda) over it.  Every value carries its
prime; mixing primes raises :class:`PrimeMismatch`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import sympy


class PrimeMismatch(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


def is_prime(p: int) -> bool:
    return p >= 2 and sympy.isprime(p)


def _check_odd_prime(p: int) -> None:
    if not (isinstance(p, int) and p >= 3 and is_prime(p)):
        raise ValueError(f"expected an odd prime, got {p!r}")


class PrimeField:
    """Element of F_p."""

    __slots__ = ("p", "value")

    def __init__(self, value: int, p: int):
        _check_odd_prime(p)
        self.p = p
        self.value = int(value) % p

    def _coerce(self, other) -> "PrimeField":
        if isinstance(other, PrimeField):
            if other.p != self.p:
                raise PrimeMismatch(f"F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, int):
            return PrimeField(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeField(self.value + o.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return PrimeField(-self.value, self.p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeField(self.value - o.value, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeField(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "PrimeField":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return PrimeField(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeField(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeField):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


# ---------------------------------------------------------------------------
# cyclotomic ring


def _fold(p: int, coeffs: Mapping[int, object]) -> tuple[Fraction, ...]:
    """Reduce a Laurent q-polynomial {exp: coeff} to the canonical remainder."""
    top = 2 * p
    acc = [Fraction(0)] * top
    for e, c in coeffs.items():
        if c:
            acc[e % top] += Fraction(c)
    # q^(2p-2) = -(1 + q^2 + ... + q^(2p-4)), and q times that for q^(2p-1)
    for hi in (top - 1, top - 2):
        c = acc[hi]
        if c:
            acc[hi] = Fraction(0)
            for k in range(p - 1):
                acc[hi - top + 2 + 2 * k] -= c
    return tuple(acc[: top - 2])


class CycloElement:
    """Canonical element of Q[q]/Phi_p, stored as coefficients of q^0..q^(2p-3)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Mapping[int, object] | Iterable = ()):
        _check_odd_prime(p)
        self.p = p
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        self.coeffs = _fold(p, coeffs)

    @classmethod
    def _raw(cls, p: int, coeffs: tuple[Fraction, ...]) -> "CycloElement":
        obj = object.__new__(cls)
        obj.p = p
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, p: int) -> "CycloElement":
        return cls(p)

    @classmethod
    def one(cls, p: int) -> "CycloElement":
        return cls(p, {0: 1})

    @classmethod
    def q_power(cls, p: int, k: int, c=1) -> "CycloElement":
        return cls(p, {k: c})

    def _same(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.p != self.p:
                raise PrimeMismatch(f"O_{self.p} vs O_{other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.p, {0: other})
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return CycloElement._raw(self.p, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElement._raw(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return CycloElement._raw(self.p, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        prod: dict[int, Fraction] = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] = prod.get(i + j, 0) + a * b
        return CycloElement(self.p, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return cyclo_invert(self) ** (-k)
        out = CycloElement.one(self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return self * cyclo_invert(o)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElement(self.p, {0: other})
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_text(self) -> str:
        return render_qpoly({i: c for i, c in enumerate(self.coeffs) if c})

    def __repr__(self):
        return f"CycloElement(p={self.p}, {self.to_text()})"

    __str__ = to_text


def _coeff_text(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_terms(items: list[tuple[Fraction, str]]) -> str:
    """Join (coefficient, monomial) pairs as '3*a - b + 1'."""
    if not items:
        return "0"
    parts: list[str] = []
    for idx, (c, mono) in enumerate(items):
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{_coeff_text(a)}*{mono}"
        else:
            body = _coeff_text(a)
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def render_qpoly(coeffs: Mapping[int, object], var: str = "q") -> str:
    items = []
    for e in sorted(coeffs, reverse=True):
        c = Fraction(coeffs[e])
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        items.append((c, mono))
    return render_terms(items)


def cyclo_reduce(poly: Mapping[int, int] | Iterable[int], p: int) -> CycloElement:
    """Canonical representative of a (Laurent) q-polynomial in O_p."""
    return CycloElement(p, poly)


@lru_cache(maxsize=None)
def _phi_poly(p: int):
    q = sympy.Symbol("q")
    return q, sympy.Poly(sum(q ** (2 * k) for k in range(p)), q, domain="QQ")


def cyclo_invert(x: CycloElement) -> CycloElement:
    """Inverse in Q[q]/Phi_p by the extended Euclidean algorithm."""
    if x.is_zero():
        raise NotInvertible("zero is not invertible")
    q, phi = _phi_poly(x.p)
    f = sympy.Poly({(i,): sympy.Rational(c.numerator, c.denominator)
                    for i, c in enumerate(x.coeffs) if c}, q, domain="QQ")
    s, _t, g = sympy.gcdex(f, phi)
    if g.degree() != 0:
        raise NotInvertible(f"{x.to_text()} is a zero divisor in O_{x.p}")
    s = s.quo_ground(g.LC())
    coeffs = {m[0]: Fraction(int(c.p), int(c.q)) for m, c in s.terms()}
    inv = CycloElement(x.p, coeffs)
    assert (inv * x) == CycloElement.one(x.p)
    return inv


def quantum_int(n: int, p: int) -> CycloElement:
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError("quantum integers are defined here for n >= 0")
    return CycloElement(p, {n - 1 - 2 * j: 1 for j in range(n)} if n else {})


@lru_cache(maxsize=None)
def q_minus_qinv_inverse(p: int) -> CycloElement:
    return cyclo_invert(CycloElement(p, {1: 1, -1: -1}))


# ---------------------------------------------------------------------------
# Laurent polynomials in lambda


class QLambda:
    """Laurent polynomial in l with coefficients in O_p: {l-exponent: CycloElement}."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping[int, CycloElement] | None = None):
        _check_odd_prime(p)
        self.p = p
        clean: dict[int, CycloElement] = {}
        for k, c in (terms or {}).items():
            if c.p != p:
                raise PrimeMismatch(f"O_{p} vs O_{c.p}")
            if not c.is_zero():
                clean[k] = c
        self.terms = clean

    @classmethod
    def zero(cls, p: int) -> "QLambda":
        return cls(p)

    @classmethod
    def one(cls, p: int) -> "QLambda":
        return cls.monomial(p, 0, 0)

    @classmethod
    def monomial(cls, p: int, lam: int, qexp: int, c=1) -> "QLambda":
        """c * l^lam * q^qexp."""
        return cls(p, {lam: CycloElement(p, {qexp: c})})

    @classmethod
    def scalar(cls, c: CycloElement) -> "QLambda":
        return cls(c.p, {0: c})

    def _same(self, other) -> "QLambda":
        if isinstance(other, QLambda):
            if other.p != self.p:
                raise PrimeMismatch(f"O_{self.p} vs O_{other.p}")
            return other
        if isinstance(other, CycloElement):
            return QLambda.scalar(other)
        if isinstance(other, (int, Fraction)):
            return QLambda(self.p, {0: CycloElement(self.p, {0: other})})
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out[k] + c if k in out else c
        return QLambda(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return QLambda(self.p, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        out: dict[int, CycloElement] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return QLambda(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise NotInvertible("only monomials in l are invertible")
            (lam, c), = self.terms.items()
            return QLambda(self.p, {-lam * (-k): cyclo_invert(c) ** (-k)})
        out = QLambda.one(self.p)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloElement)):
            other = self._same(other)
        if not isinstance(other, QLambda):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def to_text(self) -> str:
        """Render as a sum of c*q^a*l^b terms, l-degree then q-degree descending."""
        items: list[tuple[Fraction, str]] = []
        for lam in sorted(self.terms, reverse=True):
            c = self.terms[lam]
            for e in range(len(c.coeffs) - 1, -1, -1):
                a = c.coeffs[e]
                if not a:
                    continue
                factors = []
                if e:
                    factors.append("q" if e == 1 else f"q^{e}")
                if lam:
                    factors.append("l" if lam == 1 else f"l^{lam}")
                items.append((a, "*".join(factors)))
        return render_terms(items)

    def __repr__(self):
        return f"QLambda(p={self.p}, {self.to_text()})"

    __str__ = to_text
