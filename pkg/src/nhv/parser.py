"""Expression parser for ring, algebra and K0 elements.

Grammar::

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := INT | atom ["^" INT] | "(" expr ")" ["^" INT]
    atom   := "x"INT | "w"INT | "T"INT | "q" | "l" | "A"INT

``T`` is only allowed in the algebra context, ``q``, ``l`` and ``A`` only in
the k0 context, where exponents of ``q`` and ``l`` may be negative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from nhv.coeff_rings import QLambda
from nhv.ennilhecke import AnElement
from nhv.extpoly import ExtPolynomial, IndexOutOfRange

CONTEXTS = ("ring", "algebra", "k0")


class ExprSyntaxError(SyntaxError):
    def __init__(self, msg: str, pos: int, expected: tuple[str, ...] = ()):
        self.pos = pos
        self.expected = expected
        exp = f"; expected {' or '.join(expected)}" if expected else ""
        super().__init__(f"{msg} at position {pos}{exp}")


class ContextError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([xwTA])(\d+)|([ql])(?![A-Za-z0-9])|([-+*/^()]))")


@dataclass
class Tok:
    kind: str  # int, var, op, end
    value: object
    pos: int


def tokenize(src: str) -> list[Tok]:
    toks = []
    i = 0
    while i < len(src):
        if src[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(src, i)
        if not m or m.end() == i:
            raise ExprSyntaxError(f"unexpected character {src[i]!r}", i,
                                  ("integer", "variable", "operator"))
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1):
            toks.append(Tok("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(Tok("var", (m.group(2), int(m.group(3))), start))
        elif m.group(4):
            toks.append(Tok("var", (m.group(4), 0), start))
        else:
            toks.append(Tok("op", m.group(5), start))
        i = m.end()
    toks.append(Tok("end", None, len(src)))
    return toks


class _K0Expr:
    """Linear combination over QLambda of 1 (key None) and the classes [A_i]."""

    def __init__(self, p: int, terms: dict):
        self.p = p
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def scalar(cls, p: int, c: QLambda) -> "_K0Expr":
        return cls(p, {None: c})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return _K0Expr(self.p, out)

    def __neg__(self):
        return _K0Expr(self.p, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                if k1 is not None and k2 is not None:
                    raise ContextError("a product of two classes [A_i][A_j] is not defined")
                k = k1 if k1 is not None else k2
                out[k] = out[k] + v1 * v2 if k in out else v1 * v2
        return _K0Expr(self.p, out)

    def power(self, k: int) -> "_K0Expr":
        if set(self.terms) - {None}:
            if k == 1:
                return self
            raise ContextError("powers of classes are not defined")
        c = self.terms.get(None, QLambda.zero(self.p))
        return _K0Expr.scalar(self.p, c ** k)


class _Parser:
    def __init__(self, src: str, n: int, context: str, mod: int = 0, p: int | None = None):
        if context not in CONTEXTS:
            raise ValueError(f"unknown context {context!r}")
        if context == "k0" and p is None:
            raise ValueError("the k0 context needs p")
        self.toks = tokenize(src)
        self.i = 0
        self.n = n
        self.ctx = context
        self.mod = mod
        self.p = p

    # -- token helpers -------------------------------------------------------
    def peek(self) -> Tok:
        return self.toks[self.i]

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, op: str) -> bool:
        t = self.peek()
        if t.kind == "op" and t.value == op:
            self.i += 1
            return True
        return False

    def expect_int(self, signed: bool = False) -> int:
        sign = 1
        if signed and self.accept("-"):
            sign = -1
        t = self.take()
        if t.kind != "int":
            raise ExprSyntaxError("expected an exponent", t.pos, ("integer",))
        return sign * t.value

    # -- values --------------------------------------------------------------
    def const(self, c):
        if self.ctx == "ring":
            return ExtPolynomial.const(c, self.n, self.mod)
        if self.ctx == "algebra":
            return AnElement.const(c, self.n, self.mod)
        return _K0Expr.scalar(self.p, QLambda.monomial(self.p, 0, 0, c))

    def atom(self, tok: Tok, exp: int):
        name, idx = tok.value
        allowed = {"ring": "xw", "algebra": "xwT", "k0": "qlA"}[self.ctx]
        if name not in allowed:
            raise ContextError(f"{name!r} is not allowed in the {self.ctx} context (position {tok.pos})")
        if name in "ql":
            lam_e, q_e = (exp, 0) if name == "l" else (0, exp)
            return _K0Expr.scalar(self.p, QLambda.monomial(self.p, lam_e, q_e))
        if exp < 0:
            raise ExprSyntaxError("negative exponents are only allowed on q and l", tok.pos, ("integer",))
        if name == "A":
            if not 0 <= idx < self.p:
                raise IndexOutOfRange(f"A{idx} needs 0 <= index < {self.p}")
            base = _K0Expr(self.p, {idx: QLambda.one(self.p)})
            return base.power(exp) if exp != 1 else base
        if not 1 <= idx <= (self.n - 1 if name == "T" else self.n):
            raise IndexOutOfRange(f"{name}{idx} out of range for n={self.n}")
        if self.ctx == "ring":
            g = ExtPolynomial.x(idx, self.n, self.mod) if name == "x" else ExtPolynomial.w(idx, self.n, self.mod)
        else:
            g = {"x": AnElement.x, "w": AnElement.w, "T": AnElement.T}[name](idx, self.n, self.mod)
        return self.pow(g, exp)

    def pow(self, v, k: int):
        if isinstance(v, _K0Expr):
            return v.power(k)
        if k < 0:
            raise ExprSyntaxError("negative exponent", self.peek().pos, ("non-negative integer",))
        return v ** k

    def mul(self, a, b):
        return a * b

    # -- grammar -------------------------------------------------------------
    def parse(self):
        v = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ExprSyntaxError(f"unexpected token {t.value!r}", t.pos, ("+", "-", "*", "end of input"))
        return v

    def expr(self):
        neg = False
        if self.accept("-"):
            neg = True
        else:
            self.accept("+")
        v = self.term()
        if neg:
            v = -v
        while True:
            if self.accept("+"):
                v = v + self.term()
            elif self.accept("-"):
                v = v + (-self.term())
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            if self.accept("*"):
                v = self.mul(v, self.factor())
            elif self.accept("/"):
                t = self.take()
                if t.kind != "int" or t.value == 0:
                    raise ExprSyntaxError("division only by a non-zero integer", t.pos, ("integer",))
                v = self.mul(v, self.const(Fraction(1, t.value)))
            else:
                return v

    def _exponent(self, signed: bool) -> int:
        if self.accept("^"):
            return self.expect_int(signed)
        return 1

    def factor(self):
        t = self.take()
        if t.kind == "int":
            return self.const(t.value)
        if t.kind == "var":
            return self.atom(t, self._exponent(signed=self.ctx == "k0"))
        if t.kind == "op" and t.value == "(":
            v = self.expr()
            close = self.take()
            if not (close.kind == "op" and close.value == ")"):
                raise ExprSyntaxError("unbalanced parenthesis", close.pos, (")",))
            k = self._exponent(signed=self.ctx == "k0")
            return self.pow(v, k) if k != 1 else v
        raise ExprSyntaxError("unexpected token" if t.kind != "end" else "unexpected end of input", t.pos,
                              ("integer", "variable", "("))


def parse_expr(src: str, n: int, context: str = "ring", mod: int = 0, p: int | None = None):
    """Parse ``src`` into an ExtPolynomial, AnElement or K0Vector."""
    v = _Parser(src, n, context, mod, p).parse()
    if context == "k0":
        from nhv.ktheory import K0Vector
        if None in v.terms:
            if set(v.terms) == {None}:
                return v.terms[None]
            raise ContextError("k0 expressions must be combinations of classes A_i")
        coords = [QLambda.zero(p)] * p
        for k, c in v.terms.items():
            coords[k] = c
        return K0Vector(p, tuple(coords))
    return v


def parse_scalar(src: str, p: int) -> QLambda:
    v = _Parser(src, 0, "k0", 0, p).parse()
    if set(v.terms) - {None}:
        raise ContextError("expected a scalar in q and l")
    return v.terms.get(None, QLambda.zero(p))
