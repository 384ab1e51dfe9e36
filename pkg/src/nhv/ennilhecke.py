"""The enhanced nilHecke algebra A_n in left normal form sum_w f_w T_w."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from nhv import derivations as dv
from nhv.extpoly import (
    DomainMismatch, ExtPolynomial, IndexOutOfRange, RankMismatch, all_perms, apply_transposition,
    demazure, demazure_word, monomial_keys, perm_inverse, perm_length, perm_mul,
    reduced_word, simple_perm, staircase, tagged_batch,
)
from nhv.report import Report

Perm = tuple


class AnElement:
    """Element of A_n: map permutation (0-based one-line tuple) -> coefficient in R_n."""

    __slots__ = ("n", "terms", "mod")

    def __init__(self, n: int, terms: Mapping[Perm, ExtPolynomial] | None = None, mod: int = 0):
        self.n = n
        self.mod = mod
        clean = {}
        for w, f in (terms or {}).items():
            if len(w) != n:
                raise RankMismatch(f"permutation {w} is not in S_{n}")
            if f.n != n:
                raise RankMismatch(f"coefficient in R_{f.n}, expected R_{n}")
            if f.mod != mod:
                raise DomainMismatch("coefficient domain differs")
            if f:
                clean[tuple(w)] = f
        self.terms = clean

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int, mod: int = 0) -> "AnElement":
        return cls(n, {}, mod)

    @classmethod
    def from_poly(cls, f: ExtPolynomial) -> "AnElement":
        return cls(f.n, {tuple(range(f.n)): f}, f.mod)

    @classmethod
    def const(cls, c, n: int, mod: int = 0) -> "AnElement":
        return cls.from_poly(ExtPolynomial.const(c, n, mod))

    @classmethod
    def one(cls, n: int, mod: int = 0) -> "AnElement":
        return cls.const(1, n, mod)

    @classmethod
    def x(cls, i: int, n: int, mod: int = 0) -> "AnElement":
        return cls.from_poly(ExtPolynomial.x(i, n, mod))

    @classmethod
    def w(cls, i: int, n: int, mod: int = 0) -> "AnElement":
        return cls.from_poly(ExtPolynomial.w(i, n, mod))

    @classmethod
    def T(cls, i: int, n: int, mod: int = 0) -> "AnElement":
        if not 1 <= i < n:
            raise IndexOutOfRange(f"T{i} not in A_{n}")
        return cls(n, {simple_perm(i, n): ExtPolynomial.one(n, mod)}, mod)

    @classmethod
    def T_perm(cls, w: Perm, mod: int = 0) -> "AnElement":
        n = len(w)
        return cls(n, {tuple(w): ExtPolynomial.one(n, mod)}, mod)

    @classmethod
    def T_word(cls, word: Sequence[int], n: int, mod: int = 0) -> "AnElement":
        out = cls.one(n, mod)
        for i in word:
            out = out * cls.T(i, n, mod)
        return out

    # -- arithmetic ----------------------------------------------------------
    def _lift(self, other) -> "AnElement":
        if isinstance(other, AnElement):
            if other.n != self.n:
                raise RankMismatch(f"A_{self.n} vs A_{other.n}")
            if other.mod != self.mod:
                raise DomainMismatch("coefficient domains differ")
            return other
        if isinstance(other, ExtPolynomial):
            return AnElement.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return AnElement.const(other, self.n, self.mod)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for w, f in o.terms.items():
            out[w] = out[w] + f if w in out else f
        return AnElement(self.n, out, self.mod)

    __radd__ = __add__

    def __neg__(self):
        return AnElement(self.n, {w: -f for w, f in self.terms.items()}, self.mod)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AnElement(self.n, {w: f * other for w, f in self.terms.items()}, self.mod)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return an_mul(self, o)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return an_mul(o, self)

    def __pow__(self, k: int):
        out = AnElement.one(self.n, self.mod)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ExtPolynomial)):
            other = self._lift(other)
        if not isinstance(other, AnElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset((w, frozenset(f.terms.items())) for w, f in self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def reduce_mod(self, p: int) -> "AnElement":
        return AnElement(self.n, {w: f.reduce_mod(p) for w, f in self.terms.items()}, p)

    def coefficient(self, w: Perm) -> ExtPolynomial:
        return self.terms.get(tuple(w), ExtPolynomial.zero(self.n, self.mod))

    def bidegree(self):
        degs = set()
        for w, f in self.terms.items():
            bd = f.bidegree()
            if bd == "Inhomogeneous":
                return bd
            degs.add((bd[0] - 2 * perm_length(w), bd[1]))
        if not degs:
            raise ValueError("zero element has no degree")
        return degs.pop() if len(degs) == 1 else "Inhomogeneous"

    # -- text ----------------------------------------------------------------
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda v: (perm_length(v), reduced_word(v))):
            f = self.terms[w]
            word = reduced_word(w)
            tw = "*".join(f"T{i}" for i in word)
            ft = f.to_text()
            if not word:
                parts.append(ft)
            elif ft == "1":
                parts.append(tw)
            elif ft == "-1":
                parts.append("-" + tw)
            elif len(f) == 1:
                parts.append(f"{ft}*{tw}")
            else:
                parts.append(f"({ft})*{tw}")
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self):
        return f"AnElement(n={self.n}, {self.to_text()})"

    __str__ = to_text


# ---------------------------------------------------------------------------
# multiplication


def _push_letter(i: int, terms: dict, n: int) -> dict:
    """T_i * sum_v h_v T_v, using T_i h = T_i(h) + s_i(h) T_i."""
    si = simple_perm(i, n)
    out: dict = {}
    for v, h in terms.items():
        th = demazure(i, h)
        if th:
            out[v] = out[v] + th if v in out else th
        u = perm_mul(si, v)
        if perm_length(u) > perm_length(v):
            sh = apply_transposition(i, h)
            out[u] = out[u] + sh if u in out else sh
    return {v: h for v, h in out.items() if h}


def push_through(w: Perm, g: ExtPolynomial) -> dict:
    """T_w * g written as sum_v h_v T_v."""
    terms = {tuple(range(g.n)): g}
    for i in reversed(reduced_word(w)):
        terms = _push_letter(i, terms, g.n)
    return terms


def an_mul(a: AnElement, b: AnElement) -> AnElement:
    if a.n != b.n:
        raise RankMismatch(f"A_{a.n} vs A_{b.n}")
    if a.mod != b.mod:
        raise DomainMismatch("coefficient domains differ")
    n = a.n
    out: dict = {}
    for w, f in a.terms.items():
        for u, g in b.terms.items():
            for v, h in push_through(w, g).items():
                vu = perm_mul(v, u)
                if perm_length(vu) != perm_length(v) + perm_length(u):
                    continue
                c = f * h
                out[vu] = out[vu] + c if vu in out else c
    return AnElement(n, out, a.mod)


def act(a: AnElement, f: ExtPolynomial) -> ExtPolynomial:
    """Action of A_n on R_n; ``f`` may carry extra inert trailing variables."""
    if f.n < a.n:
        raise RankMismatch(f"A_{a.n} acting on R_{f.n}")
    out = ExtPolynomial.zero(f.n, f.mod)
    for w, c in a.terms.items():
        tf = demazure_word(reduced_word(w), f)
        if tf:
            out = out + c.embed(f.n) * tf
    return out


# ---------------------------------------------------------------------------
# formal words: evaluated both as normal forms and as operators


Factor = tuple  # ("x"|"w"|"T", index) or ("c", ExtPolynomial)


def word_normal_form(word: Sequence[Factor], n: int, mod: int = 0) -> AnElement:
    out = AnElement.one(n, mod)
    for kind, i in word:
        if kind == "x":
            g = AnElement.x(i, n, mod)
        elif kind == "w":
            g = AnElement.w(i, n, mod)
        elif kind == "T":
            g = AnElement.T(i, n, mod)
        else:
            g = AnElement.from_poly(i)
        out = out * g
    return out


def word_action(word: Sequence[Factor], f: ExtPolynomial) -> ExtPolynomial:
    """Apply the factors right to left as operators on R_n (no normal forms)."""
    for kind, i in reversed(word):
        if kind == "x":
            f = ExtPolynomial.x(i, f.n, f.mod) * f
        elif kind == "w":
            f = ExtPolynomial.w(i, f.n, f.mod) * f
        elif kind == "T":
            f = demazure(i, f)
        else:
            f = i.embed(f.n).reduce_mod(f.mod) * f if f.mod else i.embed(f.n) * f
    return f


Combo = list  # list of (coeff, word)


def combo_normal_form(combo: Combo, n: int, mod: int = 0) -> AnElement:
    out = AnElement.zero(n, mod)
    for c, word in combo:
        out = out + word_normal_form(word, n, mod) * c
    return out


def combo_action(combo: Combo, f: ExtPolynomial) -> ExtPolynomial:
    out = ExtPolynomial.zero(f.n, f.mod)
    for c, word in combo:
        out = out + word_action(word, f) * c
    return out


def defining_relations(n: int) -> list[tuple[str, Combo, Combo]]:
    """(name, lhs, rhs) for every defining relation of A_n and the theta presentation."""
    rels: list[tuple[str, Combo, Combo]] = []
    X = lambda i: ("x", i)  # noqa: E731
    W = lambda i: ("w", i)  # noqa: E731
    T = lambda i: ("T", i)  # noqa: E731
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append((f"x{i}x{j} = x{j}x{i}", [(1, [X(i), X(j)])], [(1, [X(j), X(i)])]))
    for i in range(1, n):
        rels.append((f"T{i}^2 = 0", [(1, [T(i), T(i)])], []))
        for j in range(i + 2, n):
            rels.append((f"T{i}T{j} = T{j}T{i}", [(1, [T(i), T(j)])], [(1, [T(j), T(i)])]))
        if i + 1 < n:
            rels.append((f"T{i}T{i+1}T{i} = T{i+1}T{i}T{i+1}", [(1, [T(i), T(i + 1), T(i)])],
                         [(1, [T(i + 1), T(i), T(i + 1)])]))
        for k in range(1, n + 1):
            if k not in (i, i + 1):
                rels.append((f"x{k}T{i} = T{i}x{k}", [(1, [X(k), T(i)])], [(1, [T(i), X(k)])]))
        rels.append((f"x{i}T{i} - T{i}x{i+1} = 1", [(1, [X(i), T(i)]), (-1, [T(i), X(i + 1)])], [(1, [])]))
        rels.append((f"T{i}x{i} - x{i+1}T{i} = 1", [(1, [T(i), X(i)]), (-1, [X(i + 1), T(i)])], [(1, [])]))
    for i in range(1, n + 1):
        rels.append((f"w{i}w{i} = 0", [(1, [W(i), W(i)])], []))
        for j in range(i + 1, n + 1):
            rels.append((f"w{i}w{j} = -w{j}w{i}", [(1, [W(i), W(j)])], [(-1, [W(j), W(i)])]))
        for k in range(1, n + 1):
            rels.append((f"x{k}w{i} = w{i}x{k}", [(1, [X(k), W(i)])], [(1, [W(i), X(k)])]))
        for k in range(1, n):
            if k != i:
                rels.append((f"T{k}w{i} = w{i}T{k}", [(1, [T(k), W(i)])], [(1, [W(i), T(k)])]))
    for i in range(1, n):
        lhs = [(1, [T(i), W(i)]), (-1, [T(i), X(i + 1), W(i + 1)])]
        rhs = [(1, [W(i), T(i)]), (-1, [X(i + 1), W(i + 1), T(i)])]
        rels.append((f"T{i}(w{i} - x{i+1}w{i+1}) = (w{i} - x{i+1}w{i+1})T{i}", lhs, rhs))
        rels.append((f"w{i+1} = T{i}w{i}T{i}x{i+1} - x{i}T{i}w{i}T{i}", [(1, [W(i + 1)])],
                     [(1, [T(i), W(i), T(i), X(i + 1)]), (-1, [X(i), T(i), W(i), T(i)])]))
    # theta presentation, theta = w1
    th = W(1)
    rels.append(("theta^2 = 0", [(1, [th, th])], []))
    for i in range(1, n + 1):
        rels.append((f"theta x{i} = x{i} theta", [(1, [th, X(i)])], [(1, [X(i), th])]))
    for i in range(2, n):
        rels.append((f"theta T{i} = T{i} theta", [(1, [th, T(i)])], [(1, [T(i), th])]))
    if n >= 2:
        rels.append(("theta T1 theta T1 + T1 theta T1 theta = 0",
                     [(1, [th, T(1), th, T(1)]), (1, [T(1), th, T(1), th])], []))
    return rels


def verify_relations(n: int, D: int = 12, mod: int = 0) -> Report:
    rep = Report("relations", {"n": n, "D": D, "p": mod or None})
    batch = tagged_batch(monomial_keys(n, D), n, mod)
    for name, lhs, rhs in defining_relations(n):
        rep.add(f"{name} [normal form]", combo_normal_form(lhs, n, mod), combo_normal_form(rhs, n, mod))
        ok = combo_action(lhs, batch) == combo_action(rhs, batch)
        rep.add(f"{name} [action]", ok, True, detail=f"{len(batch)} monomials up to q-degree {D}")
    return rep.finish()


def faithful_basis(n: int, mod: int = 0) -> ExtPolynomial:
    """Tagged batch of the staircase x omega basis {x^b w_S : 0 <= b_i <= n-i}."""
    keys = [(b, m) for m in range(1 << n) for b in staircase(n)]
    return tagged_batch(keys, n, mod)


def vanishes_on_basis(a: AnElement) -> bool:
    return act(a, faithful_basis(a.n, a.mod)).is_zero()


# ---------------------------------------------------------------------------
# idempotent


def epsilon(n: int, mod: int = 0) -> AnElement:
    """(-1)^(n(n-1)/2) T_{w0} x_1^0 x_2^1 ... x_n^(n-1)."""
    w0 = tuple(range(n - 1, -1, -1))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    mono = AnElement.from_poly(ExtPolynomial.monomial(tuple(range(n)), (), sign, mod))
    return AnElement.T_perm(w0, mod) * mono


def epsilon_check(n: int, a: int = 1) -> Report:
    rep = Report("epsilon", {"n": n, "a": a})
    e = epsilon(n)
    rep.add(f"eps_{n}^2 = eps_{n}", e * e, e)
    coeff = sum(((n - i) * ExtPolynomial.x(i, n) for i in range(1, n + 1)), ExtPolynomial.zero(n))
    rep.add(f"d(eps_{n}) = -sum (n-i) x_i eps_{n}", d_a_apply(a, e), AnElement.from_poly(-coeff) * e)
    return rep.finish()


# ---------------------------------------------------------------------------
# derivations of A_n


class AnDerivation:
    """Even derivation of A_n: a derivation of R_n plus images of the T_i."""

    def __init__(self, name: str, spec: dv.DerivationSpec, t_images: Sequence[AnElement]):
        self.name = name
        self.spec = spec
        self.n = spec.n
        self.t_images = list(t_images)
        self._tw: dict = {}

    def t_image(self, i: int, mod: int) -> AnElement:
        t = self.t_images[i - 1]
        return t.reduce_mod(mod) if mod else t

    def of_T(self, w: Perm, mod: int = 0) -> AnElement:
        """Image of T_w, by the Leibniz rule over its reduced word."""
        key = (w, mod)
        got = self._tw.get(key)
        if got is not None:
            return got
        word = reduced_word(w)
        n = self.n
        out = AnElement.zero(n, mod)
        for k, i in enumerate(word):
            left = AnElement.T_perm(_word_perm(word[:k], n), mod)
            right = AnElement.T_perm(_word_perm(word[k + 1:], n), mod)
            out = out + left * self.t_image(i, mod) * right
        self._tw[key] = out
        return out

    def __call__(self, xi: AnElement) -> AnElement:
        if xi.n != self.n:
            raise RankMismatch(f"derivation of A_{self.n} applied to A_{xi.n}")
        out = AnElement.zero(xi.n, xi.mod)
        for w, f in xi.terms.items():
            df = dv.apply(self.spec, f)
            if df:
                out = out + AnElement(xi.n, {w: df}, xi.mod)
            if perm_length(w):
                out = out + AnElement.from_poly(f) * self.of_T(w, xi.mod)
        return out

    def power(self, xi: AnElement, k: int) -> AnElement:
        for _ in range(k):
            xi = self(xi)
        return xi


@lru_cache(maxsize=None)
def _word_perm(word: tuple, n: int) -> Perm:
    w = tuple(range(n))
    for i in word:
        w = perm_mul(w, simple_perm(i, n))
    return w


@lru_cache(maxsize=None)
def d_a_derivation(a: int, n: int) -> AnDerivation:
    """d_a(T_i) = a - (a+1) x_i T_i + (a-1) x_{i+1} T_i."""
    ts = []
    for i in range(1, n):
        Ti = AnElement.T(i, n)
        ts.append(AnElement.const(a, n) - AnElement.x(i, n) * Ti * (a + 1) + AnElement.x(i + 1, n) * Ti * (a - 1))
    return AnDerivation(f"d_{a}", dv.dn_spec(n), ts)


def d_a_apply(a: int, xi: AnElement) -> AnElement:
    return d_a_derivation(a, xi.n)(xi)


@lru_cache(maxsize=None)
def sl2_an_derivation(which: str, n: int) -> AnDerivation:
    """e = d_1, f(T_i) = 0, h(T_i) = -2 T_i on A_n."""
    if which == "e":
        return d_a_derivation(1, n)
    if which == "f":
        return AnDerivation("f", dv.sl2_spec("f", n), [AnElement.zero(n) for _ in range(1, n)])
    if which == "h":
        return AnDerivation("h", dv.sl2_spec("h", n), [AnElement.T(i, n) * -2 for i in range(1, n)])
    raise ValueError(f"unknown sl2 generator {which!r}")


@lru_cache(maxsize=None)
def degq_an_derivation(n: int) -> AnDerivation:
    return AnDerivation("deg_q", dv.degq_spec(n), [AnElement.T(i, n) * -2 for i in range(1, n)])


def generators(n: int, mod: int = 0) -> list[tuple[str, AnElement]]:
    gens = [(f"x{i}", AnElement.x(i, n, mod)) for i in range(1, n + 1)]
    gens += [(f"w{i}", AnElement.w(i, n, mod)) for i in range(1, n + 1)]
    gens += [(f"T{i}", AnElement.T(i, n, mod)) for i in range(1, n)]
    return gens


def random_words(n: int, count: int, maxlen: int = 3, seed: int = 0, mod: int = 0) -> list[tuple[str, AnElement]]:
    rng = random.Random(seed)
    gens = generators(n, mod)
    out = []
    for _ in range(count):
        k = rng.randint(2, maxlen)
        picks = [rng.choice(gens) for _ in range(k)]
        elt = AnElement.one(n, mod)
        for _, g in picks:
            elt = elt * g
        out.append(("*".join(nm for nm, _ in picks), elt))
    return out


def d_a_commutator_check(a: int, n: int, D: int = 8, words: int = 6, seed: int = 0) -> Report:
    """act(d_a(xi)) = D o act(xi) - act(xi) o D with D the twisted d on R_n.v."""
    rep = Report("d_a_commutator", {"a": a, "n": n, "D": D})
    alphas = [a * (i - n) for i in range(1, n + 1)]
    batch = tagged_batch(monomial_keys(n, D), n)
    dbatch = dv.apply_twisted(batch, alphas, n)
    for name, xi in generators(n) + random_words(n, words, 3, seed):
        lhs = act(d_a_apply(a, xi), batch)
        rhs = dv.apply_twisted(act(xi, batch), alphas, n) - act(xi, dbatch)
        rep.add(f"d_{a}({name}) as a commutator", lhs == rhs, True, detail=f"{len(batch)} monomials")
    return rep.finish()


def an_nilpotency_check(p: int, n: int, a: int = 1, words: int = 6, seed: int = 0) -> Report:
    if n >= p:
        raise ValueError("p-nilpotency is claimed for n < p")
    rep = Report("an_nilpotency", {"p": p, "n": n, "a": a})
    d = d_a_derivation(a, n)
    for name, g in generators(n, p) + random_words(n, words, 3, seed, p):
        rep.add(f"d_{a}^{p}({name})", d.power(g, p), AnElement.zero(n, p))
    return rep.finish()


def derivation_leibniz_check(d: AnDerivation, count: int = 8, seed: int = 1) -> Report:
    rep = Report("an_leibniz", {"op": d.name, "n": d.n})
    pool = generators(d.n) + random_words(d.n, count, 3, seed)
    rng = random.Random(seed)
    for _ in range(count):
        (na, a), (nb, b) = rng.choice(pool), rng.choice(pool)
        rep.add(f"{d.name}(({na})({nb}))", d(a * b), d(a) * b + a * d(b))
    return rep.finish()


# ---------------------------------------------------------------------------
# inclusion A_n -> A_{n+1} and the anti-involution


def phi_inclusion(n: int, xi: AnElement) -> AnElement:
    if xi.n != n:
        raise RankMismatch(f"expected an element of A_{n}")
    out = {}
    for w, f in xi.terms.items():
        img = dv.phi_prime(n, f)
        out[tuple(w) + (n,)] = img if not xi.mod else img.reduce_mod(xi.mod) if img.mod != xi.mod else img
    return AnElement(n + 1, out, xi.mod)


def phi_inclusion_check(n: int, avals: Iterable[int] = (-1, 0, 1), words: int = 4) -> Report:
    rep = Report("phi_inclusion", {"n": n})
    for a in avals:
        for name, g in generators(n) + random_words(n, words, 3, seed=2):
            rep.add(f"phi_{n}(d_{a} {name}) = d_{a} phi_{n}({name})",
                    phi_inclusion(n, d_a_apply(a, g)), d_a_apply(a, phi_inclusion(n, g)))
    # multiplicativity on words
    for name, g in random_words(n, words, 3, seed=3):
        parts = name.split("*")
        prod = AnElement.one(n + 1)
        gens = dict(generators(n))
        for nm in parts:
            prod = prod * phi_inclusion(n, gens[nm])
        rep.add(f"phi_{n}({name}) multiplicative", phi_inclusion(n, g), prod)
    return rep.finish()


def _reversal_sign(m: int) -> int:
    k = m.bit_count()
    return -1 if (k * (k - 1) // 2) % 2 else 1


def sigma(xi: AnElement) -> AnElement:
    """Anti-involution reversing products and fixing x_i, w_i, T_i."""
    out = AnElement.zero(xi.n, xi.mod)
    for w, f in xi.terms.items():
        rf = f._wrap({(e, m): c * _reversal_sign(m) for (e, m), c in f.terms.items()})
        out = out + AnElement.T_perm(perm_inverse(w), xi.mod) * AnElement.from_poly(rf)
    return out


def right_normal_form(xi: AnElement) -> dict[Perm, ExtPolynomial]:
    """Coefficients h_v with xi = sum_v T_v h_v (valid for w-free elements)."""
    left = sigma(xi)
    return {perm_inverse(v): h for v, h in left.terms.items()}


def an_slice_basis(n: int, qmax: int, masks: Iterable[int] | None = None) -> list[AnElement]:
    """Monomials f T_w with q-degree of f T_w at most qmax (f running over R_n monomials)."""
    out = []
    for w in all_perms(n):
        ell = perm_length(w)
        for key in monomial_keys(n, qmax + 2 * ell, masks=masks):
            out.append(AnElement(n, {w: ExtPolynomial(n, {key: 1}, trusted=True)}))
    return out
