"""The extended polynomial ring R_n = Z[x_1..x_n] (x) Lambda(w_1..w_n).

Elements are sparse maps ``(exps, mask) -> coeff``.  Bit ``i-1`` of ``mask``
stands for ``w_i``; w-monomials are kept in ascending order and the sign of
any reordering lives in the coefficient.  Bidegrees: ``x_i -> (2, 0)``,
``w_i -> (-2i, 2)``.

The coefficient domain is fixed per value: ``mod == 0`` means integers or
rationals (``Fraction``), ``mod == p`` means residues in ``[0, p)``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from sympy import QQ, GF
from sympy.polys.matrices import DomainMatrix

from nhv import kernels
from nhv.coeff_rings import render_terms

Key = tuple[tuple[int, ...], int]


class RankMismatch(ValueError):
    pass


class DomainMismatch(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class ZeroInput(ValueError):
    pass


class NonDivisible(AssertionError):
    pass


class SolveFailure(ArithmeticError):
    pass


INHOMOGENEOUS = "Inhomogeneous"


def _norm_coeff(c, mod: int):
    if mod:
        if isinstance(c, Fraction):
            return (c.numerator * pow(c.denominator, -1, mod)) % mod
        return int(c) % mod
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def sort_omegas(idx: Sequence[int]) -> tuple[int, int] | None:
    """Return (mask, sign) for the product w_{idx[0]} w_{idx[1]} ..., or None if it vanishes."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return None
    inv = sum(1 for a, b in itertools.combinations(idx, 2) if a > b)
    mask = 0
    for i in idx:
        mask |= 1 << (i - 1)
    return mask, (-1 if inv % 2 else 1)


def mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def monomial_qdeg(key: Key) -> int:
    e, m = key
    return 2 * sum(e) - 2 * sum(mask_indices(m))


class ExtPolynomial:
    """Element of R_n."""

    __slots__ = ("n", "terms", "mod")

    def __init__(self, n: int, terms: Mapping[Key, object] | None = None, mod: int = 0,
                 *, trusted: bool = False):
        if n < 0:
            raise ValueError("rank must be non-negative")
        self.n = n
        self.mod = mod
        if trusted:
            self.terms = terms if terms is not None else {}
            return
        clean: dict[Key, object] = {}
        for (e, m), c in (terms or {}).items():
            if len(e) != n or m >> n:
                raise RankMismatch(f"monomial {(e, m)} does not live in R_{n}")
            c = _norm_coeff(c, mod)
            if c:
                clean[(tuple(e), m)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int, mod: int = 0) -> "ExtPolynomial":
        return cls(n, {}, mod, trusted=True)

    @classmethod
    def const(cls, c, n: int, mod: int = 0) -> "ExtPolynomial":
        return cls(n, {((0,) * n, 0): c}, mod)

    @classmethod
    def one(cls, n: int, mod: int = 0) -> "ExtPolynomial":
        return cls.const(1, n, mod)

    @classmethod
    def x(cls, i: int, n: int, mod: int = 0) -> "ExtPolynomial":
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"x{i} not in R_{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {(tuple(e), 0): 1}, mod)

    @classmethod
    def w(cls, i: int, n: int, mod: int = 0) -> "ExtPolynomial":
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"w{i} not in R_{n}")
        return cls(n, {((0,) * n, 1 << (i - 1)): 1}, mod)

    @classmethod
    def monomial(cls, exps: Sequence[int], omegas: Sequence[int] = (), coeff=1,
                 mod: int = 0) -> "ExtPolynomial":
        n = len(exps)
        if any(not 1 <= i <= n for i in omegas):
            raise IndexOutOfRange(f"w-index out of range for R_{n}")
        s = sort_omegas(omegas)
        if s is None:
            return cls.zero(n, mod)
        mask, sign = s
        return cls(n, {(tuple(exps), mask): sign * coeff}, mod)

    # -- basic protocol ----------------------------------------------------
    def _check(self, other: "ExtPolynomial") -> None:
        if other.n != self.n:
            raise RankMismatch(f"R_{self.n} vs R_{other.n}")
        if other.mod != self.mod:
            raise DomainMismatch(f"coefficient domains differ ({self.mod} vs {other.mod})")

    def _lift(self, other) -> "ExtPolynomial":
        if isinstance(other, ExtPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return ExtPolynomial.const(other, self.n, self.mod)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Key, object]]:
        return iter(self.terms.items())

    def _wrap(self, terms: dict) -> "ExtPolynomial":
        return ExtPolynomial(self.n, terms, self.mod, trusted=True)

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        kernels.add_into(out, o.terms)
        return self._wrap(_clean(out, self.mod))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(_clean({k: -v for k, v in self.terms.items()}, self.mod))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        kernels.add_into(out, o.terms, -1)
        return self._wrap(_clean(out, self.mod))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _norm_coeff(other, self.mod)
            return self._wrap(_clean({k: c * v for k, v in self.terms.items()}, self.mod))
        if not isinstance(other, ExtPolynomial):
            return NotImplemented
        self._check(other)
        return self._wrap(kernels.mul_terms(self.terms, other.terms, self.mod))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in R_n")
        out = ExtPolynomial.one(self.n, self.mod)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExtPolynomial.const(other, self.n, self.mod)
        if not isinstance(other, ExtPolynomial):
            return NotImplemented
        return self.n == other.n and self.mod == other.mod and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- gradings ----------------------------------------------------------
    def bidegree(self):
        """Common (q, l) bidegree of all monomials, or ``INHOMOGENEOUS``."""
        if not self.terms:
            raise ZeroInput("bidegree of zero is undefined")
        degs = {(monomial_qdeg(k), 2 * k[1].bit_count()) for k in self.terms}
        if len(degs) != 1:
            return INHOMOGENEOUS
        return degs.pop()

    def parity(self):
        pars = {k[1].bit_count() % 2 for k in self.terms}
        if len(pars) > 1:
            return INHOMOGENEOUS
        return pars.pop() if pars else 0

    def homogeneous_parts(self) -> dict[tuple[int, int], "ExtPolynomial"]:
        parts: dict[tuple[int, int], dict] = {}
        for k, c in self.terms.items():
            parts.setdefault((monomial_qdeg(k), 2 * k[1].bit_count()), {})[k] = c
        return {d: self._wrap(t) for d, t in parts.items()}

    def omega_components(self) -> dict[int, dict[tuple[int, ...], object]]:
        comps: dict[int, dict] = {}
        for (e, m), c in self.terms.items():
            comps.setdefault(m, {})[e] = c
        return comps

    def coefficient(self, exps: Sequence[int], omegas: Sequence[int] = ()):
        s = sort_omegas(omegas)
        if s is None:
            return 0
        mask, sign = s
        return sign * self.terms.get((tuple(exps), mask), 0)

    def reduce_mod(self, p: int) -> "ExtPolynomial":
        if self.mod and self.mod != p:
            raise DomainMismatch("already reduced modulo a different prime")
        return ExtPolynomial(self.n, self.terms, p)

    def embed(self, n: int) -> "ExtPolynomial":
        """View an element of R_m inside R_n (n >= m) along the first coordinates."""
        if n < self.n:
            raise RankMismatch("cannot embed into a smaller rank")
        pad = (0,) * (n - self.n)
        return ExtPolynomial(n, {(e + pad, m): c for (e, m), c in self.terms.items()},
                             self.mod, trusted=True)

    # -- text ----------------------------------------------------------------
    def to_text(self) -> str:
        items = []
        for (e, m) in sorted(self.terms, key=lambda k: (k[0], mask_indices(k[1])), reverse=True):
            c = self.terms[(e, m)]
            factors = []
            for i, a in enumerate(e, start=1):
                if a == 1:
                    factors.append(f"x{i}")
                elif a > 1:
                    factors.append(f"x{i}^{a}")
            factors.extend(f"w{i}" for i in mask_indices(m))
            items.append((Fraction(c), "*".join(factors)))
        return render_terms(items)

    def __repr__(self):
        return f"ExtPolynomial(n={self.n}, {self.to_text()})"

    __str__ = to_text


def _clean(out: dict, mod: int) -> dict:
    if mod:
        return {k: v % mod for k, v in out.items() if v % mod}
    return {k: v for k, v in out.items() if v}


def x(i: int, n: int, mod: int = 0) -> ExtPolynomial:
    return ExtPolynomial.x(i, n, mod)


def w(i: int, n: int, mod: int = 0) -> ExtPolynomial:
    return ExtPolynomial.w(i, n, mod)


def ext_mul(f: ExtPolynomial, g: ExtPolynomial) -> ExtPolynomial:
    return f * g


def bidegree(f: ExtPolynomial):
    return f.bidegree()


# ---------------------------------------------------------------------------
# symmetric group


@lru_cache(maxsize=None)
def perm_length(w: tuple[int, ...]) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


@lru_cache(maxsize=None)
def perm_mul(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Composite u o v (apply v first)."""
    return tuple(u[i] for i in v)


@lru_cache(maxsize=None)
def perm_inverse(w: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, wi in enumerate(w):
        inv[wi] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def simple_perm(i: int, n: int) -> tuple[int, ...]:
    """s_i as a 0-based one-line tuple (1 <= i < n)."""
    w = list(range(n))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def reduced_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest reduced word (letters are 1-based)."""
    n = len(w)
    ell = perm_length(w)
    if ell == 0:
        return ()
    for i in range(1, n):
        v = perm_mul(simple_perm(i, n), w)
        if perm_length(v) < ell:
            return (i,) + reduced_word(v)
    raise AssertionError("non-identity permutation without a left descent")


def perm_from_word(word: Iterable[int], n: int) -> tuple[int, ...]:
    w = tuple(range(n))
    for i in word:
        w = perm_mul(w, simple_perm(i, n))
    return w


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(n)))


def longest_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


class Permutation:
    """Permutation of {1..n} in one-line notation."""

    __slots__ = ("w",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(i) for i in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"{images!r} is not a permutation of 1..{n}")
        self.w = tuple(i - 1 for i in imgs)

    @classmethod
    def _from0(cls, w: tuple[int, ...]) -> "Permutation":
        obj = object.__new__(cls)
        obj.w = w
        return obj

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._from0(tuple(range(n)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        return cls._from0(simple_perm(i, n))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> "Permutation":
        return cls._from0(perm_from_word(word, n))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls._from0(longest_perm(n))

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.w)

    def length(self) -> int:
        return perm_length(self.w)

    def reduced_word(self) -> tuple[int, ...]:
        return reduced_word(self.w)

    def inverse(self) -> "Permutation":
        return Permutation._from0(perm_inverse(self.w))

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise RankMismatch("permutations of different sizes")
        return Permutation._from0(perm_mul(self.w, other.w))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.w == other.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return f"Permutation{self.images}"


# ---------------------------------------------------------------------------
# S_n action and Demazure operators


def _check_index(j: int, n: int) -> None:
    if not 1 <= j <= n - 1:
        raise IndexOutOfRange(f"s_{j} / T_{j} not defined for n={n}")


def apply_transposition(j: int, f: ExtPolynomial) -> ExtPolynomial:
    _check_index(j, f.n)
    return f._wrap(kernels.transpose_terms(f.terms, j - 1, f.mod))


def apply_permutation(w: Permutation | Sequence[int], f: ExtPolynomial) -> ExtPolynomial:
    w0 = w.w if isinstance(w, Permutation) else tuple(w)
    if len(w0) != f.n:
        raise RankMismatch("permutation size differs from the rank")
    t = f.terms
    for j in reversed(reduced_word(w0)):
        t = kernels.transpose_terms(t, j - 1, f.mod)
    return f._wrap(t)


def demazure(j: int, f: ExtPolynomial) -> ExtPolynomial:
    _check_index(j, f.n)
    return f._wrap(kernels.demazure_terms(f.terms, j - 1, f.mod))


def demazure_word(word: Sequence[int], f: ExtPolynomial) -> ExtPolynomial:
    """T_{i1} T_{i2} ... T_{ik} (f), rightmost letter first."""
    t = f.terms
    for j in reversed(word):
        _check_index(j, f.n)
        t = kernels.demazure_terms(t, j - 1, f.mod)
    return f._wrap(t)


def demazure_by_division(j: int, f: ExtPolynomial) -> ExtPolynomial:
    """Oracle: divide f - s_j f by (x_j - x_{j+1}) per w-component, by long division."""
    _check_index(j, f.n)
    num = f - apply_transposition(j, f)
    out: dict[Key, object] = {}
    for m, comp in num.omega_components().items():
        quo = _divide_by_difference(comp, j - 1, f.mod)
        for e, c in quo.items():
            out[(e, m)] = c
    return f._wrap(_clean(out, f.mod))


def _divide_by_difference(poly: dict, j: int, mod: int) -> dict:
    """Exact quotient of poly by x_j - x_{j+1} (0-based j), lex order on (e_j, rest)."""
    rem = dict(poly)
    quo: dict = {}
    while rem:
        lead = max(rem, key=lambda e: (e[j], e))
        c = rem[lead]
        if lead[j] == 0:
            raise NonDivisible(f"remainder {rem} left when dividing by x{j+1}-x{j+2}")
        qe = list(lead)
        qe[j] -= 1
        qe = tuple(qe)
        quo[qe] = quo.get(qe, 0) + c
        sub = list(qe)
        sub[j + 1] += 1
        sub = tuple(sub)
        for e, v in ((lead, -c), (sub, c)):
            val = rem.get(e, 0) + v
            if mod:
                val %= mod
            if val:
                rem[e] = val
            else:
                rem.pop(e, None)
    return quo


# ---------------------------------------------------------------------------
# symmetric functions


@lru_cache(maxsize=None)
def _complete_terms(l: int, j: int, k: int, n: int) -> dict:
    out = {}
    for combo in itertools.combinations_with_replacement(range(j - 1, k), l):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out[(tuple(e), 0)] = 1
    return out


def complete_h(l: int, j: int, k: int, n: int, mod: int = 0) -> ExtPolynomial:
    """h_l in the variables x_j..x_k; h_0 = 1, h_l = 0 for l < 0."""
    if l < 0:
        return ExtPolynomial.zero(n, mod)
    if k < j:  # empty set of variables
        return ExtPolynomial.const(1, n, mod) if l == 0 else ExtPolynomial.zero(n, mod)
    if not (1 <= j and k <= n):
        raise IndexOutOfRange(f"variables x{j}..x{k} not in R_{n}")
    return ExtPolynomial(n, _complete_terms(l, j, k, n), mod)


def elementary_e(l: int, j: int, k: int, n: int, mod: int = 0) -> ExtPolynomial:
    """e_l in the variables x_j..x_k; e_0 = 1, e_l = 0 outside [0, k-j+1]."""
    if l == 0:
        return ExtPolynomial.const(1, n, mod)
    if l < 0 or k < j or l > k - j + 1:
        return ExtPolynomial.zero(n, mod)
    if not (1 <= j and k <= n):
        raise IndexOutOfRange(f"variables x{j}..x{k} not in R_{n}")
    out = {}
    for combo in itertools.combinations(range(j - 1, k), l):
        e = [0] * n
        for v in combo:
            e[v] = 1
        out[(tuple(e), 0)] = 1
    return ExtPolynomial(n, out, mod)


def labeled_omega(k: int, a: int, n: int, mod: int = 0) -> ExtPolynomial:
    """w_k^a = sum_{l=1..k} (-1)^(a+k+l) h_{a+l-k}(l, k) w_l."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"w{k} not in R_{n}")
    if a < 0:
        raise ValueError("label must be non-negative")
    out = ExtPolynomial.zero(n, mod)
    for l in range(1, k + 1):
        deg = a + l - k
        if deg < 0:
            continue
        sign = -1 if (a + k + l) % 2 else 1
        out = out + complete_h(deg, l, k, n, mod) * ExtPolynomial.w(l, n, mod) * sign
    return out


def is_invariant(f: ExtPolynomial) -> bool:
    return all(apply_transposition(j, f) == f for j in range(1, f.n))


# ---------------------------------------------------------------------------
# monomial spanning sets


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    if parts == 0:
        return ((),) if total == 0 else ()
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def monomial_keys(n: int, qmax: int, *, qmin: int | None = None,
                  masks: Iterable[int] | None = None, exact: bool = False) -> list[Key]:
    """All monomials x^b w_S of R_n with q-degree in [qmin, qmax] (or == qmax)."""
    out: list[Key] = []
    for m in (range(1 << n) if masks is None else masks):
        wdeg = 2 * sum(mask_indices(m))
        top = qmax + wdeg
        if top < 0:
            continue
        lo = 0 if qmin is None else max(0, qmin + wdeg)
        if exact:
            if top % 2:
                continue
            lo = top
        for d in range((lo + 1) // 2, top // 2 + 1):
            for e in compositions(d, n):
                out.append((e, m))
    return out


def spanning_monomials(n: int, qmax: int, mod: int = 0, **kw) -> list[ExtPolynomial]:
    return [ExtPolynomial(n, {k: 1}, mod, trusted=True) for k in monomial_keys(n, qmax, **kw)]


def tagged_batch(keys: Sequence[Key], n: int, mod: int = 0) -> ExtPolynomial:
    """Sum of the given monomials, each marked by a distinct power of an inert
    extra variable x_{n+1}.

    Operators that never touch x_{n+1} (multiplication by elements of R_n,
    s_j and T_j for j < n, derivations fixing x_{n+1}) act on the batch
    exactly as on each monomial separately, so two such operators agree on
    every listed monomial iff they agree on the batch.
    """
    return ExtPolynomial(n + 1, {(e + (t,), m): 1 for t, (e, m) in enumerate(keys)},
                         mod, trusted=True)


# ---------------------------------------------------------------------------
# decomposition over invariants


def staircase(n: int) -> list[tuple[int, ...]]:
    return list(itertools.product(*[range(n - i + 1) for i in range(1, n + 1)]))


def _sym_basis(n: int, qdeg: int, lam: int, mod: int) -> list[ExtPolynomial]:
    """Basis of the (qdeg, lam) slice of Sym_n (x) Lambda(w_n^0..w_n^{n-1})."""
    out = []
    wom = [labeled_omega(n, a, n, mod) for a in range(n)]
    k = lam // 2
    for labels in itertools.combinations(range(n), k):
        prod = ExtPolynomial.one(n, mod)
        wdeg = 0
        for a in labels:
            prod = prod * wom[a]
            wdeg += 2 * a - 2 * n
        rest = qdeg - wdeg
        if rest < 0 or rest % 2:
            continue
        for part in _partitions(rest // 2, n):
            mono = ExtPolynomial.one(n, mod)
            for i, cnt in enumerate(part, start=1):
                mono = mono * elementary_e(i, 1, n, n, mod) ** cnt
            out.append(mono * prod)
    return out


def _partitions(total: int, n: int) -> list[tuple[int, ...]]:
    """Exponent vectors (c_1..c_n) with sum i*c_i = total (monomials in e_1..e_n)."""
    res = []

    def rec(i: int, left: int, acc: list[int]):
        if i > n:
            if left == 0:
                res.append(tuple(acc))
            return
        for c in range(left // i + 1):
            rec(i + 1, left - i * c, acc + [c])

    rec(1, total, [])
    return res


def decompose_over_invariants(f: ExtPolynomial) -> dict[tuple[int, ...], ExtPolynomial]:
    """Write f = sum_b c_b x^b with x^b staircase and each c_b S_n-invariant."""
    n, mod = f.n, f.mod
    result: dict[tuple[int, ...], ExtPolynomial] = {}
    if f.is_zero():
        return result
    stairs = staircase(n)
    for (qd, lam), part in f.homogeneous_parts().items():
        columns: list[tuple[tuple[int, ...], ExtPolynomial, ExtPolynomial]] = []
        for b in stairs:
            xb = ExtPolynomial.monomial(b, (), 1, mod)
            for s in _sym_basis(n, qd - 2 * sum(b), lam, mod):
                columns.append((b, s, s * xb))
        keys = sorted({k for _, _, v in columns for k in v.terms} | set(part.terms))
        row = {k: i for i, k in enumerate(keys)}
        dom = GF(mod) if mod else QQ
        conv = (lambda c: dom(int(c))) if mod else (lambda c: dom(Fraction(c).numerator, Fraction(c).denominator))
        mat = [[dom(0)] * (len(columns) + 1) for _ in keys]
        for j, (_, _, v) in enumerate(columns):
            for k, c in v.terms.items():
                mat[row[k]][j] = conv(c)
        for k, c in part.terms.items():
            mat[row[k]][len(columns)] = conv(c)
        sol = _solve_augmented(DomainMatrix(mat, (len(keys), len(columns) + 1), dom), len(columns))
        if sol is None:
            raise SolveFailure(f"no decomposition found in bidegree {(qd, lam)}")
        for (b, s, _), c in zip(columns, sol):
            if c:
                val = int(c) % mod if mod else Fraction(int(c.numerator), int(c.denominator))
                result[b] = result.get(b, ExtPolynomial.zero(n, mod)) + s * val
    return {b: c for b, c in result.items() if c}


def _solve_augmented(aug: DomainMatrix, ncols: int):
    rref, pivots = aug.rref()
    if ncols in pivots:
        return None
    rows = rref.to_list()
    sol = [aug.domain.zero] * ncols
    for r, pc in enumerate(pivots):
        sol[pc] = rows[r][ncols]
    return sol


def reconstruct(parts: Mapping[tuple[int, ...], ExtPolynomial], n: int, mod: int = 0) -> ExtPolynomial:
    out = ExtPolynomial.zero(n, mod)
    for b, c in parts.items():
        out = out + c * ExtPolynomial.monomial(b, (), 1, mod)
    return out
