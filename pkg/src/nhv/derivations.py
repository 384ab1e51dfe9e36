"""Derivations of R_n and the ring maps between the R_n.

Every operator here is an even derivation, stored by its values on the
generators x_i and w_i (the w-images are linear in the w's) and extended to
monomials by the Leibniz rule in a single kernel pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from nhv import kernels
from nhv.extpoly import (
    ExtPolynomial, IndexOutOfRange, RankMismatch, apply_transposition, complete_h,
    demazure, elementary_e, is_invariant, labeled_omega, mask_indices, monomial_keys, tagged_batch,
    w as w_gen, x as x_gen,
)
from nhv.report import Report


# ---------------------------------------------------------------------------
# alpha coefficients


@lru_cache(maxsize=None)
def _alpha_cached(i: int, j: int, n: int) -> ExtPolynomial:
    out = ExtPolynomial.zero(n)
    for l in range(j, n + 1):
        xl = x_gen(l, n)
        term = xl * xl
        for k in range(i + 1, j):
            term = term * (x_gen(k, n) - xl)
        out = out + term
    return out


def alpha_poly(i: int, j: int, n: int, mod: int = 0) -> ExtPolynomial:
    """alpha_{i,j} = sum_{l=j..n} x_l^2 prod_{k=i+1..j-1} (x_k - x_l)."""
    if not 1 <= i < j <= n:
        raise IndexOutOfRange(f"alpha_({i},{j}) needs 1 <= i < j <= {n}")
    a = _alpha_cached(i, j, n)
    return a.reduce_mod(mod) if mod else a


def alpha_degree(i: int, j: int, n: int) -> int:
    """Measured q-degree of alpha_{i,j} (asserts homogeneity)."""
    deg = alpha_poly(i, j, n).bidegree()
    assert deg != "Inhomogeneous", f"alpha_({i},{j}) is not homogeneous"
    return deg[0]


# ---------------------------------------------------------------------------
# derivation specs


def _poly_image(f: ExtPolynomial) -> list:
    out = []
    for (e, m), c in f.terms.items():
        if m:
            raise ValueError("x-images must be polynomials")
        out.append((e, c))
    return out


def _omega_image(f: ExtPolynomial) -> list:
    out = []
    for (e, m), c in f.terms.items():
        if m.bit_count() != 1:
            raise ValueError("w-images must be linear in the w's")
        out.append((m.bit_length() - 1, e, c))
    return out


@dataclass
class DerivationSpec:
    """Named even derivation of R_n given by its generator images."""

    name: str
    n: int
    x_images: list[ExtPolynomial]
    w_images: list[ExtPolynomial]
    degree_shift: int | None = None
    _tables: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if len(self.x_images) != self.n or len(self.w_images) != self.n:
            raise RankMismatch("one image per generator is required")

    def _table(self, width: int):
        tab = self._tables.get(width)
        if tab is None:
            pad = (0,) * (width - self.n)
            xs = [[(e + pad, c) for e, c in _poly_image(f)] for f in self.x_images]
            ws = [[(j, e + pad, c) for j, e, c in _omega_image(f)] for f in self.w_images]
            xs.extend([] for _ in range(width - self.n))
            ws.extend([] for _ in range(width - self.n))
            tab = (xs, ws)
            self._tables[width] = tab
        return tab

    def __call__(self, f: ExtPolynomial) -> ExtPolynomial:
        return apply(self, f)

    def power(self, f: ExtPolynomial, k: int) -> ExtPolynomial:
        for _ in range(k):
            f = apply(self, f)
        return f

    def image(self, kind: str, i: int, mod: int = 0) -> ExtPolynomial:
        g = (self.x_images if kind == "x" else self.w_images)[i - 1]
        return g.reduce_mod(mod) if mod else g


def apply(spec: DerivationSpec, f: ExtPolynomial) -> ExtPolynomial:
    """Leibniz extension of the generator table of ``spec`` to ``f``.

    ``f`` may carry extra trailing variables (see ``tagged_batch``); the
    derivation kills them.
    """
    if f.n < spec.n:
        raise RankMismatch(f"derivation on R_{spec.n} applied to R_{f.n}")
    xs, ws = spec._table(f.n)
    return f._wrap(kernels.derive_terms(f.terms, xs, ws, f.mod))


def from_function(name: str, n: int, fn: Callable[[ExtPolynomial], ExtPolynomial],
                  degree_shift: int | None = None) -> DerivationSpec:
    return DerivationSpec(name, n,
                          [fn(x_gen(i, n)) for i in range(1, n + 1)],
                          [fn(w_gen(i, n)) for i in range(1, n + 1)], degree_shift)


def commutator(a: DerivationSpec, b: DerivationSpec, name: str | None = None) -> DerivationSpec:
    shift = None if a.degree_shift is None or b.degree_shift is None else a.degree_shift + b.degree_shift
    return from_function(name or f"[{a.name},{b.name}]", a.n, lambda g: apply(a, apply(b, g)) - apply(b, apply(a, g)),
                         shift)


def combination(parts: Sequence[tuple[int, DerivationSpec]], name: str) -> DerivationSpec:
    n = parts[0][1].n
    xs = [sum((c * s.x_images[i] for c, s in parts), ExtPolynomial.zero(n)) for i in range(n)]
    ws = [sum((c * s.w_images[i] for c, s in parts), ExtPolynomial.zero(n)) for i in range(n)]
    shifts = {s.degree_shift for _, s in parts}
    return DerivationSpec(name, n, xs, ws, shifts.pop() if len(shifts) == 1 else None)


@lru_cache(maxsize=None)
def dn_spec(n: int) -> DerivationSpec:
    xs = [x_gen(i, n) ** 2 for i in range(1, n + 1)]
    ws = []
    for i in range(1, n + 1):
        img = ExtPolynomial.zero(n)
        for j in range(i + 1, n + 1):
            img = img + alpha_poly(i, j, n) * w_gen(j, n)
        ws.append(img)
    return DerivationSpec("d", n, xs, ws, 2)


@lru_cache(maxsize=None)
def partial_omega(i: int, r: int, n: int) -> ExtPolynomial:
    """d/dx_r (w_i) = sum_{j=i+1..r} prod_{k=i+1..j-1} (x_k - x_r) w_j, zero for i >= r."""
    out = ExtPolynomial.zero(n)
    if i >= r:
        return out
    xr = x_gen(r, n)
    for j in range(i + 1, r + 1):
        term = w_gen(j, n)
        for k in range(i + 1, j):
            term = (x_gen(k, n) - xr) * term
        out = out + term
    return out


@lru_cache(maxsize=None)
def partial_spec(r: int, n: int) -> DerivationSpec:
    if not 1 <= r <= n:
        raise IndexOutOfRange(f"d/dx{r} not defined on R_{n}")
    xs = [ExtPolynomial.const(1 if i == r else 0, n) for i in range(1, n + 1)]
    ws = [partial_omega(i, r, n) for i in range(1, n + 1)]
    return DerivationSpec(f"d/dx{r}", n, xs, ws, -2)


@lru_cache(maxsize=None)
def weighted_partial_spec(r: int, n: int, k: int) -> DerivationSpec:
    """x_r^k * d/dx_r."""
    base = partial_spec(r, n)
    xr_k = x_gen(r, n) ** k
    return DerivationSpec(f"x{r}^{k}*d/dx{r}", n, [xr_k * g for g in base.x_images],
                          [xr_k * g for g in base.w_images], 2 * k - 2)


@lru_cache(maxsize=None)
def witt_spec(k: int, n: int) -> DerivationSpec:
    """l_k = sum_j x_j^(k+1) d/dx_j, k >= -1."""
    if k < -1:
        raise ValueError("Witt operators are defined for k >= -1")
    parts = [(1, weighted_partial_spec(r, n, k + 1)) for r in range(1, n + 1)]
    spec = combination(parts, f"l{k}")
    spec.degree_shift = 2 * k
    return spec


@lru_cache(maxsize=None)
def sl2_spec(which: str, n: int) -> DerivationSpec:
    if which == "e":
        s = combination([(1, witt_spec(1, n))], "e")
    elif which == "f":
        s = combination([(-1, witt_spec(-1, n))], "f")
    elif which == "h":
        s = combination([(2, witt_spec(0, n))], "h")
    else:
        raise ValueError(f"unknown sl2 generator {which!r}")
    return s


@lru_cache(maxsize=None)
def degq_spec(n: int) -> DerivationSpec:
    xs = [2 * x_gen(i, n) for i in range(1, n + 1)]
    ws = [-2 * i * w_gen(i, n) for i in range(1, n + 1)]
    return DerivationSpec("deg_q", n, xs, ws, 0)


@lru_cache(maxsize=None)
def sln_spec(which: str, i: int, n: int) -> DerivationSpec:
    """e_i = x_i d/dx_{i+1}, f_i = x_{i+1} d/dx_i, h_i = [e_i, f_i]."""
    if not 1 <= i < n:
        raise IndexOutOfRange(f"sl_{n} index {i} out of range")
    if which == "e":
        base, mult = partial_spec(i + 1, n), x_gen(i, n)
    elif which == "f":
        base, mult = partial_spec(i, n), x_gen(i + 1, n)
    elif which == "h":
        return commutator(sln_spec("e", i, n), sln_spec("f", i, n), f"h{i}")
    else:
        raise ValueError(f"unknown sl_n generator {which!r}")
    return DerivationSpec(f"{which}{i}", n, [mult * g for g in base.x_images],
                          [mult * g for g in base.w_images], 0)


def twisted_weights_preset(n: int) -> list[int]:
    """The weights alpha_i = i - n used for the d_+ twist (consecutive difference 1)."""
    return [i - n for i in range(1, n + 1)]


def apply_twisted(f: ExtPolynomial, alphas: Sequence[int], n: int | None = None) -> ExtPolynomial:
    """d on the module R_n.v with d(v) = (sum alpha_i x_i) v: d(f.v) = (d f + f g_alpha).v."""
    n = n if n is not None else len(alphas)
    g = ExtPolynomial.zero(f.n, f.mod)
    for i, a in enumerate(alphas, start=1):
        if a:
            g = g + ExtPolynomial.x(i, f.n, f.mod) * a
    return apply(dn_spec(n), f) + f * g


@dataclass
class TwistedDn:
    """d_n on R_n.v with weights alpha (not a derivation of R_n itself)."""

    alphas: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def a(self) -> int:
        diffs = {self.alphas[i + 1] - self.alphas[i] for i in range(len(self.alphas) - 1)}
        if len(diffs) > 1:
            raise ValueError("weights must be an arithmetic progression")
        return diffs.pop() if diffs else 0

    def __call__(self, f: ExtPolynomial) -> ExtPolynomial:
        return apply_twisted(f, self.alphas, self.n)


def get_spec(op: str, n: int) -> DerivationSpec:
    """Parse operator names: dn, partial:r, witt:k, e, f, h, degq, sln-e:i, sln-f:i, sln-h:i."""
    op = op.strip().lower()
    if op in ("dn", "d"):
        return dn_spec(n)
    if op in ("e", "f", "h"):
        return sl2_spec(op, n)
    if op in ("degq", "deg_q"):
        return degq_spec(n)
    if ":" in op:
        kind, _, arg = op.partition(":")
        k = int(arg)
        if kind == "partial":
            return partial_spec(k, n)
        if kind == "witt":
            return witt_spec(k, n)
        if kind in ("sln-e", "sln-f", "sln-h"):
            return sln_spec(kind[-1], k, n)
    raise ValueError(f"unknown operator {op!r}")


# ---------------------------------------------------------------------------
# ring homomorphisms


class RingHom:
    """Homomorphism R_m -> R_k given by images of x_i (even) and w_i (odd)."""

    def __init__(self, src: int, tgt: int, x_images: Sequence[ExtPolynomial],
                 w_images: Sequence[ExtPolynomial]):
        self.src, self.tgt = src, tgt
        self.x_images = list(x_images)
        self.w_images = list(w_images)
        self._xpow: dict = {}
        self._wmask: dict = {}

    def _x_power(self, i: int, k: int, mod: int) -> ExtPolynomial:
        key = (i, k, mod)
        v = self._xpow.get(key)
        if v is None:
            base = self.x_images[i]
            v = (base.reduce_mod(mod) if mod else base) ** k
            self._xpow[key] = v
        return v

    def _w_part(self, m: int, mod: int) -> ExtPolynomial:
        key = (m, mod)
        v = self._wmask.get(key)
        if v is None:
            v = ExtPolynomial.one(self.tgt, mod)
            for i in mask_indices(m):
                g = self.w_images[i - 1]
                v = v * (g.reduce_mod(mod) if mod else g)
            self._wmask[key] = v
        return v

    def __call__(self, f: ExtPolynomial) -> ExtPolynomial:
        if f.n != self.src:
            raise RankMismatch(f"map from R_{self.src} applied to R_{f.n}")
        out: dict = {}
        for (e, m), c in f.terms.items():
            piece = self._w_part(m, f.mod)
            for i, k in enumerate(e):
                if k:
                    piece = self._x_power(i, k, f.mod) * piece
            kernels.add_into(out, piece.terms, c)
        mod = f.mod
        out = {k: (v % mod if mod else v) for k, v in out.items()}
        return ExtPolynomial(self.tgt, {k: v for k, v in out.items() if v}, mod, trusted=True)


@lru_cache(maxsize=None)
def phi_prime_omega(i: int, n: int) -> ExtPolynomial:
    """phi'_n(w_i) = w_i - sum_{l=i+1..n+1} x_{n+1} prod_{j=i+1..l-1} (x_j - x_{n+1}) w_l in R_{n+1}."""
    N = n + 1
    xN = x_gen(N, N)
    out = w_gen(i, N)
    for l in range(i + 1, N + 1):
        term = xN * w_gen(l, N)
        for j in range(i + 1, l):
            term = (x_gen(j, N) - xN) * term
        out = out - term
    return out


@lru_cache(maxsize=None)
def phi_prime_hom(n: int) -> RingHom:
    N = n + 1
    return RingHom(n, N, [x_gen(i, N) for i in range(1, n + 1)],
                   [phi_prime_omega(i, n) for i in range(1, n + 1)])


def phi_prime(n: int, f: ExtPolynomial) -> ExtPolynomial:
    """phi'_n : R_n -> R_{n+1}."""
    return phi_prime_hom(n)(f)


def phi_prime_chain(m: int, n: int, f: ExtPolynomial) -> ExtPolynomial:
    """phi'_{m,n} = phi'_{n-1} o ... o phi'_m (identity when m == n)."""
    if m > n:
        raise ValueError("phi'_{m,n} needs m <= n")
    if f.n != m:
        raise RankMismatch(f"expected an element of R_{m}")
    for k in range(m, n):
        f = phi_prime(k, f)
    return f


def omega_map(n: int, i: int) -> ExtPolynomial:
    """Omega_n(w_i) = phi'_{i,n}(w_i)."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"w{i} not in R_{n}")
    return phi_prime_chain(i, n, w_gen(i, i))


# ---------------------------------------------------------------------------
# shift coefficients of (x^2 d/dx)^n


def shift_coeffs(n: int) -> dict[tuple[int, int], int]:
    """a_{j,k} for 1 <= j <= k <= n with (x^2 d)^k = sum_j a_{j,k} x^(k+j) d^j."""
    a: dict[tuple[int, int], int] = {}
    for k in range(1, n + 1):
        for j in range(1, k + 1):
            if j == 1:
                a[(j, k)] = math.factorial(k)
            elif j == k:
                a[(j, k)] = 1
            else:
                a[(j, k)] = a[(j - 1, k - 1)] + (k - 1 + j) * a[(j, k - 1)]
    return a


def shift_coeffs_check(n: int, mmax: int = 12) -> Report:
    """Compare both sides of the shift expansion on x^m, m <= mmax, in one variable."""
    rep = Report("shift_coeffs", {"n": n, "mmax": mmax})
    a = shift_coeffs(n)
    for k in range(1, n + 1):
        for m in range(mmax + 1):
            # (x^2 d)^k x^m = m (m+1) ... (m+k-1) x^(m+k)
            lhs = math.prod(range(m, m + k))
            rhs = sum(a[(j, k)] * math.perm(m, j) for j in range(1, k + 1))
            rep.add(f"k={k} m={m}", lhs, rhs)
    return rep.finish()


# ---------------------------------------------------------------------------
# verification sweeps


def _batch(n: int, D: int, mod: int = 0) -> ExtPolynomial:
    return tagged_batch(monomial_keys(n, D), n, mod)


def dn_as_partials_check(n: int, D: int = 10) -> Report:
    rep = Report("dn_as_partials", {"n": n, "D": D})
    f = _batch(n, D)
    lhs = apply(dn_spec(n), f)
    rhs = ExtPolynomial.zero(f.n)
    for r in range(1, n + 1):
        rhs = rhs + apply(weighted_partial_spec(r, n, 2), f)
    rep.add("d_n = sum_r x_r^2 d/dx_r on monomials", lhs == rhs, True,
            detail=f"{len(f)} monomials up to q-degree {D}")
    for i in range(1, n + 1):
        g = w_gen(i, n)
        r_side = sum((x_gen(r, n) ** 2 * apply(partial_spec(r, n), g) for r in range(1, n + 1)),
                     ExtPolynomial.zero(n))
        rep.add(f"d_n(w{i}) via partials", apply(dn_spec(n), g), r_side)
    return rep.finish()


def dt_commutation_check(n: int, D: int = 10) -> Report:
    """d(T_i f) = -(x_i + x_{i+1}) T_i f + T_i(d f) on monomials (v-untwisted model)."""
    rep = Report("dt_commutation", {"n": n, "D": D})
    f = _batch(n, D)
    d = dn_spec(n)
    for i in range(1, n):
        lhs = apply(d, demazure(i, f))
        s = (ExtPolynomial.x(i, f.n) + ExtPolynomial.x(i + 1, f.n))
        rhs = demazure(i, apply(d, f)) - s * demazure(i, f)
        rep.add(f"d T{i} - T{i} d = -(x{i}+x{i+1}) T{i}", lhs == rhs, True,
                detail=f"{len(f)} monomials")
    return rep.finish()


def dk_power_formula_check(n: int, kmax: int = 4) -> Report:
    rep = Report("dk_power_formula", {"n": n, "kmax": kmax})
    d = dn_spec(n)
    for i in range(1, n):
        wi, wi1 = w_gen(i, n), w_gen(i + 1, n)
        powers = [wi]
        for _ in range(kmax):
            powers.append(apply(d, powers[-1]))

        def dpow(k: int) -> ExtPolynomial:
            return wi if k <= 0 else powers[k]

        xi, xi1 = x_gen(i, n), x_gen(i + 1, n)
        for k in range(1, kmax + 1):
            lhs = d.power(wi1, k)
            rhs = (-k * (k - 1)) * (xi * xi1 * demazure(i, dpow(k - 2))) \
                + k * ((xi + xi1) * demazure(i, dpow(k - 1))) - demazure(i, dpow(k))
            rep.add(f"d^{k} w{i+1}", lhs, rhs)
    return rep.finish()


def nilpotency_check(p: int, n: int) -> Report:
    if n >= p:
        raise ValueError("p-nilpotency is claimed for n < p")
    rep = Report("nilpotency", {"p": p, "n": n})
    d = dn_spec(n)
    weighted = [weighted_partial_spec(r, n, 2) for r in range(1, n + 1)]
    gens = [("x", i, x_gen(i, n, p)) for i in range(1, n + 1)] + \
           [("w", i, w_gen(i, n, p)) for i in range(1, n + 1)]
    for kind, i, g in gens:
        dp = d.power(g, p)
        rep.add(f"d^{p}({kind}{i})", dp, ExtPolynomial.zero(n, p))
        collapse = ExtPolynomial.zero(n, p)
        for s in weighted:
            collapse = collapse + s.power(g, p)
        rep.add(f"d^{p}({kind}{i}) = sum_r (x_r^2 d/dx_r)^{p}({kind}{i})", dp, collapse)
    return rep.finish()


def equivariance_check(n: int, D: int = 10) -> Report:
    rep = Report("dn_equivariance", {"n": n, "D": D})
    f = _batch(n, D)
    d = dn_spec(n)
    for j in range(1, n):
        lhs = apply_transposition(j, apply(d, f))
        rhs = apply(d, apply_transposition(j, f))
        rep.add(f"s{j} d = d s{j}", lhs == rhs, True, detail=f"{len(f)} monomials")
    return rep.finish()


def alpha_relations_check(n: int) -> Report:
    rep = Report("alpha_relations", {"n": n})
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            a = alpha_poly(i, j, n)
            rep.add(f"deg alpha_({i},{j})", alpha_degree(i, j, n), 2 * (j - i) + 2,
                    detail="measured q-degree")
            if j == i + 1:
                rep.add(f"T{i}(alpha_({i},{j}))", demazure(i, a), -(x_gen(i, n) + x_gen(i + 1, n)))
            else:
                rep.add(f"T{i}(alpha_({i},{j}))", demazure(i, a), -alpha_poly(i + 1, j, n))
            if j < n:
                b = alpha_poly(i, j + 1, n)
                rep.add(f"T{j}(alpha_({i},{j+1}))", demazure(j, b), a)
                for l in range(1, n):
                    if l not in (i, j):
                        rep.add(f"s{l}(alpha_({i},{j+1}))", apply_transposition(l, b), b)
            # elementary-symmetric form
            alt = ExtPolynomial.zero(n)
            for l in range(j, n + 1):
                xl = x_gen(l, n)
                inner = ExtPolynomial.zero(n)
                for k in range(j - i):
                    inner = inner + ((-1) ** k) * elementary_e(j - i - 1 - k, i + 1, j - 1, n) * xl ** k
                alt = alt + xl * xl * inner
            rep.add(f"alpha_({i},{j}) elementary form", a, alt)
            # recursive form
            d = dn_spec(n)
            rec = ((-1) ** (j - i - 1)) * apply(d, complete_h(j - i, j, n, n))
            for s in range(1, j - i):
                rec = rec + ((-1) ** (s - 1)) * complete_h(s, i + s, n, n) * alpha_poly(i + s, j, n)
            rep.add(f"alpha_({i},{j}) recursive form", a, rec)
    d = dn_spec(n)
    for i in range(1, n):
        lhs = apply(d, w_gen(i + 1, n))
        rhs = -(x_gen(i, n) + x_gen(i + 1, n)) * w_gen(i + 1, n) - demazure(i, apply(d, w_gen(i, n)))
        rep.add(f"d(w{i+1}) recursion", lhs, rhs)
    return rep.finish()


def partials_check(n: int, D: int = 10) -> Report:
    rep = Report("partials", {"n": n, "D": D})
    f = _batch(n, D)
    parts = [partial_spec(r, n) for r in range(1, n + 1)]
    for r in range(1, n + 1):
        for s in range(r + 1, n + 1):
            lhs = apply(parts[r - 1], apply(parts[s - 1], f))
            rhs = apply(parts[s - 1], apply(parts[r - 1], f))
            rep.add(f"d/dx{r} d/dx{s} = d/dx{s} d/dx{r}", lhs == rhs, True, detail=f"{len(f)} monomials")
    for r in range(1, n + 1):
        for i in range(1, n + 1):
            g = w_gen(i, n)
            rep.add(f"(d/dx{r})^2 w{i}", apply(parts[r - 1], apply(parts[r - 1], g)), ExtPolynomial.zero(n))
            if i < n:
                rhs = w_gen(i + 1, n) + (x_gen(i + 1, n) - x_gen(r, n)) * apply(parts[r - 1], w_gen(i + 1, n)) \
                    if i < r else ExtPolynomial.zero(n)
                rep.add(f"d/dx{r}(w{i}) recursion", apply(parts[r - 1], g), rhs)
    rep.extend(dn_as_partials_check(n, D))
    return rep.finish()


def witt_check(n: int, D: int = 12, ks: Sequence[int] = range(-1, 4)) -> Report:
    rep = Report("witt", {"n": n, "D": D})
    f = _batch(n, D)
    cache = {k: apply(witt_spec(k, n), f) for k in ks}
    for k in ks:
        for r in ks:
            if r <= k or k + r < -1:
                continue
            lhs = apply(witt_spec(k, n), cache[r]) - apply(witt_spec(r, n), cache[k])
            rhs = (r - k) * apply(witt_spec(k + r, n), f)
            rep.add(f"[l{k},l{r}] = {r-k} l{k+r}", lhs == rhs, True, detail=f"{len(f)} monomials")
    return rep.finish()


def sl2_relations_check(n: int, D: int = 12) -> Report:
    rep = Report("sl2_gl2", {"n": n, "D": D})
    f = _batch(n, D)
    e, ff, h, dq = sl2_spec("e", n), sl2_spec("f", n), sl2_spec("h", n), degq_spec(n)

    def br(a, b):
        return apply(a, apply(b, f)) - apply(b, apply(a, f))

    rep.add("[e,f] = h", br(e, ff) == apply(h, f), True)
    rep.add("[h,e] = 2e", br(h, e) == 2 * apply(e, f), True)
    rep.add("[h,f] = -2f", br(h, ff) == -2 * apply(ff, f), True)
    rep.add("[deg_q,e] = 2e", br(dq, e) == 2 * apply(e, f), True)
    rep.add("[deg_q,f] = -2f", br(dq, ff) == -2 * apply(ff, f), True)
    rep.add("[deg_q,h] = 0", br(dq, h).is_zero(), True)
    # deg_q multiplies each homogeneous piece by its q-degree
    ok = all(apply(dq, part) == qd * part for (qd, _), part in _unbatched_parts(f, n))
    rep.add("deg_q acts by the q-degree", ok, True)
    return rep.finish()


def _unbatched_parts(f: ExtPolynomial, n: int):
    for (e, m), c in f.terms.items():
        mono = ExtPolynomial(f.n, {(e, m): c}, f.mod, trusted=True)
        yield (2 * sum(e[:n]) - 2 * sum(mask_indices(m)), 0), mono


def phi_prime_check(n: int, D: int = 8) -> Report:
    """d-equivariance of phi'_n on generators and injectivity per bidegree slice."""
    from nhv.linalg import rank_of_vectors

    rep = Report("phi_prime", {"n": n, "D": D})
    d_src, d_tgt = dn_spec(n), dn_spec(n + 1)
    for kind, i in [("x", i) for i in range(1, n + 1)] + [("w", i) for i in range(1, n + 1)]:
        g = x_gen(i, n) if kind == "x" else w_gen(i, n)
        rep.add(f"phi'_{n}(d {kind}{i}) = d phi'_{n}({kind}{i})",
                phi_prime(n, apply(d_src, g)), apply(d_tgt, phi_prime(n, g)))
    keys = monomial_keys(n, D)
    slices: dict = {}
    for k in keys:
        slices.setdefault((2 * sum(k[0]) - 2 * sum(mask_indices(k[1])), k[1].bit_count()), []).append(k)
    injective = True
    for sk, ks in slices.items():
        imgs = [phi_prime(n, ExtPolynomial(n, {k: 1}, trusted=True)).terms for k in ks]
        if rank_of_vectors(imgs) != len(ks):
            injective = False
    rep.add(f"phi'_{n} injective on slices up to q-degree {D}", injective, True,
            detail=f"{len(slices)} slices")
    return rep.finish()


def omega_check(nmax: int = 6) -> Report:
    rep = Report("omega_map", {"nmax": nmax})
    for n in range(1, nmax + 1):
        d = dn_spec(n)
        for i in range(1, n + 1):
            om = omega_map(n, i)
            rep.add(f"Omega_{n}(w{i}) = w_{n}^{n-i}", om, labeled_omega(n, n - i, n))
            rep.add(f"d_{n}(Omega_{n}(w{i})) = 0", apply(d, om), ExtPolynomial.zero(n))
            rep.add(f"Omega_{n}(w{i}) invariant", is_invariant(om), True)
    return rep.finish()


def hs_lemma_check(nmax: int = 5, lmax: int = 5) -> Report:
    """(x_m - x_n) h_{l-1}(m, n) + h_l(m+1, n) - h_l(m, n-1) = 0."""
    rep = Report("lemma_hs", {"nmax": nmax, "lmax": lmax})
    N = nmax
    for n in range(2, nmax + 1):
        for m in range(1, n):
            for l in range(0, lmax + 1):
                lhs = (x_gen(m, N) - x_gen(n, N)) * complete_h(l - 1, m, n, N) \
                    + complete_h(l, m + 1, n, N) - complete_h(l, m, n - 1, N)
                rep.add(f"hs m={m} n={n} l={l}", lhs, ExtPolynomial.zero(N))
    return rep.finish()


def hs1_lemma_check(nmax: int = 5, mmax: int = 5) -> Report:
    """sum_{s=0..m} (-1)^s h_s(q+s, n) prod_{j=q+1+s..q+m} (x_j - x_{n+1}) = (-1)^m h_m(q+m+1, n+1)."""
    rep = Report("lemma_hs1", {"nmax": nmax, "mmax": mmax})
    for n in range(1, nmax + 1):
        N = n + 1
        for m in range(1, mmax + 1):
            for q in range(1, n - m + 1):
                lhs = ExtPolynomial.zero(N)
                for s in range(m + 1):
                    term = ((-1) ** s) * complete_h(s, q + s, n, N)
                    for j in range(q + 1 + s, q + m + 1):
                        term = term * (x_gen(j, N) - x_gen(N, N))
                    lhs = lhs + term
                rhs = ((-1) ** m) * complete_h(m, q + m + 1, N, N)
                rep.add(f"hs1 n={n} m={m} q={q}", lhs, rhs)
    return rep.finish()


def alpha_chain(i: int, j: int, n: int) -> ExtPolynomial:
    """alpha_{i,j} = (-1)^(i-1) T_j ... T_{n-1} T_{i-1} ... T_1 (alpha_{1,n})."""
    f = alpha_poly(1, n, n)
    for k in range(1, i):
        f = demazure(k, f)
    for k in range(n - 1, j - 1, -1):
        f = demazure(k, f)
    return f if i % 2 else -f


def alpha_table(n: int) -> Report:
    """All alpha_{i,j} and d_n(w_i), each against an independent computation."""
    rep = Report("alpha", {"n": n})
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            rep.add(f"alpha_({i},{j})", alpha_poly(i, j, n), alpha_chain(i, j, n),
                    detail=f"q-degree {alpha_degree(i, j, n)}")
    for i in range(1, n + 1):
        g = w_gen(i, n)
        via_partials = sum((x_gen(r, n) ** 2 * apply(partial_spec(r, n), g) for r in range(1, n + 1)),
                           ExtPolynomial.zero(n))
        rep.add(f"d_{n}(w{i})", apply(dn_spec(n), g), via_partials)
    return rep.finish()
