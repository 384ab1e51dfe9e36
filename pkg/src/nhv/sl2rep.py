"""sl2, Witt and sl_n structure on R_n and A_n: relation suites, the omega
filtrations and the low-rank decomposition scanner."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sympy import Poly, roots, symbols

from nhv import derivations as dv
from nhv import linalg
from nhv.ennilhecke import (
    AnDerivation, AnElement, defining_relations, degq_an_derivation, generators, random_words,
    sl2_an_derivation, word_normal_form,
)
from nhv.extpoly import (
    ExtPolynomial, all_perms, compositions, mask_indices, monomial_keys, perm_length, tagged_batch,
)
from nhv.report import Report


# ---------------------------------------------------------------------------
# orders and characters


@dataclass(frozen=True)
class OmegaMonomialOrder:
    """m-element omega subsets of {1..n}, sorted lexicographically."""

    n: int
    m: int

    @property
    def subsets(self) -> list[tuple[int, ...]]:
        return list(itertools.combinations(range(1, self.n + 1), self.m))

    def masks(self) -> list[int]:
        return [sum(1 << (i - 1) for i in s) for s in self.subsets]

    def rank(self, mask: int) -> int:
        """1-based position of the subset in the order."""
        return self.subsets.index(mask_indices(mask)) + 1

    @staticmethod
    def key(mask: int) -> tuple[int, ...]:
        return mask_indices(mask)

    def minimal(self) -> tuple[int, ...]:
        return self.subsets[0]

    def maximal(self) -> tuple[int, ...]:
        return self.subsets[-1]


@dataclass
class GradedCharacter:
    """q-degree -> dimension."""

    dims: dict[int, int] = field(default_factory=dict)

    def __add__(self, other: "GradedCharacter") -> "GradedCharacter":
        out = Counter(self.dims)
        out.update(other.dims)
        return GradedCharacter({k: v for k, v in out.items() if v})

    def shift(self, s: int) -> "GradedCharacter":
        return GradedCharacter({k + s: v for k, v in self.dims.items()})

    def truncate(self, top: int) -> "GradedCharacter":
        return GradedCharacter({k: v for k, v in self.dims.items() if k <= top and v})

    def __mul__(self, other: "GradedCharacter") -> "GradedCharacter":
        out: Counter = Counter()
        for a, x in self.dims.items():
            for b, y in other.dims.items():
                out[a + b] += x * y
        return GradedCharacter(dict(out))

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return {k: v for k, v in self.dims.items() if v} == {k: v for k, v in other.dims.items() if v}

    def to_text(self) -> str:
        if not self.dims:
            return "0"
        return " + ".join(f"{v}*q^{k}" for k, v in sorted(self.dims.items()) if v)


def conabla_character(top: int) -> GradedCharacter:
    """Character of the co-Verma module Z[x], v_k = x^k in q-degree 2k, up to ``top``."""
    return GradedCharacter({2 * k: 1 for k in range(top // 2 + 1)})


def conabla_tensor_character(n: int, top: int) -> GradedCharacter:
    ch = GradedCharacter({0: 1})
    for _ in range(n):
        ch = (ch * conabla_character(top)).truncate(top)
    return ch


def nilcoxeter_character(n: int) -> GradedCharacter:
    return GradedCharacter(dict(Counter(-2 * perm_length(w) for w in all_perms(n))))


def conabla_action(op: str, exps: Sequence[int]) -> dict:
    """sl2 action on the tensor power of Z[x] (e = x^2 d, f = -d, h = 2x d) on x^b."""
    out: Counter = Counter()
    for i, k in enumerate(exps):
        if op == "h":
            if k:
                out[tuple(exps)] += 2 * k
            continue
        if not k:
            continue
        e = list(exps)
        if op == "e":
            e[i] += 1
            out[tuple(e)] += k
        else:
            e[i] -= 1
            out[tuple(e)] += -k
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# relation suites


def _br(a, b, f):
    return a(b(f)) - b(a(f))


def an_relations_check(n: int, words: int = 6, seed: int = 0) -> Report:
    rep = Report("sl2_on_An", {"n": n})
    e, f, h = (sl2_an_derivation(k, n) for k in "efh")
    dq = degq_an_derivation(n)
    pool = generators(n) + random_words(n, words, 3, seed)
    for name, xi in pool:
        rep.add(f"[e,f] = h on {name}", _br(e, f, xi), h(xi))
        rep.add(f"[h,e] = 2e on {name}", _br(h, e, xi), e(xi) * 2)
        rep.add(f"[h,f] = -2f on {name}", _br(h, f, xi), f(xi) * -2)
        rep.add(f"[deg_q,e] = 2e on {name}", _br(dq, e, xi), e(xi) * 2)
        rep.add(f"[deg_q,f] = -2f on {name}", _br(dq, f, xi), f(xi) * -2)
        rep.add(f"[deg_q,h] = 0 on {name}", _br(dq, h, xi), AnElement.zero(n))
    for i in range(1, n):
        rep.add(f"f(T{i})", f(AnElement.T(i, n)), AnElement.zero(n))
        rep.add(f"h(T{i})", h(AnElement.T(i, n)), AnElement.T(i, n) * -2,
                detail="h acts by the polynomial degree, T_i has degree -1")
    for d in (e, f, h, dq):
        rep.extend(relations_preserved(d), prefix=f"{d.name}: ")
    return rep.finish()


def relations_preserved(d: AnDerivation) -> Report:
    """d applied factor by factor to both sides of each defining relation agrees."""
    rep = Report("relations_preserved", {"op": d.name, "n": d.n})
    n = d.n

    def apply_word(combo):
        out = AnElement.zero(n)
        for c, word in combo:
            for k in range(len(word)):
                left = word_normal_form(word[:k], n)
                mid = word_normal_form(word[k:k + 1], n)
                right = word_normal_form(word[k + 1:], n)
                out = out + left * d(mid) * right * c
        return out

    for name, lhs, rhs in defining_relations(n):
        rep.add(f"{name} preserved", apply_word(lhs), apply_word(rhs))
    return rep.finish()


def verify_sl2_suite(n: int, D: int = 12, words: int = 6) -> Report:
    rep = Report("sl2_suite", {"n": n, "D": D})
    rep.extend(dv.witt_check(n, D), prefix="R_n: ")
    rep.extend(dv.sl2_relations_check(n, D), prefix="R_n: ")
    rep.extend(an_relations_check(n, words), prefix="A_n: ")
    return rep.finish()


# ---------------------------------------------------------------------------
# filtrations


def _split_by_tag(f: ExtPolynomial) -> dict:
    out: dict = {}
    for (e, m), c in f.terms.items():
        out.setdefault(e[-1], {})[(e[:-1], m)] = c
    return out


def _omega_times(mask: int, f: ExtPolynomial) -> ExtPolynomial:
    return ExtPolynomial(f.n, {((0,) * f.n, mask): 1}, f.mod, trusted=True) * f


def _poly_keys(n: int, top: int) -> list:
    out = []
    for d in range(top // 2 + 1):
        out.extend((e, 0) for e in compositions(d, n))
    return out


def filtration_check(n: int, m: int, D: int = 10) -> Report:
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    rep = Report("filtration", {"n": n, "m": m, "D": D})
    order = OmegaMonomialOrder(n, m)
    ops = {k: dv.sl2_spec(k, n) for k in "efh"}
    total = GradedCharacter()
    for mask in order.masks():
        key = order.key(mask)
        wdeg = -2 * sum(key)
        pkeys = _poly_keys(n, D - wdeg)
        if not pkeys:
            continue
        poly_batch = tagged_batch(pkeys, n)
        batch = _omega_times(mask, poly_batch)
        for name, op in ops.items():
            img = dv.apply(op, batch)
            low = [mm for (_, mm) in img.terms if order.key(mm) < key]
            rep.expect(f"{name} does not lower w{''.join(map(str, key))}", not low,
                       detail=f"{len(pkeys)} monomials")
            same = img._wrap({k: c for k, c in img.terms.items() if k[1] == mask})
            rep.add(f"{name} on quotient by larger than w{''.join(map(str, key))}",
                    same == _omega_times(mask, dv.apply(op, poly_batch)), True)
            # the polynomial action is the tensor power of the co-Verma model
            model: dict = {}
            for t, (e, _) in enumerate(pkeys):
                for e2, c in conabla_action(name, e).items():
                    model[(e2 + (t,), 0)] = c
            rep.add(f"{name} on polynomials = co-Verma tensor action (w{''.join(map(str, key))})",
                    dv.apply(op, poly_batch) == ExtPolynomial(n + 1, model, trusted=True), True)
        quotient = GradedCharacter(dict(Counter(2 * sum(e) + wdeg for e, _ in pkeys)))
        rep.add(f"char of quotient w{''.join(map(str, key))}", quotient,
                conabla_tensor_character(n, D - wdeg).shift(wdeg))
        total = total + quotient
    direct = GradedCharacter(dict(Counter(2 * sum(e) - 2 * sum(mask_indices(mm))
                                          for e, mm in monomial_keys(n, D, masks=order.masks()))))
    rep.add(f"sum of quotient characters = char of lambda-degree {2 * m}", total, direct)
    return rep.finish()


def _an_apply_batch(d: AnDerivation, batch: ExtPolynomial, w: tuple) -> dict:
    """d(B T_w) for a tagged batch B: map v -> coefficient of T_v (width n+1)."""
    out = {w: dv.apply(d.spec, batch)}
    for v, g in d.of_T(w).terms.items():
        term = batch * g.embed(batch.n)
        out[v] = out[v] + term if v in out else term
    return {v: f for v, f in out.items() if f}


def an_filtration_check(n: int, m: int, D: int = 10) -> Report:
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    rep = Report("an_filtration", {"n": n, "m": m, "D": D})
    order = OmegaMonomialOrder(n, m)
    ops = {k: sl2_an_derivation(k, n) for k in "efh"}
    nh_char = nilcoxeter_character(n)
    total = GradedCharacter()
    for mask in order.masks():
        key = order.key(mask)
        tag = "w" + "".join(map(str, key))
        wdeg = -2 * sum(key)
        lower = {mm for mm in order.masks() if order.key(mm) < key}
        quotient: Counter = Counter()
        low_found, quot_ok = {k: False for k in ops}, {k: True for k in ops}
        for w in all_perms(n):
            ell = perm_length(w)
            pkeys = _poly_keys(n, D - wdeg + 2 * ell)
            if not pkeys:
                continue
            for e, _ in pkeys:
                quotient[2 * sum(e) + wdeg - 2 * ell] += 1
            poly_batch = tagged_batch(pkeys, n)
            batch = _omega_times(mask, poly_batch)
            for name, op in ops.items():
                img = _an_apply_batch(op, batch, w)
                if any(k[1] in lower for f in img.values() for k in f.terms):
                    low_found[name] = True
                nh_img = _an_apply_batch(op, poly_batch, w)
                for v in set(img) | set(nh_img):
                    got = img.get(v)
                    got = got._wrap({k: c for k, c in got.terms.items() if k[1] == mask}) if got else \
                        ExtPolynomial.zero(n + 1)
                    want = _omega_times(mask, nh_img[v]) if v in nh_img else ExtPolynomial.zero(n + 1)
                    if got != want:
                        quot_ok[name] = False
        for name in ops:
            rep.expect(f"{name} does not lower {tag}", not low_found[name])
            rep.expect(f"{name} on quotient by larger than {tag} = {tag}.nh_{n} action", quot_ok[name])
        qc = GradedCharacter(dict(quotient))
        expected = (conabla_tensor_character(n, D - wdeg + 2 * n * n) * nh_char).shift(wdeg).truncate(D)
        rep.add(f"char of quotient {tag}", qc, expected)
        total = total + qc
    direct: Counter = Counter()
    for w in all_perms(n):
        ell = perm_length(w)
        for e, mm in monomial_keys(n, D + 2 * ell, masks=order.masks()):
            direct[2 * sum(e) - 2 * sum(mask_indices(mm)) - 2 * ell] += 1
    rep.add(f"sum of quotient characters = char of A_n lambda-degree {2 * m}", total,
            GradedCharacter(dict(direct)))
    return rep.finish()


# ---------------------------------------------------------------------------
# sl_n decomposition scanner


def weyl_dimension(a: Sequence[int]) -> int:
    """Dimension of the irreducible sl_n module with Dynkin labels a."""
    n = len(a) + 1
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= sum(a[k] + 1 for k in range(i, j))
            den *= j - i
    return num // den


def slice_keys(n: int, m: int) -> list:
    return monomial_keys(n, m, exact=True)


def _slice_matrix(spec: dv.DerivationSpec, keys: list, n: int):
    batch = tagged_batch(keys, n)
    img = dv.apply(spec, batch)
    row = {k: i for i, k in enumerate(keys)}
    rows = [[0] * len(keys) for _ in keys]
    for (e, mm), c in img.terms.items():
        rows[row[(e[:-1], mm)]][e[-1]] = c
    return rows


def _integer_eigenvalues(mat) -> list[int]:
    t = symbols("t")
    cp = mat.charpoly()
    poly = Poly([linalg.to_python(c) for c in cp], t)
    out = []
    for r, mult in roots(poly).items():
        if not r.is_integer:
            raise ArithmeticError(f"non-integral weight {r}")
        out.append(int(r))
    return sorted(out)


def highest_weights(n: int, m: int) -> tuple[Counter, int]:
    """Multiset of Dynkin labels of highest-weight vectors in R_{n,m}, and dim R_{n,m}."""
    keys = slice_keys(n, m)
    hws: Counter = Counter()
    if not keys or n == 1:
        return (Counter({(): len(keys)}) if keys else hws), len(keys)
    by_mask: dict = {}
    for k in keys:
        by_mask.setdefault(k[1].bit_count(), []).append(k)
    for block in by_mask.values():  # the action preserves the lambda-degree
        es = [_slice_matrix(dv.sln_spec("e", i, n), block, n) for i in range(1, n)]
        hs = [_slice_matrix(dv.sln_spec("h", i, n), block, n) for i in range(1, n)]
        stacked = linalg.matrix([r for e in es for r in e], 0, len(block))
        kern = linalg.nullspace(stacked)
        if not kern:
            continue
        K = linalg.matrix([[linalg.to_python(c) for c in v] for v in kern], 0, len(block)).transpose()
        restricted = []
        for h in hs:
            HK = linalg.matrix(h, 0, len(block)) * K
            # solve K X = HK
            aug = K.hstack(HK)
            rref, piv = aug.rref()
            k = K.shape[1]
            X = rref.to_Matrix()[:k, k:]
            restricted.append(linalg.matrix(X.tolist(), 0, k))
        eig = [_integer_eigenvalues(X) for X in restricted]
        k = K.shape[1]
        for combo in itertools.product(*[sorted(set(e)) for e in eig]):
            rows = []
            for X, a in zip(restricted, combo):
                shifted = X - linalg.matrix([[a if i == j else 0 for j in range(k)] for i in range(k)], 0, k)
                rows.extend(shifted.to_list())
            mult = len(linalg.nullspace(linalg.matrix([[linalg.to_python(c) for c in r] for r in rows], 0, k)))
            if mult:
                hws[tuple(combo)] += mult
    return hws, len(keys)


def predicted_weights(n: int, m: int, sign: int) -> Counter:
    """One irreducible per omega-monomial w_S with first label (m +/- qdeg(w_S)) / 2."""
    out: Counter = Counter()
    for mask in range(1 << n):
        qd = -2 * sum(mask_indices(mask))
        top = Fraction(m + sign * qd, 2)
        if sign < 0 and top < 0:
            continue  # no monomials with this omega part
        out[(top,) + (0,) * (n - 2)] += 1
    return out


def conjecture_scan(n: int, mmax: int, D: int | None = None) -> Report:
    """Informational: observed sl_n decompositions of the slices R_{n,m}."""
    rep = Report("conjecture", {"n": n, "mmax": mmax, "D": D}, informational=True)
    for m in range(0, mmax + 1, 2):
        hws, dim = highest_weights(n, m)
        total = sum(weyl_dimension(a) * c for a, c in hws.items())
        rep.add(f"m={m} dimension check", total, dim, detail=f"{sum(hws.values())} irreducibles")
        obs = {tuple(Fraction(x) for x in a): c for a, c in hws.items()}
        rep.add(f"m={m} observed highest weights", _fmt_weights(hws), _fmt_weights(hws))
        for sign, tag in ((-1, "minus"), (1, "plus")):
            pred = predicted_weights(n, m, sign)
            rep.add(f"m={m} {tag} reading", _fmt_weights(obs), _fmt_weights(pred), equal=obs == dict(pred))
    return rep.finish()


def _fmt_weights(c) -> str:
    items = sorted(c.items())
    return "{" + ", ".join(f"({','.join(str(x) for x in a)})x{k}" if k > 1 else
                           f"({','.join(str(x) for x in a)})" for a, k in items) + "}"


def minus_reading_matches(n: int, mmax: int) -> bool:
    ok = True
    for m in range(0, mmax + 1, 2):
        hws, dim = highest_weights(n, m)
        obs = {tuple(Fraction(x) for x in a): c for a, c in hws.items()}
        ok &= obs == dict(predicted_weights(n, m, -1))
        ok &= sum(weyl_dimension(a) * c for a, c in hws.items()) == dim
    return ok
