"""Decategorified layer: K0 of the tower A_0, ..., A_{p-1}, the baby Verma module,
and the categorified E class from weighted-shift filtrations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from nhv.coeff_rings import QLambda, is_prime, q_minus_qinv_inverse, quantum_int
from nhv.ennilhecke import AnElement, d_a_apply, sigma
from nhv.extpoly import ExtPolynomial, perm_inverse, perm_length
from nhv.pcomplex import Block, k0_symbol, weighted_shift_blocks
from nhv.report import Report


def _check_p(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def lam(p: int, k: int = 1, qexp: int = 0) -> QLambda:
    return QLambda.monomial(p, k, qexp)


def qpow(p: int, k: int) -> QLambda:
    return QLambda.monomial(p, 0, k)


def q_minus_qinv(p: int) -> QLambda:
    return qpow(p, 1) - qpow(p, -1)


@dataclass(frozen=True)
class _Vec:
    p: int
    coords: tuple

    @classmethod
    def zero(cls, p: int):
        return cls(p, tuple(QLambda.zero(p) for _ in range(p)))

    @classmethod
    def basis(cls, p: int, i: int):
        c = [QLambda.zero(p)] * p
        c[i] = QLambda.one(p)
        return cls(p, tuple(c))

    def __add__(self, other):
        return type(self)(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return type(self)(self.p, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c: QLambda):
        return type(self)(self.p, tuple(c * a for a in self.coords))

    def __eq__(self, other):
        return type(self) is type(other) and self.p == other.p and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.p, self.coords))

    def to_text(self, sym: str = "e") -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if c:
                t = c.to_text()
                parts.append(f"({t})*{sym}{i}" if t != "1" else f"{sym}{i}")
        return " + ".join(parts) if parts else "0"


class K0Vector(_Vec):
    """Coordinates in the basis [A_0], ..., [A_{p-1}]."""

    def to_text(self) -> str:
        return _Vec.to_text(self, "A")


class VermaVector(_Vec):
    """Coordinates in the basis m_0, ..., m_{p-1}."""

    def to_text(self) -> str:
        return _Vec.to_text(self, "m")


# ---------------------------------------------------------------------------
# K0 model


def e_coefficient(p: int, n: int) -> QLambda:
    """[n](l q^-n - l^-1 q^n)."""
    return QLambda.scalar(quantum_int(n, p)) * (lam(p, 1, -n) - lam(p, -1, n))


def k0_E(v: K0Vector) -> K0Vector:
    p = v.p
    out = [QLambda.zero(p)] * p
    for n in range(1, p):
        out[n - 1] = out[n - 1] + e_coefficient(p, n) * v.coords[n]
    return K0Vector(p, tuple(out))


def k0_F(v: K0Vector) -> K0Vector:
    p = v.p
    out = [QLambda.zero(p)] * p
    for n in range(p - 1):
        out[n + 1] = v.coords[n]
    return K0Vector(p, tuple(out))


def k0_K(v: K0Vector, sign: int = 1) -> K0Vector:
    """K[A_n] = l q^(-2n-1) [A_n]; sign = -1 gives the inverse."""
    p = v.p
    out = []
    for n, c in enumerate(v.coords):
        out.append(lam(p, sign, sign * (-2 * n - 1)) * c)
    return K0Vector(p, tuple(out))


# ---------------------------------------------------------------------------
# baby Verma model


def default_hw(p: int) -> QLambda:
    """Highest weight l q^-1, the one matched by K0."""
    return lam(p, 1, -1)


def _hw_inverse(hw: QLambda) -> QLambda:
    return hw ** -1


def verma_E(v: VermaVector, hw: QLambda) -> VermaVector:
    p = v.p
    inv = QLambda.scalar(q_minus_qinv_inverse(p))
    hwi = _hw_inverse(hw)
    out = [QLambda.zero(p)] * p
    for i in range(1, p):
        c = QLambda.scalar(quantum_int(i, p)) * (hw * qpow(p, 1 - i) - hwi * qpow(p, i - 1)) * inv
        out[i - 1] = out[i - 1] + c * v.coords[i]
    return VermaVector(p, tuple(out))


def verma_F(v: VermaVector, hw: QLambda | None = None) -> VermaVector:
    p = v.p
    out = [QLambda.zero(p)] * p
    for i in range(p - 1):
        out[i + 1] = v.coords[i]
    return VermaVector(p, tuple(out))


def verma_K(v: VermaVector, hw: QLambda, sign: int = 1) -> VermaVector:
    p = v.p
    base = hw if sign > 0 else _hw_inverse(hw)
    return VermaVector(p, tuple(base * qpow(p, -2 * sign * i) * c for i, c in enumerate(v.coords)))


@dataclass
class Model:
    name: str
    p: int
    basis: Callable[[int], object]
    E: Callable
    F: Callable
    K: Callable
    Kinv: Callable


def model(p: int, which: str, hw: QLambda | None = None) -> Model:
    _check_p(p)
    if which.lower() == "k0":
        return Model("K0", p, lambda i: K0Vector.basis(p, i), k0_E, k0_F,
                     lambda v: k0_K(v, 1), lambda v: k0_K(v, -1))
    if which.lower() == "verma":
        hw = hw if hw is not None else default_hw(p)
        return Model("Verma", p, lambda i: VermaVector.basis(p, i), lambda v: verma_E(v, hw),
                     verma_F, lambda v: verma_K(v, hw, 1), lambda v: verma_K(v, hw, -1))
    raise ValueError(f"unknown model {which!r}")


def _power(op, v, k):
    for _ in range(k):
        v = op(v)
    return v


def verify_uqsl2(p: int, which: str = "K0", hw: QLambda | None = None) -> Report:
    m = model(p, which, hw)
    rep = Report("uqsl2", {"p": p, "model": m.name})
    inv = QLambda.scalar(q_minus_qinv_inverse(p))
    for i in range(p):
        b = m.basis(i)
        rep.add(f"K K^-1 = 1 on b{i}", m.K(m.Kinv(b)), b)
        rep.add(f"K^-1 K = 1 on b{i}", m.Kinv(m.K(b)), b)
        rep.add(f"KE = q^2 EK on b{i}", m.K(m.E(b)), m.E(m.K(b)).scale(qpow(p, 2)))
        rep.add(f"KF = q^-2 FK on b{i}", m.K(m.F(b)), m.F(m.K(b)).scale(qpow(p, -2)))
        rep.add(f"EF - FE = (K - K^-1)/(q - q^-1) on b{i}", m.E(m.F(b)) - m.F(m.E(b)),
                (m.K(b) - m.Kinv(b)).scale(inv))
        rep.add(f"E^p = 0 on b{i}", _power(m.E, b, p), type(b).zero(p))
        rep.add(f"F^p = 0 on b{i}", _power(m.F, b, p), type(b).zero(p))
    return rep.finish()


def rescaled_relation_report(p: int) -> Report:
    """The K0 model satisfies EF - FE = K - K^-1, i.e. E is (q - q^-1) times the Verma E."""
    rep = Report("uqsl2_rescaled", {"p": p}, informational=True)
    m = model(p, "K0")
    for i in range(p):
        b = m.basis(i)
        rep.add(f"EF - FE = K - K^-1 on A{i}", m.E(m.F(b)) - m.F(m.E(b)), m.K(b) - m.Kinv(b))
    return rep.finish()


def iso_map(v: K0Vector) -> VermaVector:
    """[A_r] -> (q - q^-1) m_r."""
    return VermaVector(v.p, tuple(q_minus_qinv(v.p) * c for c in v.coords))


def verify_iso(p: int) -> Report:
    _check_p(p)
    rep = Report("iso", {"p": p, "hw": "l*q^-1"})
    hw = default_hw(p)
    ops = [("E", k0_E, lambda v: verma_E(v, hw)), ("F", k0_F, verma_F),
           ("K", lambda v: k0_K(v, 1), lambda v: verma_K(v, hw, 1)),
           ("K^-1", lambda v: k0_K(v, -1), lambda v: verma_K(v, hw, -1))]
    for r in range(p):
        b = K0Vector.basis(p, r)
        for name, a, v in ops:
            rep.add(f"Phi({name}[A{r}]) = {name} Phi([A{r}])", iso_map(a(b)), v(iso_map(b)))
    unit = q_minus_qinv(p) * QLambda.scalar(q_minus_qinv_inverse(p))
    rep.add("Phi invertible: (q - q^-1) is a unit", unit, QLambda.one(p))
    return rep.finish()


# ---------------------------------------------------------------------------
# categorified E class


def block_weight(n: int, j: int, r: int = 0) -> int:
    """Weight of d on the j-th filtration quotient: (n-1) - 2(j-1) + r."""
    return (n - 1) - 2 * (j - 1) + r


def filtration_blocks(n: int, p: int, twisted: bool = False) -> list[tuple[int, Block, object]]:
    """Leading block of each quotient M_j, j = 1..n (generator of length j-1)."""
    out = []
    for j in range(1, n + 1):
        q0 = -2 * (j - 1)
        lam0, parity = 0, 0
        if twisted:
            q0, lam0, parity = q0 - 2 * n, 2, 1
        ws = weighted_shift_blocks(p, block_weight(n, j), q0=q0, lam0=lam0, parity=parity)
        out.append((j, ws.blocks[0], ws))
    return out


def categorified_E_class(n: int, p: int) -> tuple[QLambda, Report]:
    _check_p(p)
    if not 0 < n < p:
        raise ValueError("need 0 < n < p")
    rep = Report("eclass", {"n": n, "p": p})
    plain = filtration_blocks(n, p)
    twisted = filtration_blocks(n, p, twisted=True)
    for j, _, ws in plain + twisted:
        if not ws.report.passed:
            rep.extend(ws.report, prefix=f"M_{j}: ")
    syms = {j: k0_symbol([b], p) for j, b, _ in plain}
    F = sum(syms.values(), QLambda.zero(p))
    Fw = sum((k0_symbol([b], p) for _, b, _ in twisted), QLambda.zero(p))
    expected_F = sum((qpow(p, 2 * (1 - n) + 2 * j) for j in range(n)), QLambda.zero(p))
    rep.add(f"[F] (n={n})", F, expected_F)
    for j in range(1, n):
        if j <= n - j:
            rep.add(f"[M_{j}^0] + [M_{n-j}^0] = 0", syms[j] + syms[n - j], QLambda.zero(p))
    result = lam(p, -1, 2 * n - 1) * (F + Fw) * -1
    rep.add(f"E class of A_{n}", result, e_coefficient(p, n))
    return result, rep.finish()


def d_matrix_consistency(n: int, p: int, D: int = 6) -> Report:
    """Read the d-coefficients of the quotient generators T_c...T_{n-1} x_n^r.

    The differential is d_1 twisted on the right by (n-1) x_n; coefficients
    are read in the right normal form sum_v T_v h_v, obtained through the
    anti-involution (which exchanges d_1 and d_-1).
    """
    _check_p(p)
    rep = Report("d_matrix_consistency", {"n": n, "p": p, "D": D})
    xn = ExtPolynomial.x(n, n, p)
    for j in range(1, n + 1):
        c = n - j + 1
        word = AnElement.T_word(range(c, n), n, p)
        (u,) = word.terms
        for r in range(D + 1):
            xi = word * AnElement.from_poly(xn ** r)
            s = sigma(xi)
            image = AnElement.from_poly(xn * (n - 1)) * s + d_a_apply(-1, s)
            # image = sigma(D xi) = sum_v h_v T_v, so D xi = sum_v T_{v^-1} h_v
            right = {perm_inverse(v): h for v, h in image.terms.items()}
            lead = right.get(u, ExtPolynomial.zero(n, p))
            weight = block_weight(n, j, r) % p
            rep.add(f"j={j} r={r} coefficient", lead, (xn ** (r + 1)) * weight,
                    detail=f"weight {block_weight(n, j, r)}")
            higher = [v for v, h in right.items() if v != u and perm_length(v) >= perm_length(u)]
            rep.expect(f"j={j} r={r} no terms outside lower filtration", not higher)
    return rep.finish()
