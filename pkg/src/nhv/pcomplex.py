"""Finite graded p-complexes: nilpotency, Jordan blocks and K0 symbols."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from sympy.polys.matrices import DomainMatrix

from nhv import linalg
from nhv.coeff_rings import CycloElement, QLambda, is_prime
from nhv.report import Report

Piece = tuple  # (q, lam, parity)


@dataclass(frozen=True, order=True)
class Block:
    size: int
    q: int
    lam: int
    parity: int

    def as_dict(self) -> dict:
        return {"size": self.size, "q": self.q, "lambda": self.lam, "parity": self.parity}


@dataclass
class GradedPComplex:
    """Graded vector space with d of degree (+2, 0) and parity 0.

    ``diff[piece]`` is the matrix (rows: target basis, columns: source basis)
    of d from ``piece`` to the piece two q-degrees higher.  Missing entries
    are zero maps.  ``mod = 0`` means rational coefficients.
    """

    p: int
    pieces: dict[Piece, int]
    diff: dict[Piece, list[list]] = field(default_factory=dict)
    mod: int = 0

    def __post_init__(self):
        if not is_prime(self.p) or self.p < 3:
            raise ValueError(f"p must be an odd prime, got {self.p}")
        self.pieces = {tuple(k): v for k, v in self.pieces.items() if v}
        for src, mat in list(self.diff.items()):
            src = tuple(src)
            tgt = target(src)
            rows, cols = self.pieces.get(tgt, 0), self.pieces.get(src, 0)
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise ValueError(f"map from {src} has shape mismatch: expected {rows}x{cols}")

    def matrix(self, src: Piece) -> DomainMatrix:
        rows = self.pieces.get(target(src), 0)
        cols = self.pieces.get(src, 0)
        mat = self.diff.get(tuple(src))
        if mat is None or rows == 0 or cols == 0:
            return DomainMatrix.zeros((rows, cols), linalg.domain(self.mod))
        return linalg.matrix(mat, self.mod, cols)

    def power(self, src: Piece, k: int) -> DomainMatrix:
        """Matrix of d^k from ``src``."""
        q, lam, par = src
        out = DomainMatrix.eye(self.pieces.get(src, 0), linalg.domain(self.mod))
        for s in range(k):
            out = self.matrix((q + 2 * s, lam, par)) * out
        return out

    def rank_power(self, src: Piece, k: int) -> int:
        if k == 0:
            return self.pieces.get(tuple(src), 0)
        if not self.pieces.get(tuple(src), 0):
            return 0
        q, lam, par = src
        if not self.pieces.get((q + 2 * k, lam, par), 0):
            return 0
        return linalg.rank(self.power(src, k))

    def total_dim(self) -> int:
        return sum(self.pieces.values())

    # -- serialization -------------------------------------------------------
    @classmethod
    def from_json(cls, data: str | Mapping, p: int | None = None) -> "GradedPComplex":
        if isinstance(data, str):
            data = json.loads(data)
        p = p if p is not None else int(data["p"])
        field_name = str(data.get("field", "Fp")).lower()
        mod = 0 if field_name in ("q", "qq", "rational") else p
        plist = [(int(e["q"]), int(e.get("lambda", 0)), int(e.get("parity", 0))) for e in data["pieces"]]
        pieces = {k: int(e["dim"]) for k, e in zip(plist, data["pieces"])}

        def ref(r) -> Piece:
            if isinstance(r, int):
                return plist[r]
            if isinstance(r, Mapping):
                return (int(r["q"]), int(r.get("lambda", 0)), int(r.get("parity", 0)))
            return tuple(int(v) for v in r)

        diff = {}
        for m in data.get("maps", []):
            src, tgt = ref(m["from"]), ref(m["to"])
            if tgt != target(src):
                raise ValueError(f"map {src} -> {tgt} does not have degree (+2, 0)")
            diff[src] = [[_parse_scalar(c) for c in row] for row in m["matrix"]]
        return cls(p, pieces, diff, mod)

    def to_json(self) -> dict:
        keys = sorted(self.pieces)
        return {
            "p": self.p,
            "field": "Fp" if self.mod else "Q",
            "pieces": [{"q": k[0], "lambda": k[1], "parity": k[2], "dim": self.pieces[k]} for k in keys],
            "maps": [{"from": list(s), "to": list(target(s)), "matrix": [[str(c) for c in r] for r in m]}
                     for s, m in sorted(self.diff.items())],
        }


def _parse_scalar(c):
    from fractions import Fraction
    return Fraction(str(c)) if not isinstance(c, int) else c


def target(src: Piece) -> Piece:
    q, lam, par = src
    return (q + 2, lam, par)


def verify_p_nilpotent(c: GradedPComplex) -> bool:
    for src, dim in c.pieces.items():
        q, lam, par = src
        if dim and c.pieces.get((q + 2 * c.p, lam, par), 0):
            if linalg.rank(c.power(src, c.p)):
                return False
    return True


def jordan_blocks(c: GradedPComplex) -> list[Block]:
    """Graded Jordan type from the ranks of the powers of d.

    The number of blocks of size k with bottom at q is
    r_{k-1}(q) - r_k(q-2) - r_k(q) + r_{k+1}(q-2), with r_j(q) the rank of
    d^j leaving degree q.
    """
    if not verify_p_nilpotent(c):
        raise ValueError("differential is not p-nilpotent")
    blocks: list[Block] = []
    memo: dict = {}

    def r(q, lam, par, j):
        key = (q, lam, par, j)
        if key not in memo:
            memo[key] = c.rank_power((q, lam, par), j)
        return memo[key]

    for (q, lam, par) in sorted(c.pieces):
        for k in range(1, c.p + 1):
            cnt = r(q, lam, par, k - 1) - r(q - 2, lam, par, k) - r(q, lam, par, k) + r(q - 2, lam, par, k + 1)
            blocks.extend(Block(k, q, lam, par) for _ in range(cnt))
    return sorted(blocks)


def from_blocks(p: int, blocks: Iterable[Block], mod: int | None = None) -> GradedPComplex:
    """Direct sum of shifted k[d]/(d^k) blocks with d(v_s) = v_{s+1}."""
    blocks = list(blocks)
    pieces: Counter = Counter()
    slots = []
    for b in blocks:
        idx = []
        for s in range(b.size):
            key = (b.q + 2 * s, b.lam, b.parity)
            idx.append((key, pieces[key]))
            pieces[key] += 1
        slots.append(idx)
    diff: dict = {}
    for idx in slots:
        for (src, i), (tgt, j) in zip(idx, idx[1:]):
            mat = diff.setdefault(src, [[0] * pieces[src] for _ in range(pieces[tgt])])
            mat[j][i] = 1
    return GradedPComplex(p, dict(pieces), diff, p if mod is None else mod)


def k0_symbol(c: GradedPComplex | Iterable[Block], p: int | None = None) -> QLambda:
    """sum over blocks of (-1)^parity q^q0 l^lam0 (1 + q^2 + ... + q^(2(k-1)))."""
    if isinstance(c, GradedPComplex):
        p, blocks = c.p, jordan_blocks(c)
    else:
        blocks = list(c)
        if p is None:
            raise ValueError("p is required when passing blocks")
    out = QLambda.zero(p)
    for b in blocks:
        sign = -1 if b.parity else 1
        coeffs = {b.q + 2 * s: sign for s in range(b.size)}
        out = out + QLambda(p, {b.lam: CycloElement(p, coeffs)})
    return out


def graded_ranks(c: GradedPComplex) -> dict:
    return {(k, j): c.rank_power(k, j) for k in sorted(c.pieces) for j in range(c.p)}


# ---------------------------------------------------------------------------
# weighted shift complexes


@dataclass
class WeightedShift:
    complex: GradedPComplex
    weight: int
    leading: int  # size of the leading block
    blocks: list[Block]
    report: Report

    @property
    def leading_symbol(self) -> QLambda:
        return k0_symbol([self.blocks[0]], self.complex.p) if self.blocks else QLambda.zero(self.complex.p)


def weighted_shift_complex(p: int, w: int, count: int, q0: int = 0, lam0: int = 0,
                           parity: int = 0) -> GradedPComplex:
    """Basis v_0..v_{count-1}, v_r in q-degree q0 + 2r, d(v_r) = (w + r) v_{r+1}."""
    pieces = {(q0 + 2 * r, lam0, parity): 1 for r in range(count)}
    diff = {(q0 + 2 * r, lam0, parity): [[(w + r) % p]] for r in range(count - 1)}
    return GradedPComplex(p, pieces, diff, p)


def weighted_shift_blocks(p: int, w: int, count: int | None = None, q0: int = 0, lam0: int = 0,
                          parity: int = 0) -> WeightedShift:
    r0 = (-w) % p
    lead = r0 + 1
    if count is None:
        count = lead + 2 * p
    rep = Report("weighted_shift", {"p": p, "w": w, "count": count, "q0": q0, "lambda": lam0, "parity": parity})
    c = weighted_shift_complex(p, w, count, q0, lam0, parity)
    rep.expect("d^p = 0", verify_p_nilpotent(c))
    blocks = sorted(jordan_blocks(c), key=lambda b: b.q)
    first = blocks[0]
    rep.add("leading block size", first.size, lead, detail=f"r0 = {r0}")
    rep.add("leading block bottom degree", first.q, q0)
    tail = blocks[1:]
    if (count - lead) % p == 0:
        rep.expect("remaining blocks have size p", all(b.size == p for b in tail),
                   detail=f"{len(tail)} blocks")
    # truncation consistency: another p vectors change nothing but add a block of size p
    longer = sorted(jordan_blocks(weighted_shift_complex(p, w, count + p, q0, lam0, parity)), key=lambda b: b.q)
    rep.expect("truncation consistency", longer[:len(blocks)] == blocks and
               all(b.size == p for b in longer[len(blocks):]) if (count - lead) % p == 0 else True)
    return WeightedShift(c, w, first.size, blocks, rep.finish())
