"""Exact linear algebra over QQ and GF(p) on top of sympy's DomainMatrix."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Sequence

from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix


def domain(mod: int = 0):
    return GF(mod) if mod else QQ


def convert(c, mod: int = 0):
    dom = domain(mod)
    if mod:
        return dom(int(c) % mod)
    f = Fraction(c)
    return dom(f.numerator, f.denominator)


def to_python(c, mod: int = 0):
    if mod:
        return int(c) % mod
    f = Fraction(int(c.numerator), int(c.denominator))
    return f.numerator if f.denominator == 1 else f


def matrix(rows: Sequence[Sequence], mod: int = 0, ncols: int | None = None) -> DomainMatrix:
    dom = domain(mod)
    nr = len(rows)
    nc = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return DomainMatrix([[convert(c, mod) for c in r] for r in rows], (nr, nc), dom)


def sparse_columns(vecs: Sequence[dict], mod: int = 0,
                   keys: Sequence[Hashable] | None = None) -> tuple[DomainMatrix, list]:
    """Matrix whose j-th column is the sparse vector ``vecs[j]`` (dict key -> coeff)."""
    if keys is None:
        keys = sorted({k for v in vecs for k in v})
    row = {k: i for i, k in enumerate(keys)}
    dom = domain(mod)
    data: dict = {}
    for j, v in enumerate(vecs):
        for k, c in v.items():
            if c:
                data.setdefault(row[k], {})[j] = convert(c, mod)
    return DomainMatrix.from_dod(data, (len(keys), len(vecs)), dom), list(keys)


def rank_of_vectors(vecs: Sequence[dict], mod: int = 0) -> int:
    if not vecs:
        return 0
    mat, keys = sparse_columns(vecs, mod)
    if not keys:
        return 0
    return mat.rank()


def rank(m: DomainMatrix) -> int:
    if 0 in m.shape:
        return 0
    return m.rank()


def nullspace(m: DomainMatrix) -> list[list]:
    """Basis of the right kernel as lists of domain elements."""
    nc = m.shape[1]
    if nc == 0:
        return []
    if m.shape[0] == 0:
        dom = m.domain
        return [[dom.one if i == j else dom.zero for i in range(nc)] for j in range(nc)]
    ns = m.nullspace()
    return ns.to_list() if ns.shape[0] else []
