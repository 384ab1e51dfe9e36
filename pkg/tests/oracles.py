"""Independent reference computations built directly on sympy.

These avoid the package's sparse kernels so that they can be used to
cross-check them.
"""

import itertools

import sympy as sp


def xs(n):
    return sp.symbols(f"x1:{n + 1}")


def to_sympy(f):
    """Even part of an ExtPolynomial as a sympy expression (mask 0 terms only)."""
    X = xs(f.n)
    out = 0
    for (e, m), c in f.terms.items():
        if m == 0:
            out += sp.Rational(c) * sp.prod([v ** k for v, k in zip(X, e)])
    return sp.expand(out)


def omega_parts(f):
    """mask -> sympy coefficient polynomial."""
    X = xs(f.n)
    out = {}
    for (e, m), c in f.terms.items():
        out[m] = out.get(m, 0) + sp.Rational(c) * sp.prod([v ** k for v, k in zip(X, e)])
    return {m: sp.expand(v) for m, v in out.items() if sp.expand(v) != 0}


def demazure(expr, j, n):
    X = xs(n)
    swapped = expr.subs({X[j - 1]: X[j], X[j]: X[j - 1]}, simultaneous=True)
    q, r = sp.div(sp.expand(expr - swapped), X[j - 1] - X[j], *X)
    assert r == 0
    return sp.expand(q)


def sort_sign(idx):
    """Sign of the permutation sorting a list of distinct integers."""
    inv = sum(1 for a, b in itertools.combinations(idx, 2) if a > b)
    return -1 if inv % 2 else 1


def cyclo_reduce(coeffs, p):
    """Reduce sum c_k q^k (k may be negative) modulo 1 + q^2 + ... + q^(2p-2)."""
    q = sp.Symbol("q")
    shift = -min(list(coeffs) + [0])
    # q^(2p) = 1 in the quotient, so shifting by a multiple of 2p is harmless
    shift += (-shift) % (2 * p)
    poly = sum(c * q ** (k + shift) for k, c in coeffs.items())
    mod = sum(q ** (2 * i) for i in range(p))
    r = sp.rem(sp.expand(poly), mod, q)
    return sp.Poly(r, q).as_dict() if r != 0 else {}


def jordan_sizes(matrix, p):
    """Jordan block sizes of a nilpotent matrix over F_p, from ranks of powers."""
    M = sp.Matrix(matrix)
    n = M.shape[0]
    ranks = [n]
    P = sp.eye(n)
    for _ in range(n + 1):
        P = (P * M).applyfunc(lambda v: v % p)
        ranks.append(_rank_mod(P, p))
    sizes = {}
    for k in range(1, n + 1):
        cnt = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        if cnt:
            sizes[k] = cnt
    return sizes


def _rank_mod(M, p):
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF

    dm = DomainMatrix.from_Matrix(M).convert_to(GF(p))
    return dm.rank()
