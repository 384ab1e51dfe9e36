"""Pure-Python hot loops over sparse term maps.

A term map is ``{(exps, mask): coeff}`` where ``exps`` is a tuple of
x-exponents and bit ``i`` of ``mask`` marks the odd variable w_{i+1}.
``mod`` is 0 for characteristic zero, else the prime.  All functions return
fresh dictionaries with zero coefficients removed.
"""

from __future__ import annotations

_SIGN_CACHE: dict = {}


def omega_sign(ma: int, mb: int) -> int:
    """Sign of sorting w_A * w_B into ascending order (A, B disjoint)."""
    key = (ma, mb)
    s = _SIGN_CACHE.get(key)
    if s is None:
        inv = 0
        b = mb
        while b:
            low = b & -b
            inv += (ma & ~((low << 1) - 1)).bit_count()
            b ^= low
        s = -1 if inv & 1 else 1
        if len(_SIGN_CACHE) < 1 << 20:
            _SIGN_CACHE[key] = s
    return s


def _clean(out: dict, mod: int) -> dict:
    if mod:
        return {k: v % mod for k, v in out.items() if v % mod}
    return {k: v for k, v in out.items() if v}


def mul_terms(a: dict, b: dict, mod: int) -> dict:
    out: dict = {}
    get = out.get
    for (ea, ma), ca in a.items():
        for (eb, mb), cb in b.items():
            if ma & mb:
                continue
            c = ca * cb
            if mb and ma:
                c *= omega_sign(ma, mb)
            key = (tuple([x + y for x, y in zip(ea, eb)]), ma | mb)
            out[key] = get(key, 0) + c
    return _clean(out, mod)


def add_into(acc: dict, t: dict, scale=1) -> None:
    for k, v in t.items():
        acc[k] = acc.get(k, 0) + scale * v


def transpose_terms(t: dict, j: int, mod: int) -> dict:
    """s_j on R_n: swap x_j, x_{j+1}; w_j -> w_j + (x_j - x_{j+1}) w_{j+1} (0-based j)."""
    out: dict = {}
    get = out.get
    bj = 1 << j
    bj1 = bj << 1
    for (e, m), c in t.items():
        el = list(e)
        el[j], el[j + 1] = el[j + 1], el[j]
        key = (tuple(el), m)
        out[key] = get(key, 0) + c
        if m & bj and not m & bj1:
            m2 = (m ^ bj) | bj1
            el[j] += 1
            key = (tuple(el), m2)
            out[key] = get(key, 0) + c
            el[j] -= 1
            el[j + 1] += 1
            key = (tuple(el), m2)
            out[key] = get(key, 0) - c
    return _clean(out, mod)


def demazure_terms(t: dict, j: int, mod: int) -> dict:
    """T_j = (1 - s_j)/(x_j - x_{j+1}) on R_n (0-based j), via twisted Leibniz."""
    out: dict = {}
    get = out.get
    bj = 1 << j
    bj1 = bj << 1
    for (e, m), c in t.items():
        a = e[j]
        b = e[j + 1]
        if a != b:
            el = list(e)
            if a > b:
                lo, span, sgn = b, a - b, c
            else:
                lo, span, sgn = a, b - a, -c
            for k in range(span):
                el[j] = lo + span - 1 - k
                el[j + 1] = lo + k
                key = (tuple(el), m)
                out[key] = get(key, 0) + sgn
        if m & bj and not m & bj1:
            el = list(e)
            el[j], el[j + 1] = b, a
            key = (tuple(el), (m ^ bj) | bj1)
            out[key] = get(key, 0) - c
    return _clean(out, mod)


def derive_terms(t: dict, x_img: list, w_img: list, mod: int) -> dict:
    """Even derivation given generator images.

    ``x_img[i]``: list of (exps, coeff), the polynomial image of x_{i+1}.
    ``w_img[i]``: list of (j, exps, coeff): image of w_{i+1} is sum coeff*x^exps*w_{j+1}.
    """
    out: dict = {}
    get = out.get
    for (e, m), c in t.items():
        for i, ei in enumerate(e):
            if not ei:
                continue
            img = x_img[i]
            if not img:
                continue
            base = list(e)
            base[i] -= 1
            ce = c * ei
            for ex, cx in img:
                key = (tuple([u + v for u, v in zip(base, ex)]), m)
                out[key] = get(key, 0) + ce * cx
        mm = m
        while mm:
            low = mm & -mm
            s = low.bit_length() - 1
            mm ^= low
            for jj, ew, cw in w_img[s]:
                bjj = 1 << jj
                if jj == s:
                    m2, sign = m, 1
                else:
                    if m & bjj:
                        continue
                    lo, hi = (s, jj) if s < jj else (jj, s)
                    between = (m >> (lo + 1)) & ((1 << (hi - lo - 1)) - 1)
                    sign = -1 if between.bit_count() & 1 else 1
                    m2 = (m ^ low) | bjj
                key = (tuple([u + v for u, v in zip(e, ew)]), m2)
                out[key] = get(key, 0) + sign * c * cw
    return _clean(out, mod)
