# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the term-map kernels in ``_pykernels``.

Exponent vectors are unpacked into C buffers; coefficients stay Python
objects so that exact rationals and big integers work unchanged.
"""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM

cdef enum:
    MAXW = 64


cdef inline int _popcount(unsigned long long v) noexcept:
    cdef int k = 0
    while v:
        v &= v - 1
        k += 1
    return k


cdef inline tuple _mk(long* buf, Py_ssize_t n):
    cdef tuple t = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object o
    for i in range(n):
        o = buf[i]
        Py_INCREF(o)
        PyTuple_SET_ITEM(t, i, o)
    return t


cdef inline Py_ssize_t _load(tuple e, long* buf) except -1:
    cdef Py_ssize_t n = len(e)
    cdef Py_ssize_t i
    if n > MAXW:
        raise ValueError("too many variables for the compiled kernel")
    for i in range(n):
        buf[i] = <long>e[i]
    return n


cdef int _sign(unsigned long long ma, unsigned long long mb):
    cdef int inv = 0
    cdef unsigned long long b = mb, low
    while b:
        low = b & (~b + 1)
        inv += _popcount(ma & ~((low << 1) - 1))
        b ^= low
    return -1 if inv & 1 else 1


def omega_sign(ma, mb):
    """Sign of sorting w_A * w_B into ascending order (A, B disjoint)."""
    return _sign(<unsigned long long>ma, <unsigned long long>mb)


cdef dict _clean(dict out, object mod):
    cdef dict res = {}
    if mod:
        for k, v in out.items():
            v = v % mod
            if v:
                res[k] = v
    else:
        for k, v in out.items():
            if v:
                res[k] = v
    return res


def mul_terms(dict a, dict b, mod):
    cdef dict out = {}
    cdef long ea[MAXW]
    cdef long eb[MAXW]
    cdef long s[MAXW]
    cdef Py_ssize_t n = 0, i
    cdef unsigned long long ma, mb
    cdef list bl = []
    cdef tuple bk, ak, key
    # unpack b once
    cdef Py_ssize_t nb = len(b), jb
    for bk_, cb in b.items():
        bl.append((bk_[0], <unsigned long long>bk_[1], cb))
    for ak, ca in a.items():
        n = _load(<tuple>ak[0], ea)
        ma = <unsigned long long>ak[1]
        for jb in range(nb):
            bk = <tuple>bl[jb]
            mb = bk[1]
            if ma & mb:
                continue
            _load(<tuple>bk[0], eb)
            for i in range(n):
                s[i] = ea[i] + eb[i]
            c = ca * bk[2]
            if ma and mb and _sign(ma, mb) < 0:
                c = -c
            key = (_mk(s, n), ma | mb)
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
    return _clean(out, mod)


def transpose_terms(dict t, Py_ssize_t j, mod):
    """s_j on R_n (0-based j)."""
    cdef dict out = {}
    cdef long el[MAXW]
    cdef Py_ssize_t n
    cdef unsigned long long m, bj = 1ULL << j, bj1 = bj << 1, m2
    cdef long tmp
    cdef tuple key
    for k, c in t.items():
        n = _load(<tuple>k[0], el)
        m = <unsigned long long>k[1]
        tmp = el[j]; el[j] = el[j + 1]; el[j + 1] = tmp
        key = (_mk(el, n), m)
        prev = out.get(key)
        out[key] = c if prev is None else prev + c
        if m & bj and not m & bj1:
            m2 = (m ^ bj) | bj1
            el[j] += 1
            key = (_mk(el, n), m2)
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
            el[j] -= 1
            el[j + 1] += 1
            key = (_mk(el, n), m2)
            prev = out.get(key)
            out[key] = -c if prev is None else prev - c
    return _clean(out, mod)


def demazure_terms(dict t, Py_ssize_t j, mod):
    """T_j on R_n (0-based j)."""
    cdef dict out = {}
    cdef long el[MAXW]
    cdef Py_ssize_t n, kk
    cdef unsigned long long m, bj = 1ULL << j, bj1 = bj << 1
    cdef long a, b, lo, span
    cdef tuple key
    for k, c in t.items():
        n = _load(<tuple>k[0], el)
        m = <unsigned long long>k[1]
        a = el[j]
        b = el[j + 1]
        if a != b:
            if a > b:
                lo = b; span = a - b; sgn = c
            else:
                lo = a; span = b - a; sgn = -c
            for kk in range(span):
                el[j] = lo + span - 1 - kk
                el[j + 1] = lo + kk
                key = (_mk(el, n), m)
                prev = out.get(key)
                out[key] = sgn if prev is None else prev + sgn
        if m & bj and not m & bj1:
            el[j] = b
            el[j + 1] = a
            key = (_mk(el, n), (m ^ bj) | bj1)
            prev = out.get(key)
            out[key] = -c if prev is None else prev - c
    return _clean(out, mod)


def derive_terms(dict t, list x_img, list w_img, mod):
    """Even derivation given generator images (same layout as the Python kernel)."""
    cdef dict out = {}
    cdef long e[MAXW]
    cdef long s[MAXW]
    cdef long ex[MAXW]
    cdef Py_ssize_t n, i, u, jj, sidx
    cdef long ei
    cdef unsigned long long m, mm, low, bjj, m2, between
    cdef int sign
    cdef Py_ssize_t lo, hi
    cdef tuple key
    for k, c in t.items():
        n = _load(<tuple>k[0], e)
        m = <unsigned long long>k[1]
        for i in range(n):
            ei = e[i]
            if not ei:
                continue
            img = x_img[i]
            if not img:
                continue
            ce = c * ei
            for exs, cx in img:
                _load(<tuple>exs, ex)
                for u in range(n):
                    s[u] = e[u] + ex[u]
                s[i] -= 1
                key = (_mk(s, n), m)
                v = ce * cx
                prev = out.get(key)
                out[key] = v if prev is None else prev + v
        mm = m
        while mm:
            low = mm & (~mm + 1)
            sidx = 0
            while (low >> sidx) != 1:
                sidx += 1
            mm ^= low
            for jj, ew, cw in w_img[sidx]:
                bjj = 1ULL << jj
                if jj == sidx:
                    m2 = m
                    sign = 1
                else:
                    if m & bjj:
                        continue
                    if sidx < jj:
                        lo = sidx; hi = jj
                    else:
                        lo = jj; hi = sidx
                    between = (m >> (lo + 1)) & ((1ULL << (hi - lo - 1)) - 1)
                    sign = -1 if _popcount(between) & 1 else 1
                    m2 = (m ^ low) | bjj
                _load(<tuple>ew, ex)
                for u in range(n):
                    s[u] = e[u] + ex[u]
                key = (_mk(s, n), m2)
                v = c * cw if sign > 0 else -(c * cw)
                prev = out.get(key)
                out[key] = v if prev is None else prev + v
    return _clean(out, mod)
