from hypothesis import strategies as st

from nhv.extpoly import ExtPolynomial


def ext_polys(n, max_terms=4, max_exp=3, coeffs=st.integers(-5, 5)):
    key = st.tuples(st.tuples(*[st.integers(0, max_exp)] * n), st.integers(0, (1 << n) - 1))
    return st.dictionaries(key, coeffs, max_size=max_terms).map(lambda t: ExtPolynomial(n, t))


def even_polys(n, max_terms=4, max_exp=3):
    key = st.tuples(st.tuples(*[st.integers(0, max_exp)] * n), st.just(0))
    return st.dictionaries(key, st.integers(-5, 5), max_size=max_terms).map(lambda t: ExtPolynomial(n, t))
