import pytest
from hypothesis import given, strategies as st

from nhv import _pykernels, kernels
from nhv import derivations as dv

try:
    from nhv import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernel not built")

terms = st.dictionaries(
    st.tuples(st.tuples(*[st.integers(0, 4)] * 4), st.integers(0, 15)),
    st.integers(-10 ** 20, 10 ** 20), max_size=12)
mods = st.sampled_from([0, 3, 5, 7])


def test_backend_reported():
    assert kernels.BACKEND in ("python", "cython")


@needs_ext
@given(terms, terms, mods)
def test_mul_agrees(a, b, mod):
    assert _ckernels.mul_terms(a, b, mod) == _pykernels.mul_terms(a, b, mod)


@needs_ext
@given(terms, st.integers(0, 2), mods)
def test_transpose_and_demazure_agree(t, j, mod):
    assert _ckernels.transpose_terms(t, j, mod) == _pykernels.transpose_terms(t, j, mod)
    assert _ckernels.demazure_terms(t, j, mod) == _pykernels.demazure_terms(t, j, mod)


@needs_ext
@given(terms, mods, st.sampled_from(["dn", "partial:2", "witt:1", "sln-e:1"]))
def test_derive_agrees(t, mod, op):
    xs, ws = dv.get_spec(op, 4)._table(4)
    assert _ckernels.derive_terms(t, xs, ws, mod) == _pykernels.derive_terms(t, xs, ws, mod)


@needs_ext
def test_omega_sign_agrees():
    for a in range(16):
        for b in range(16):
            if not a & b:
                assert _ckernels.omega_sign(a, b) == _pykernels.omega_sign(a, b)


@needs_ext
def test_rational_coefficients():
    from fractions import Fraction

    t = {((1, 2), 1): Fraction(1, 3)}
    assert _ckernels.mul_terms(t, t, 0) == _pykernels.mul_terms(t, t, 0)
    assert _ckernels.demazure_terms(t, 0, 0) == _pykernels.demazure_terms(t, 0, 0)


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    code = ("from nhv import kernels, ennilhecke as nh; "
            "print(kernels.BACKEND, nh.verify_relations(2, 6).status)")
    env = dict(os.environ, NHV_PURE_PYTHON="1")
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert res.stdout.split() == ["python", "pass"]
