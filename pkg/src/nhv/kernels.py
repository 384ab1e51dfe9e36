"""Backend selection for the sparse term kernels.

The compiled module is used when it imports; setting ``NHV_PURE_PYTHON=1``
forces the pure-Python fallback.
"""

from __future__ import annotations

import os

from nhv import _pykernels

_impl = _pykernels
BACKEND = "python"

if os.environ.get("NHV_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from nhv import _ckernels as _compiled  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

mul_terms = _impl.mul_terms
transpose_terms = _impl.transpose_terms
demazure_terms = _impl.demazure_terms
derive_terms = _impl.derive_terms
omega_sign = _impl.omega_sign
add_into = _pykernels.add_into
