import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("NHV_NO_EXTENSION", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("nhv._ckernels", ["src/nhv/_ckernels.pyx"], extra_compile_args=["-O2"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
