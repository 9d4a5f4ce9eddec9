import os

from setuptools import setup

ext_modules = []
if os.environ.get("HURWITZ_PARITY_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("hurwitz_parity._ckernels", ["src/hurwitz_parity/_ckernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
