"""Brute-force kernel selection: compiled extension if built, else pure Python.

Set ``HURWITZ_PARITY_PURE=1`` to force the Python fallback.
"""

import os

BACKEND = "python"

if os.environ.get("HURWITZ_PARITY_PURE") != "1":
    try:
        from ._ckernels import euler_partial, mpl_partial  # noqa: F401

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import euler_partial, mpl_partial  # noqa: F401
