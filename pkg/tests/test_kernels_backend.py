import os
import subprocess
import sys

import pytest

from hurwitz_parity import _kernels, _pykernels
from hurwitz_parity.euler_sums import _period_table

from conftest import I, MINUS_I, MINUS_ONE, ONE

ckernels = pytest.importorskip("hurwitz_parity._ckernels")


@pytest.mark.parametrize("outer, q, inner, ps, c", [
    (ONE, 2, [ONE], [1], 0.3),
    (MINUS_ONE, 2, [I, MINUS_I], [1, 2], 0.25 + 0.1j),
    (I, 3, [MINUS_ONE], [2], -0.4),
])
def test_euler_partial_backends_agree(outer, q, inner, ps, c):
    args = (5000, 12, _period_table(outer), q, c, [_period_table(x) for x in inner], ps, c)
    py, cy = _pykernels.euler_partial(*args), ckernels.euler_partial(*args)
    assert len(py) == len(cy)
    assert max(abs(complex(u) - complex(v)) for u, v in zip(py, cy)) < 1e-12


@pytest.mark.parametrize("xs, ks, a", [([I, MINUS_ONE], [2, 2], 0.3), ([I, MINUS_I, MINUS_ONE], [2, 1, 2], -0.4)])
def test_mpl_partial_backends_agree(xs, ks, a):
    args = (5000, 12, [_period_table(x) for x in xs], ks, a)
    py, cy = _pykernels.mpl_partial(*args), ckernels.mpl_partial(*args)
    assert max(abs(complex(u) - complex(v)) for u, v in zip(py, cy)) < 1e-12


def test_backend_selection():
    assert _kernels.BACKEND == ("python" if os.environ.get("HURWITZ_PARITY_PURE") == "1" else "cython")
    env = dict(os.environ, HURWITZ_PARITY_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from hurwitz_parity import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
