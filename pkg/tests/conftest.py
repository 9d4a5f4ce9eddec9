import os

import pytest
from hypothesis import HealthCheck, settings

from hurwitz_parity import PrecisionContext, RootOfUnity

settings.register_profile(
    "numeric",
    max_examples=int(os.environ.get("HP_MAX_EXAMPLES", "30")),
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("numeric")

CTX = PrecisionContext()
TOL = CTX.target_tol

ONE = RootOfUnity(1)
MINUS_ONE = RootOfUnity(2, 1)
I = RootOfUnity(4, 1)
MINUS_I = RootOfUnity(4, 3)


@pytest.fixture
def ctx():
    return CTX


def roots_up_to(nmax: int):
    return sorted({RootOfUnity(n, k) for n in range(1, nmax + 1) for k in range(n)})
