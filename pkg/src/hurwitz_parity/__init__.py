"""Hurwitz-type cyclotomic Euler sums, multiple Hurwitz polylogarithms and parity identities."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DivergenceError,
    DomainError,
    HurwitzParityError,
    PoleError,
    PrecisionError,
    SpecError,
    UnsupportedRangeError,
)
from .euler_sums import MplSpec, SumSpec, eval_euler_sum, eval_mpl  # noqa: E402
from .precision import DEFAULT_CONTEXT, PrecisionContext  # noqa: E402
from .roots import RootOfUnity  # noqa: E402
from .special import (  # noqa: E402
    bernoulli,
    digamma,
    even_zeta_via_bernoulli,
    ext_trig,
    finite_sum,
    hurwitz_polylog,
    hurwitz_zeta,
    lerch_phi_deriv,
    polylog,
)

__all__ = [
    "DEFAULT_CONTEXT",
    "DivergenceError",
    "DomainError",
    "HurwitzParityError",
    "MplSpec",
    "PoleError",
    "PrecisionContext",
    "PrecisionError",
    "RootOfUnity",
    "SpecError",
    "SumSpec",
    "UnsupportedRangeError",
    "bernoulli",
    "digamma",
    "eval_euler_sum",
    "eval_mpl",
    "even_zeta_via_bernoulli",
    "ext_trig",
    "finite_sum",
    "hurwitz_polylog",
    "hurwitz_zeta",
    "lerch_phi_deriv",
    "polylog",
]
