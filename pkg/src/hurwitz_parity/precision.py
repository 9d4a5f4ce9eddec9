"""Working-precision plumbing.

Every evaluator receives a :class:`PrecisionContext`.  Arithmetic is done in a
private :class:`mpmath.ctx_mp.MPContext` per precision so that no evaluator
touches the global ``mpmath.mp`` settings.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

from mpmath.ctx_mp import MPContext

from .errors import DomainError

DEFAULT_BITS = 256
DEFAULT_TOL = 1e-30
DEFAULT_MAX_TERMS = 100_000
DEFAULT_EPS_POLE = 1e-6


@functools.lru_cache(maxsize=None)
def mp_context(bits: int) -> MPContext:
    ctx = MPContext()
    ctx.prec = bits
    return ctx


@dataclass(frozen=True)
class PrecisionContext:
    precision_bits: int = DEFAULT_BITS
    target_tol: float = DEFAULT_TOL
    max_terms: int = DEFAULT_MAX_TERMS
    eps_pole: float = DEFAULT_EPS_POLE

    def __post_init__(self):
        if self.precision_bits < 16:
            raise ValueError("precision_bits must be at least 16")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")
        if self.target_tol < 2.0 ** (1 - self.precision_bits):
            raise ValueError(
                f"target_tol={self.target_tol:g} is below the representable "
                f"resolution 2^(1-{self.precision_bits})"
            )

    @property
    def mp(self) -> MPContext:
        return mp_context(self.precision_bits)

    @property
    def internal_tol(self) -> float:
        # headroom for cancellation when many evaluations are combined
        return max(self.target_tol * 2.0 ** -16, 2.0 ** (8 - self.precision_bits))

    def with_(self, **changes) -> "PrecisionContext":
        values = {
            "precision_bits": self.precision_bits,
            "target_tol": self.target_tol,
            "max_terms": self.max_terms,
            "eps_pole": self.eps_pole,
        }
        values.update(changes)
        return PrecisionContext(**values)


DEFAULT_CONTEXT = PrecisionContext()


EXCLUDED_TAGS = ("not-in-N", "not-in-Z", "not-in-N-")


@dataclass(frozen=True)
class ComplexShift:
    """A complex shift ``a`` kept at a safe distance from an excluded lattice.

    ``excluded`` is one of ``not-in-N`` (a not a positive integer),
    ``not-in-Z`` and ``not-in-N-`` (a not a negative integer).
    """

    value: complex
    excluded: str = "not-in-N-"
    eps_pole: float = field(default=DEFAULT_EPS_POLE, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        if self.excluded not in EXCLUDED_TAGS:
            raise ValueError(f"unknown excluded-set tag {self.excluded!r}")
        d = lattice_distance(self.value, self.excluded)
        if d < self.eps_pole:
            raise DomainError(
                f"shift a={self.value} lies within {self.eps_pole:g} of the "
                f"excluded set ({self.excluded})"
            )

    def __complex__(self):
        return self.value


def lattice_distance(a: complex, excluded: str) -> float:
    """Distance from ``a`` to the lattice named by ``excluded``."""
    a = complex(a)
    if excluded == "not-in-Z":
        lo = -math.inf
        hi = math.inf
    elif excluded == "not-in-N":
        lo, hi = 1, math.inf
    else:
        lo, hi = -math.inf, -1
    n = round(a.real)
    n = min(max(n, lo), hi)
    return abs(a - n)


def as_shift_value(a) -> complex:
    if isinstance(a, ComplexShift):
        return a.value
    return complex(a)
