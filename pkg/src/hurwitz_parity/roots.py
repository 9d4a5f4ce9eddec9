"""Exact roots of unity.

A root ``exp(2*pi*i*k/N)`` is stored as the reduced fraction ``k/N`` so that
equality, products and inverses are exact; a complex value is produced only
when a number is actually needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_LITERALS = {"1": (1, 0), "-1": (2, 1), "i": (4, 1), "-i": (4, 3)}


@dataclass(frozen=True, order=True)
class RootOfUnity:
    order: int
    index: int = 0

    def __post_init__(self):
        n, k = int(self.order), int(self.index)
        if n < 1:
            raise ValueError("order of a root of unity must be positive")
        k %= n
        g = math.gcd(k, n)
        if k == 0:
            n, k = 1, 0
        else:
            n, k = n // g, k // g
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "index", k)

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(1, 0)

    @classmethod
    def parse(cls, text: str) -> "RootOfUnity":
        """Parse ``1``, ``-1``, ``i``, ``-i`` or ``w N k`` / ``w(N,k)``."""
        t = text.strip()
        if t.startswith("w ") and len(t.split()) == 3:
            t = "w({},{})".format(*t.split()[1:])
        t = t.replace(" ", "")
        if t in _LITERALS:
            return cls(*_LITERALS[t])
        if t.startswith("w"):
            body = t[1:].strip("()")
            parts = [p for p in body.replace(",", ":").split(":") if p]
            if len(parts) == 2:
                return cls(int(parts[0]), int(parts[1]))
        raise ValueError(f"cannot parse root of unity {text!r}")

    @property
    def is_one(self) -> bool:
        return self.order == 1

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.index)

    def __mul__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        n = self.order * other.order // math.gcd(self.order, other.order)
        return RootOfUnity(n, self.index * (n // self.order) + other.index * (n // other.order))

    def __truediv__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.index * int(e))

    def period_sum_vanishes(self) -> bool:
        """Exact test of ``sum_{j=1}^{N} x**j == 0`` over one period of ``x``.

        The geometric sum over a full period is ``N`` when ``x == 1`` and zero
        for every other root; this is decided on the reduced fraction.
        """
        return self.order > 1

    def value(self, mp):
        """Complex embedding in the given mpmath context."""
        if self.order == 1:
            return mp.mpc(1)
        t = mp.mpf(2 * self.index) / self.order
        return mp.mpc(mp.cospi(t), mp.sinpi(t))

    def __complex__(self):
        if self.order in (1, 2, 4):
            return [1 + 0j, 1j, -1 + 0j, -1j][(self.index * 4 // self.order) % 4]
        t = 2 * math.pi * self.index / self.order
        return complex(math.cos(t), math.sin(t))

    def __str__(self):
        for lit, nk in _LITERALS.items():
            if (self.order, self.index) == RootOfUnity(*nk).as_tuple():
                return lit
        return f"w({self.order},{self.index})"

    def as_tuple(self):
        return (self.order, self.index)


ONE = RootOfUnity(1, 0)
MINUS_ONE = RootOfUnity(2, 1)
I = RootOfUnity(4, 1)


def roots_of_order(n: int):
    """All ``n``-th roots of unity (not only primitive ones)."""
    return [RootOfUnity(n, k) for k in range(n)]
