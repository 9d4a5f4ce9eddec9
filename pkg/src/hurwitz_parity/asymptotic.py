"""Large-index expansions of nested sums with root-of-unity weights.

A sequence ``g(n)`` is represented for large ``n`` as

    g(n) ~ sum_y  y**n * F_y(s),      s = n + sigma,

where ``y`` runs over roots of unity and each ``F_y`` is a :class:`LogSeries`
``sum_{j,e} c[j][e] * log(s)**j * s**(-e)`` truncated at ``e <= order``.

Tails ``sum_{k>=1} y**k F(s+k)`` are taken with the operator identity
``sum_{k>=1} y**k e^{kD} = y e^D / (1 - y e^D)``: for ``y != 1`` this is a power
series in ``D = d/ds`` (Boole summation); for ``y = 1`` it is
``-1/D - 1/2 - D/12 - ...`` (Euler--Maclaurin), where ``-1/D`` is the integral
from ``s`` to infinity.  Integrals of ``log(t)**j / t`` are regularized to
``-log(s)**(j+1)/(j+1)``, which makes divergent partial sums carry their
``log`` growth explicitly.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import DivergenceError
from .precision import mp_context
from .roots import RootOfUnity
from .special import _bernoulli_internal


class LogSeries:
    """Truncated double series in ``log(s)`` and ``1/s``."""

    __slots__ = ("order", "c")

    def __init__(self, order: int, c=None):
        self.order = order
        self.c = c if c is not None else {}

    def _row(self, j, mp):
        row = self.c.get(j)
        if row is None:
            row = [mp.zero] * (self.order + 1)
            self.c[j] = row
        return row

    def copy(self):
        return LogSeries(self.order, {j: list(r) for j, r in self.c.items()})

    def is_zero(self):
        return all(not v for r in self.c.values() for v in r)

    def scaled(self, k):
        return LogSeries(self.order, {j: [k * v for v in r] for j, r in self.c.items()})

    def iadd(self, other, mp, k=1):
        for j, r in other.c.items():
            row = self._row(j, mp)
            for e, v in enumerate(r):
                if v:
                    row[e] += k * v if k != 1 else v
        return self

    def mul(self, other, mp):
        E = self.order
        out = LogSeries(E)
        for ja, ra in self.c.items():
            nza = [(e, v) for e, v in enumerate(ra) if v]
            if not nza:
                continue
            for jb, rb in other.c.items():
                nzb = [(e, v) for e, v in enumerate(rb) if v]
                if not nzb:
                    continue
                row = out._row(ja + jb, mp)
                for ea, va in nza:
                    for eb, vb in nzb:
                        if ea + eb > E:
                            break
                        row[ea + eb] += va * vb
        return out

    def deriv(self, mp):
        # D[log^j s^-e] = j log^(j-1) s^(-e-1) - e log^j s^(-e-1)
        E = self.order
        out = LogSeries(E)
        for j, r in self.c.items():
            for e in range(E):
                v = r[e]
                if not v:
                    continue
                if e:
                    out._row(j, mp)[e + 1] -= e * v
                if j:
                    out._row(j - 1, mp)[e + 1] += j * v
        return out

    def integral_to_infinity(self, mp):
        """``int_s^inf F(t) dt`` with the ``e = 1`` terms regularized."""
        E = self.order
        out = LogSeries(E)
        for j, r in self.c.items():
            if r[0]:
                raise DivergenceError("integral of a non-decaying term")
            if r[1]:
                out._row(j + 1, mp)[0] -= r[1] / (j + 1)
            for e in range(2, E + 1):
                v = r[e]
                if not v:
                    continue
                # s^(1-e) sum_i j!/(j-i)! log^(j-i) / (e-1)^(i+1)
                f = v / (e - 1)
                for i in range(j + 1):
                    out._row(j - i, mp)[e - 1] += f
                    f = f * (j - i) / (e - 1)
        return out

    def evaluate(self, s, logs, mp):
        """Value at ``s``; ``logs[j] = log(s)**j`` must be supplied."""
        inv = 1 / s
        total = mp.zero
        for j, r in self.c.items():
            acc = mp.zero
            for v in reversed(r):
                acc = acc * inv + v
            total += acc * logs[j]
        return total

    def trailing(self, s, logs, mp, width=2):
        """Magnitude of the highest ``width`` orders at ``s``."""
        E = self.order
        tot = 0.0
        sa = abs(s)
        for j, r in self.c.items():
            lj = abs(logs[j])
            for e in range(max(0, E - width + 1), E + 1):
                if r[e]:
                    tot += float(abs(r[e]) * lj / sa ** e)
        return tot

    @property
    def max_log(self):
        return max((j for j, r in self.c.items() if any(r)), default=0)


@lru_cache(maxsize=256)
def _betas(order: int, index: int, E: int, bits: int):
    """Taylor coefficients of ``y e^t / (1 - y e^t)`` (``y != 1``)."""
    mp = mp_context(bits + 32)
    y = RootOfUnity(order, index).value(mp)
    num = []
    den = []
    fact = mp.one
    for n in range(E + 1):
        if n:
            fact *= n
        num.append(y / fact)
        den.append(-y / fact if n else 1 - y)
    out = []
    for n in range(E + 1):
        acc = num[n]
        for k in range(1, n + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / den[0])
    return tuple(out)


@lru_cache(maxsize=16)
def _betas_one(E: int, bits: int):
    # coefficient of D^(n-1) is -(-1)^n B_n / n!, n >= 1
    mp = mp_context(bits)
    out = []
    fact = 1
    for n in range(1, E + 2):
        fact *= n
        b = _bernoulli_internal(n)
        val = mp.mpf(b.numerator) / (b.denominator * fact)
        out.append(val if n % 2 else -val)
    return tuple(out)


def tail_series(F: LogSeries, y: RootOfUnity, mp) -> LogSeries:
    """Series of ``sum_{k>=1} y**k F(s+k)``."""
    E = F.order
    bits = mp.prec
    if y.is_one:
        betas = _betas_one(E, bits)
        out = F.integral_to_infinity(mp)
    else:
        betas = _betas(y.order, y.index, E, bits)
        out = LogSeries(E)
    cur = F
    for m in range(E + 1):
        if cur.is_zero():
            break
        b = betas[m]
        if b:
            out.iadd(cur, mp, b)
        cur = cur.deriv(mp)
    return out


def power_series(k: int, d, E: int, mp) -> LogSeries:
    """``(s + d)**(-k)`` expanded in ``1/s``."""
    row = [mp.zero] * (E + 1)
    c = mp.one
    for i in range(0, E - k + 1):
        row[k + i] = c
        c = -c * d * (k + i) / (i + 1)
    return LogSeries(E, {0: row})


class Expansion:
    """``sum_y y**n F_y(n + sigma)``; a mapping from roots to :class:`LogSeries`."""

    __slots__ = ("order", "parts")

    def __init__(self, order, parts=None):
        self.order = order
        self.parts = parts if parts is not None else {}

    @classmethod
    def constant(cls, value, order, mp):
        row = [mp.zero] * (order + 1)
        row[0] = value
        return cls(order, {RootOfUnity.one(): LogSeries(order, {0: row})})

    def add(self, other, mp, k=1):
        out = Expansion(self.order, {y: f.copy() for y, f in self.parts.items()})
        for y, f in other.parts.items():
            if y in out.parts:
                out.parts[y].iadd(f, mp, k)
            else:
                out.parts[y] = f.scaled(k) if k != 1 else f.copy()
        return out

    def mul(self, other, mp):
        out = Expansion(self.order)
        for y1, f1 in self.parts.items():
            for y2, f2 in other.parts.items():
                y = y1 * y2
                prod = f1.mul(f2, mp)
                if y in out.parts:
                    out.parts[y].iadd(prod, mp)
                else:
                    out.parts[y] = prod
        return out

    def tail(self, mp):
        return Expansion(self.order, {y: tail_series(f, y, mp) for y, f in self.parts.items()})

    def _logs(self, s, mp):
        J = max((f.max_log for f in self.parts.values()), default=0)
        ls = mp.log(s)
        logs = [mp.one]
        for _ in range(J):
            logs.append(logs[-1] * ls)
        return logs

    def evaluate(self, n: int, sigma, mp):
        s = n + sigma
        logs = self._logs(s, mp)
        total = mp.zero
        for y, f in self.parts.items():
            total += (y ** n).value(mp) * f.evaluate(s, logs, mp)
        return total

    def trailing(self, n: int, sigma, mp):
        s = n + sigma
        logs = self._logs(s, mp)
        return sum(f.trailing(s, logs, mp) for f in self.parts.values())

    def log_growth(self, mp):
        """Coefficients of ``log(s)**j``, ``j >= 1``, in the non-oscillating constant part."""
        f = self.parts.get(RootOfUnity.one())
        if f is None:
            return []
        out = []
        J = f.max_log
        for j in range(1, J + 1):
            row = f.c.get(j)
            out.append(row[0] if row else mp.zero)
        return out


def lcm_order(roots) -> int:
    n = 1
    for r in roots:
        n = n * r.order // math.gcd(n, r.order)
    return n
