"""Independent reference values: mpmath built-ins and direct partial sums."""

import math
import random

import mpmath

from hurwitz_parity import RootOfUnity, SumSpec
from hurwitz_parity.errors import DivergenceError, SpecError

mpmath.mp.prec = 256


def cval(x: RootOfUnity):
    return mpmath.expjpi(mpmath.mpf(2 * x.index) / x.order)


def hurwitz_zeta_bracket(p: int, q: float, n: int = 100_000):
    """Direct head sum with integral bounds on the tail: ``lo <= zeta(p, q) <= hi``."""
    head = math.fsum(1.0 / (k + q) ** p for k in range(n))
    lo = head + 1.0 / ((p - 1) * (n + q) ** (p - 1))
    hi = head + 1.0 / ((p - 1) * (n - 1 + q) ** (p - 1))
    return lo, hi


def averaged_root_series(p: int, x: RootOfUnity, n_periods: int = 250_000):
    """``sum x^n / n^p`` summed to a multiple of the period, averaged over the last period."""
    N = x.order
    z = complex(cval(x))
    pw = [z ** j for j in range(N)]
    total, acc = 0j, 0j
    last = N * n_periods
    for n in range(1, last + 1):
        total += pw[n % N] / n ** p
        if n > last - N:
            acc += total
    return acc / N


ORACLE_SHIFTS = (0.3, -0.4, 0.7, 0.25 + 0.1j, -0.35 + 0.2j)


def oracle_specs(seed: int = 0, count: int = 20):
    """Seeded convergent Euler-sum specs: r <= 2, N <= 6, p_j, q <= 3, weight <= 6."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.randint(1, 2)
        fam = rng.choice(("S", "St", "R"))
        ps = tuple(rng.randint(1, 3) for _ in range(r))
        q = rng.randint(1, 3)
        if sum(ps) + q > 6:
            continue
        N = rng.choice((1, 2, 3, 4, 6))
        xs = tuple(RootOfUnity(N, rng.randrange(N)) for _ in range(r))
        x = RootOfUnity(N, rng.randrange(N))
        try:
            out.append(SumSpec(fam, ps, q, xs, x, rng.choice(ORACLE_SHIFTS)))
        except (DivergenceError, SpecError):
            continue
    return out
