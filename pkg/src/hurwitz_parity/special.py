"""Depth-one special functions at roots of unity.

Everything here reduces to two primitives evaluated with an explicit
Euler--Maclaurin tail: the Hurwitz zeta function and the digamma function.
Series over a root of unity ``x`` of order ``N`` are split into ``N`` residue
classes, each of which is a Hurwitz zeta (or, for exponent 1, a digamma)
value.  Nothing is summed term by term at ``|x| = 1``.

Shift convention: ``hurwitz_polylog(p, x, a)`` is ``sum_{n>=1} x^n/(n+a)^p``;
``a`` is the denominator shift.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DivergenceError, DomainError, PoleError, PrecisionError, UnsupportedRangeError
from .precision import DEFAULT_CONTEXT, ComplexShift, PrecisionContext
from .roots import RootOfUnity

BERNOULLI_TABLE_MAX = 40


@lru_cache(maxsize=None)
def _bernoulli_list(nmax: int):
    # sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1
    B = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = Fraction(0)
        c = 1  # C(n+1, k)
        for k in range(n):
            acc += c * B[k]
            c = c * (n + 1 - k) // (k + 1)
        B.append(-acc / (n + 1))
    return tuple(B)


def _bernoulli_internal(n: int) -> Fraction:
    size = 64
    while size < n:
        size *= 2
    return _bernoulli_list(size)[n]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` from ``x/(e^x - 1)``; table-backed for n <= 40."""
    if n < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    if n > BERNOULLI_TABLE_MAX:
        raise UnsupportedRangeError(f"bernoulli({n}): table covers n <= {BERNOULLI_TABLE_MAX}")
    return _bernoulli_list(BERNOULLI_TABLE_MAX)[n]


def even_zeta_via_bernoulli(m: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """``zeta(2m) = (-1)^(m-1) B_2m (2 pi)^2m / (2 (2m)!)`` for ``1 <= m <= 10``."""
    if not 1 <= m <= 10:
        raise UnsupportedRangeError("even_zeta_via_bernoulli supports 1 <= m <= 10")
    mp = ctx.mp
    b = bernoulli(2 * m)
    val = mp.mpf(b.numerator) / b.denominator * (2 * mp.pi) ** (2 * m)
    val /= 2 * math.factorial(2 * m)
    return -val if m % 2 == 0 else val


def to_mp(mp, z):
    """Convert a Python/mpmath number, keeping it real when it is real."""
    if isinstance(z, ComplexShift):
        z = z.value
    if isinstance(z, (int, Fraction)):
        return mp.mpf(z.numerator) / z.denominator if isinstance(z, Fraction) else mp.mpf(z)
    if isinstance(z, complex):
        return mp.mpf(z.real) if z.imag == 0 else mp.mpc(z.real, z.imag)
    z = mp.convert(z)
    if isinstance(z, mp.mpc) and z.imag == 0:
        return z.real
    return z


def _check_off_poles(mp, z, eps, what):
    """Reject ``z`` within ``eps`` of a nonpositive integer."""
    re = float(mp.re(z))
    im = float(mp.im(z))
    n = round(re)
    if n <= 0 and math.hypot(re - n, im) < eps:
        raise PoleError(f"{what}: argument {complex(re, im)} is within {eps:g} of the pole {n}")


def _em_radius(tol: float) -> float:
    return 1.5 * math.log(1.0 / tol) / (2 * math.pi) + 6.0


def _hurwitz_zeta(p: int, q, ctx: PrecisionContext):
    """``sum_{k>=0} (k+q)^-p`` for integer ``p >= 2`` and complex ``q`` off the poles."""
    mp = ctx.mp
    tol = ctx.internal_tol
    q = to_mp(mp, q)
    _check_off_poles(mp, q, ctx.eps_pole, "hurwitz_zeta")
    radius = _em_radius(tol) + p
    K = max(0, math.ceil(radius - float(mp.re(q))))
    if K > ctx.max_terms:
        raise PrecisionError("hurwitz_zeta: head length exceeds max_terms", achieved=math.inf)
    head = mp.zero
    for k in range(K):
        head += (q + k) ** (-p)
    w = q + K
    wp = w ** (-p)
    total = head + w * wp / (p - 1) + wp / 2
    inv_w2 = 1 / (w * w)
    # term_j = B_2j/(2j)! (p)_{2j-1} w^{-p-2j+1}
    poch = mp.mpf(p)  # (p)_{2j-1} for j = 1
    fact = 2  # (2j)!
    pw = wp / w  # w^{-p-1}
    last = math.inf
    for j in range(1, 400):
        b = _bernoulli_internal(2 * j)
        term = mp.mpf(b.numerator) / b.denominator / fact * poch * pw
        total += term
        mag = abs(term)
        if mag < tol:
            return total
        if mag > last and j > 4:
            break
        last = mag
        poch *= (p + 2 * j - 1) * (p + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
        pw *= inv_w2
    raise PrecisionError("hurwitz_zeta: Euler-Maclaurin tail did not reach tolerance", achieved=float(last))


def hurwitz_zeta(p: int, q, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Hurwitz zeta ``sum_{n>=0} 1/(n+q)^p`` for integer ``p >= 2``.

    Real ``q`` must be positive; complex ``q`` is accepted off the real axis.
    """
    if int(p) != p or p < 2:
        raise DomainError("hurwitz_zeta requires an integer exponent p >= 2")
    mp = ctx.mp
    qq = to_mp(mp, q)
    if mp.im(qq) == 0 and qq <= 0:
        raise DomainError(f"hurwitz_zeta requires q > 0, got {q}")
    return _hurwitz_zeta(int(p), qq, ctx)


def digamma(z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Digamma function by upward recurrence and the asymptotic Bernoulli series."""
    mp = ctx.mp
    tol = ctx.internal_tol
    z = to_mp(mp, z)
    _check_off_poles(mp, z, ctx.eps_pole, "digamma")
    radius = _em_radius(tol)
    K = max(0, math.ceil(radius - float(mp.re(z))))
    acc = mp.zero
    for k in range(K):
        acc -= 1 / (z + k)
    w = z + K
    total = acc + mp.log(w) - 1 / (2 * w)
    inv_w2 = 1 / (w * w)
    pw = inv_w2
    last = math.inf
    for j in range(1, 400):
        b = _bernoulli_internal(2 * j)
        term = mp.mpf(b.numerator) / (b.denominator * 2 * j) * pw
        total -= term
        mag = abs(term)
        if mag < tol:
            return total
        if mag > last and j > 4:
            break
        last = mag
        pw *= inv_w2
    raise PrecisionError("digamma: asymptotic tail did not reach tolerance", achieved=float(last))


def _lerch_sum(p: int, x: RootOfUnity, s, ctx: PrecisionContext, regularized=False):
    """``sum_{k>=0} x^k/(k+s)^p`` by residue classes modulo the order of ``x``."""
    mp = ctx.mp
    N = x.order
    if p == 1 and x.is_one:
        if not regularized:
            raise DivergenceError("sum_{k>=0} 1/(k+s) diverges")
        # log-divergence removed: sum_{k<K} 1/(k+s) - log K -> -psi(s)
        return -digamma(s, ctx)
    if N == 1:
        return _hurwitz_zeta(p, s, ctx)
    xv = x.value(mp)
    total = mp.zero
    xj = mp.one
    for j in range(N):
        arg = (s + j) / N
        if p == 1:
            total -= xj * digamma(arg, ctx)
        else:
            total += xj * _hurwitz_zeta(p, arg, ctx)
        xj *= xv
    if p == 1:
        # the divergent pieces sum_j x^j / (e - 1) cancel because the period sum is 0
        assert x.period_sum_vanishes()
        return total / N
    return total / mp.mpf(N) ** p


def polylog(p: int, x: RootOfUnity, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """``Li_p(x) = sum_{n>=1} x^n/n^p`` at a root of unity."""
    if p < 1:
        raise DomainError("polylog requires p >= 1")
    mp = ctx.mp
    if p == 1:
        if x.is_one:
            raise DivergenceError("Li_1(1) diverges")
        return -mp.log(1 - x.value(mp))
    N = x.order
    xv = x.value(mp)
    total = mp.zero
    xj = mp.one
    for j in range(1, N + 1):
        xj *= xv
        total += xj * _hurwitz_zeta(p, mp.mpf(j) / N, ctx)
    total /= mp.mpf(N) ** p
    if x.order <= 2:
        return mp.re(total)
    return total


def _check_shift(mp, a, eps):
    # a must avoid -1, -2, ...
    re = float(mp.re(a))
    im = float(mp.im(a))
    n = min(round(re), -1)
    if math.hypot(re - n, im) < eps:
        raise PoleError(f"shift a={complex(re, im)} is within {eps:g} of {n}")


def hurwitz_polylog(p: int, x: RootOfUnity, a, ctx: PrecisionContext = DEFAULT_CONTEXT, *, regularized=False):
    """``sum_{n>=1} x^n/(n+a)^p`` (the denominator shift is ``a``).

    With ``regularized=True`` the divergent case ``(p, x) = (1, 1)`` returns the
    constant term ``-digamma(1+a)`` of ``sum_{n<=K} 1/(n+a) = log K + ...``.
    """
    if p < 1:
        raise DomainError("hurwitz_polylog requires p >= 1")
    if p == 1 and x.is_one and not regularized:
        raise DivergenceError("Li_1(1; a+1) diverges")
    mp = ctx.mp
    av = to_mp(mp, a)
    _check_shift(mp, av, ctx.eps_pole)
    val = x.value(mp) * _lerch_sum(p, x, 1 + av, ctx, regularized=regularized)
    if x.order <= 2 and mp.im(av) == 0:
        return mp.re(val)
    return val


def finite_sum(n: int, p: int, x: RootOfUnity, a=0, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Exact partial sum ``sum_{k=1}^{n} x^k/(k+a)^p`` at working precision."""
    mp = ctx.mp
    av = to_mp(mp, a)
    if n > 0:
        _check_shift(mp, av, ctx.eps_pole)
    xv = x.value(mp)
    total = mp.zero
    xk = mp.one
    for k in range(1, n + 1):
        xk *= xv
        total += xk / (k + av) ** p
    return total


def lerch_phi_deriv(p: int, s, x: RootOfUnity, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """``sum_{k>=0} x^k/(k+s)^p``, i.e. ``(-1)^(p-1) phi^(p-1)(s; x)/(p-1)!``.

    ``x = 1`` is accepted for ``p >= 2`` (Hurwitz zeta) and rejected for ``p = 1``.
    """
    if p < 1:
        raise DomainError("lerch_phi_deriv requires p >= 1")
    if p == 1 and x.is_one:
        raise DomainError("phi(s; 1) is not defined (divergent)")
    mp = ctx.mp
    sv = to_mp(mp, s)
    _check_off_poles(mp, sv, ctx.eps_pole, "lerch_phi_deriv")
    return _lerch_sum(p, x, sv, ctx)


def ext_trig(s, x: RootOfUnity, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """``Phi(s; x) = phi(s; x) - phi(-s; 1/x) - 1/s``; ``pi cot(pi s)`` when ``x = 1``."""
    mp = ctx.mp
    sv = to_mp(mp, s)
    re, im = float(mp.re(sv)), float(mp.im(sv))
    n = round(re)
    if math.hypot(re - n, im) < ctx.eps_pole:
        raise PoleError(f"ext_trig: s={complex(re, im)} is within {ctx.eps_pole:g} of the pole {n}")
    if x.is_one:
        return mp.pi * mp.cot(mp.pi * sv)
    return _lerch_sum(1, x, sv, ctx) - _lerch_sum(1, x.inverse(), -sv, ctx) - 1 / sv
