"""Local expansions of the contour-integration kernels, checked numerically.

Two kernel pieces appear in the parity proofs:

* ``D_p(s; x) = sum_{k>=0} x^k/(k+s)^p``, which is ``(-1)^(p-1) phi^(p-1)(s;x)/(p-1)!``;
* ``Phi(s; x) = phi(s; x) - phi(-s; 1/x) - 1/s``.

Each :class:`ExpansionCase` names one Taylor/Laurent expansion around a center
(an integer, ``-n - a`` or ``-a``).  :func:`expansion_residual` compares the
truncated series, singular part included, with a direct evaluation.  Near-pole
work runs at 512 bits so that a residual of ``1e-7`` is resolved next to a
singular term of size ``1e4``.

The second half checks the residue bookkeeping for the linear kernel
``F(s) = Phi(s;x) D_p(s+a;y) / (s+a)^q``: closed-form residues are summed over a
growing square contour (the total must tend to zero) and compared against
numerical residues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleError
from .expr import binom
from .precision import PrecisionContext
from .roots import RootOfUnity
from .special import ext_trig, finite_sum, hurwitz_polylog, lerch_phi_deriv, polylog, to_mp

KERNEL_CONTEXT = PrecisionContext(precision_bits=512, target_tol=1e-100)
RESIDUE_CONTEXT = PrecisionContext(precision_bits=192, target_tol=1e-40)

KINDS = (
    "lerch-at-nonpositive",
    "lerch-at-positive",
    "trig-at-integer",
    "shifted-lerch-at-nonpositive",
    "shifted-lerch-at-positive",
    "trig-at-shift",
    "lerch-at-shift",
)
_SHIFTED = {"shifted-lerch-at-nonpositive", "shifted-lerch-at-positive", "trig-at-shift", "lerch-at-shift"}
SAMPLE_RADIUS = 0.25


@dataclass(frozen=True)
class ExpansionCase:
    """One expansion: ``kind``, center index ``n``, order ``p``, argument ``x``, shift ``a``, truncation ``K``."""

    kind: str
    n: int = 0
    p: int = 1
    x: RootOfUnity = RootOfUnity(1)
    a: complex = 0j
    K: int = 4

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown expansion kind {self.kind!r}")
        object.__setattr__(self, "a", complex(self.a))
        if self.K < 0 or self.p < 1:
            raise DomainError("need K >= 0 and p >= 1")
        if self.kind in ("lerch-at-positive", "shifted-lerch-at-positive") and self.n < 1:
            raise DomainError(f"{self.kind} needs n >= 1")
        if self.kind in ("lerch-at-nonpositive", "shifted-lerch-at-nonpositive", "trig-at-shift") and self.n < 0:
            raise DomainError(f"{self.kind} needs n >= 0")
        if self.kind.startswith(("lerch", "shifted-lerch")) and self.p == 1 and self.x.is_one:
            raise DomainError("D_1(s; 1) diverges")
        if self.kind in _SHIFTED:
            if abs(self.a - round(self.a.real)) < 1e-6:
                raise DomainError("the shift a must stay off the integers")

    @property
    def center(self) -> complex:
        k = self.kind
        if k in ("lerch-at-nonpositive", "shifted-lerch-at-nonpositive"):
            return complex(-self.n)
        if k == "trig-at-shift":
            return -self.n - self.a
        if k == "lerch-at-shift":
            return -self.a
        return complex(self.n)

    def radius(self) -> float:
        """Distance from the center to the nearest other singularity of the expanded function."""
        c = self.center
        k = self.kind
        if k in ("lerch-at-nonpositive", "lerch-at-positive", "trig-at-integer"):
            return 1.0
        if k.startswith("shifted-lerch"):
            # poles of D_p(s+a) at s = -j - a, j >= 0
            return min(abs(c + j + self.a) for j in range(0, abs(self.n) + 3))
        # trig-at-shift and lerch-at-shift: poles at the integers / at -j, j >= 0
        lattice = range(-abs(self.n) - 3, abs(self.n) + 3)
        if k == "lerch-at-shift":
            lattice = range(-abs(self.n) - 3, 1)
        return min(abs(c - j) for j in lattice)


def _sgn(k):
    return -1 if k % 2 else 1


def _li_label(k, x, label, ctx):
    # Li_k(x; label) = sum x^n / (n + label - 1)^k
    return hurwitz_polylog(k, x, label - 1, ctx, regularized=True)


def coefficient(case: ExpansionCase, k: int, ctx: PrecisionContext = KERNEL_CONTEXT):
    """Coefficient of ``(s - center)^k`` in the regular part of the expansion."""
    mp = ctx.mp
    x, n, p = case.x, case.n, case.p
    a = to_mp(mp, case.a)
    xv = x.value(mp)
    kind = case.kind
    if kind == "lerch-at-nonpositive":
        b = binom(k + p - 1, p - 1)
        return xv**n * b * (_sgn(k) * polylog(k + p, x, ctx) + _sgn(p) * finite_sum(n, k + p, x.inverse(), 0, ctx))
    if kind == "lerch-at-positive":
        b = binom(k + p - 1, p - 1)
        return xv ** (-n) * b * _sgn(k) * (polylog(k + p, x, ctx) - finite_sum(n - 1, k + p, x, 0, ctx))
    if kind == "trig-at-integer":
        if x.is_one and k == 0:
            # the two divergent Li_1(1) cancel
            return mp.zero
        c = _sgn(k) * polylog(k + 1, x, ctx) - polylog(k + 1, x.inverse(), ctx)
        return xv ** (-n) * c
    if kind == "shifted-lerch-at-nonpositive":
        b = binom(k + p - 1, p - 1)
        head = _sgn(k) * _li_label(k + p, x, a, ctx) / xv
        return xv**n * b * (head + _sgn(p) * finite_sum(n, k + p, x.inverse(), -a, ctx))
    if kind == "shifted-lerch-at-positive":
        b = binom(k + p - 1, p - 1)
        return xv ** (-n - 1) * b * _sgn(k) * (_li_label(k + p, x, a, ctx) - finite_sum(n, k + p, x, a - 1, ctx))
    if kind == "trig-at-shift":
        # at x = 1, k = 0 the log-divergent parts of the two Li_1 cancel
        c = _sgn(k) * _li_label(k + 1, x, 1 - a, ctx) - xv * _li_label(k + 1, x.inverse(), a, ctx)
        return xv**n * c
    # lerch-at-shift
    b = binom(k + p - 1, p - 1)
    return _sgn(k) * b * _li_label(k + p, x, -a, ctx) / xv


def singular_part(case: ExpansionCase, s, ctx: PrecisionContext = KERNEL_CONTEXT):
    mp = ctx.mp
    t = to_mp(mp, s) - to_mp(mp, case.center)
    xv = case.x.value(mp)
    if case.kind == "lerch-at-nonpositive":
        return xv**case.n / t**case.p
    if case.kind == "trig-at-integer":
        return xv ** (-case.n) / t
    return mp.zero


def truncated_series(case: ExpansionCase, s, ctx: PrecisionContext = KERNEL_CONTEXT, K=None):
    mp = ctx.mp
    K = case.K if K is None else K
    t = to_mp(mp, s) - to_mp(mp, case.center)
    total = singular_part(case, s, ctx)
    tk = mp.one
    for k in range(K + 1):
        total += coefficient(case, k, ctx) * tk
        tk *= t
    return total


def direct_value(case: ExpansionCase, s, ctx: PrecisionContext = KERNEL_CONTEXT):
    mp = ctx.mp
    sv = to_mp(mp, s)
    if case.kind.startswith("trig"):
        return ext_trig(sv, case.x, ctx)
    if case.kind.startswith("shifted-lerch"):
        sv = sv + to_mp(mp, case.a)
    return lerch_phi_deriv(case.p, sv, case.x, ctx)


def expansion_residual(case: ExpansionCase, s, ctx: PrecisionContext = KERNEL_CONTEXT) -> float:
    """``|direct - truncated|`` at a sample point within distance 1/4 of the center."""
    d = abs(complex(s) - case.center)
    if d > SAMPLE_RADIUS + 1e-12:
        raise DomainError(f"sample point is {d:.3g} from the center; at most {SAMPLE_RADIUS} allowed")
    if d < ctx.eps_pole:
        raise PoleError("sample point coincides with the center")
    if d >= case.radius():
        raise DomainError("sample point lies outside the disc of convergence")
    return float(abs(direct_value(case, s, ctx) - truncated_series(case, s, ctx)))


def first_omitted_term(case: ExpansionCase, s, ctx: PrecisionContext = KERNEL_CONTEXT) -> float:
    mp = ctx.mp
    t = to_mp(mp, s) - to_mp(mp, case.center)
    return float(abs(coefficient(case, case.K + 1, ctx) * t ** (case.K + 1)))


def residual_slope(case: ExpansionCase, eps=(0.2, 0.1, 0.05), direction: complex = 1,
                   ctx: PrecisionContext = KERNEL_CONTEXT) -> float:
    """Least-squares slope of ``log residual`` against ``log eps``."""
    u = complex(direction) / abs(complex(direction))
    xs, ys = [], []
    for e in eps:
        r = expansion_residual(case, case.center + e * u, ctx)
        xs.append(math.log(e))
        ys.append(math.log(r))
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((a - mx) * (b - my) for a, b in zip(xs, ys)) / sum((a - mx) ** 2 for a in xs)


def default_cases(Ks=(2, 4, 6)):
    """Grid of cases with ``p <= 3`` and arguments of order ``N <= 4``."""
    roots = [RootOfUnity(1), RootOfUnity(2, 1), RootOfUnity(3, 1), RootOfUnity(4, 1)]
    # |Im a| >= 1 keeps the nearest singularity far enough that eps = 0.2 is already asymptotic
    shifts = (0.5 + 1.0j, -0.5 + 1.2j)
    out = []
    for K in Ks:
        for p in (1, 2, 3):
            for x in roots:
                lerch_ok = not (p == 1 and x.is_one)
                if lerch_ok:
                    out += [ExpansionCase("lerch-at-nonpositive", 1, p, x, 0, K),
                            ExpansionCase("lerch-at-positive", 2, p, x, 0, K)]
                if p == 1:
                    out += [ExpansionCase("trig-at-integer", -1, 1, x, 0, K),
                            ExpansionCase("trig-at-shift", 1, 1, x, shifts[K % 2], K)]
                if lerch_ok:
                    a = shifts[(p + K) % 2]
                    out += [ExpansionCase("shifted-lerch-at-nonpositive", 1, p, x, a, K),
                            ExpansionCase("shifted-lerch-at-positive", 1, p, x, a, K),
                            ExpansionCase("lerch-at-shift", 0, p, x, a, K)]
    return out


# -- residues of the linear kernel ------------------------------------------------


@dataclass(frozen=True)
class LinearKernel:
    """``F(s) = Phi(s;x) D_p(s+a;y) / (s+a)^q``."""

    p: int
    q: int
    x: RootOfUnity
    y: RootOfUnity
    a: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        if self.p == 1 and self.y.is_one:
            raise DomainError("(p, y) = (1, 1) makes D_p(s+a; y) divergent")
        if abs(self.a - round(self.a.real)) < 1e-6:
            raise DomainError("the shift a must stay off the integers")

    def value(self, s, ctx: PrecisionContext = RESIDUE_CONTEXT):
        mp = ctx.mp
        sv = to_mp(mp, s)
        av = to_mp(mp, self.a)
        return ext_trig(sv, self.x, ctx) * lerch_phi_deriv(self.p, sv + av, self.y, ctx) / (sv + av) ** self.q


def _phi_m(m, x, a, ctx):
    # (-1)^m Li_{m+1}(x; 1-a) - x Li_{m+1}(x^-1; a)
    return _sgn(m) * _li_label(m + 1, x, 1 - a, ctx) - x.value(ctx.mp) * _li_label(m + 1, x.inverse(), a, ctx)


class ResidueTable:
    """Closed-form residues of a :class:`LinearKernel` at its four pole families."""

    def __init__(self, kernel: LinearKernel, ctx: PrecisionContext = RESIDUE_CONTEXT):
        self.k = kernel
        self.ctx = ctx
        mp = ctx.mp
        p, q, x, y = kernel.p, kernel.q, kernel.x, kernel.y
        self.av = to_mp(mp, kernel.a)
        self.xv, self.yv = x.value(mp), y.value(mp)
        self.li_p_y = _li_label(p, y, self.av, ctx)
        self.phis = [_phi_m(m, x, self.av, ctx) for m in range(max(p, q))]

    def at_nonnegative(self, n: int):
        """Residue at the integer ``n >= 0``."""
        k, mp, a = self.k, self.ctx.mp, self.av
        zn = finite_sum(n, k.p, k.y, a - 1, self.ctx)
        return self.xv ** (-n) * self.yv ** (-n - 1) / (n + a) ** k.q * (self.li_p_y - zn)

    def at_negative(self, n: int):
        """Residue at ``-n`` for ``n >= 1``."""
        k, a = self.k, self.av
        zn = finite_sum(n, k.p, k.y.inverse(), -a, self.ctx)
        return _sgn(k.q) * (self.xv * self.yv) ** n / (n - a) ** k.q * (self.li_p_y / self.yv + _sgn(k.p) * zn)

    def at_shifted(self, n: int):
        """Residue at ``-n - a`` for ``n >= 1`` (pole of order ``p``)."""
        k = self.k
        p, q = k.p, k.q
        mp = self.ctx.mp
        total = mp.zero
        for m in range(p):
            total += binom(p + q - m - 2, q - 1) * self.phis[m] / mp.mpf(n) ** (p + q - m - 1)
        return _sgn(q) * (self.xv * self.yv) ** n * total

    def at_shift(self):
        """Residue at ``-a`` (pole of order ``p + q``)."""
        k, ctx = self.k, self.ctx
        p, q, x, y, a = k.p, k.q, k.x, k.y, self.av
        total = _sgn(p + q - 1) * _li_label(p + q, x, 1 - a, ctx) - self.xv * _li_label(p + q, x.inverse(), a, ctx)
        for m in range(q):
            kk = q - 1 - m
            total += _sgn(kk) * binom(kk + p - 1, p - 1) * polylog(kk + p, y, ctx) * self.phis[m]
        return total


def _on_contour(z: complex, half: float, tol: float = 1e-9) -> bool:
    inside = abs(z.real) <= half + tol and abs(z.imag) <= half + tol
    return inside and (abs(abs(z.real) - half) < tol or abs(abs(z.imag) - half) < tol)


def contour_half_width(a: complex, m: int, offsets=(0.5, 0.75)) -> float:
    """Half-width of the square contour of class ``m``; shifted when a pole sits on it."""
    for off in offsets:
        half = m + off
        poles = [complex(m), complex(-m), -a, -m - a, -(m + 1) - a]
        if not any(_on_contour(z, half) for z in poles):
            return half
    raise PoleError(f"no admissible contour of class {m} for a={a}")


def residue_sum_check(p: int, q: int, x: RootOfUnity, y: RootOfUnity, a, m: int,
                      ctx: PrecisionContext = RESIDUE_CONTEXT):
    """Sum of closed-form residues of the linear kernel over the poles inside the class-``m`` square.

    The full sum vanishes; the partial sum measures the contribution still
    outside the contour and must shrink as ``m`` grows.
    """
    if m < 3:
        raise DomainError("contour class m must be at least 3")
    a = complex(a)
    table = ResidueTable(LinearKernel(p, q, x, y, a), ctx)
    half = contour_half_width(a, m)
    total = ctx.mp.zero
    for n in range(0, int(half) + 1):
        if n <= half:
            total += table.at_nonnegative(n)
        if 1 <= n <= half:
            total += table.at_negative(n)
    if abs(a.real) <= half and abs(a.imag) <= half:
        total += table.at_shift()
    n = 1
    while True:
        z = -n - a
        if abs(z.real) > half:
            break
        if abs(z.imag) <= half:
            total += table.at_shifted(n)
        n += 1
    return complex(total)


def richardson_residue(kernel: LinearKernel, pole: int, h: float = 1e-4,
                       ctx: PrecisionContext = RESIDUE_CONTEXT) -> complex:
    """``lim (s - pole) F(s)`` from ``g(e) = e F(pole + e)`` with two Richardson steps."""
    mp = ctx.mp

    def g(e):
        e = mp.mpf(e)
        return e * kernel.value(pole + e, ctx)

    r1 = lambda e: 2 * g(e / 2) - g(e)  # noqa: E731
    return complex((4 * r1(h / 2) - r1(h)) / 3)


def _pole_set(kernel: LinearKernel, center: complex, reach: int = 3):
    a = kernel.a
    c = round(center.real)
    out = [complex(j) for j in range(c - reach, c + reach + 1)]
    out += [-j - a for j in range(0, abs(c) + reach + 1)]
    return out


def contour_residue(kernel: LinearKernel, center: complex, radius=None, nodes: int = 96,
                    ctx: PrecisionContext = RESIDUE_CONTEXT) -> complex:
    """``(1/(2 pi i)) \\oint F`` on a small circle by the trapezoidal rule.

    The rule converges like ``(radius/d)^nodes`` with ``d`` the distance to the
    nearest other pole; the default radius is ``0.4 d``.
    """
    mp = ctx.mp
    center = complex(center)
    if radius is None:
        d = min(abs(z - center) for z in _pole_set(kernel, center) if abs(z - center) > 1e-9)
        radius = 0.4 * d
    c = to_mp(mp, center)
    total = mp.zero
    for j in range(nodes):
        w = mp.expjpi(mp.mpf(2 * j) / nodes) * radius
        total += kernel.value(c + w, ctx) * w
    return complex(total / nodes)
