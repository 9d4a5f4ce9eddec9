"""Hurwitz-type cyclotomic Euler sums and multiple Hurwitz polylogarithms.

Accelerated evaluation splits every series at an index ``M`` of a few hundred:
the head ``n <= M`` is summed exactly, nested sums included, and the tail is
replaced by its large-``n`` expansion (see :mod:`hurwitz_parity.asymptotic`).
Inner partial sums enter the outer tail through their own expansions
``Z(n) = Z(inf) - tail(n)``, so depth costs a few series products rather than
extra summation loops.

The brute-force mode sums the definition directly in double precision (compiled
kernel when available) and is used only as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .asymptotic import Expansion, lcm_order, power_series
from .errors import DivergenceError, PrecisionError, SpecError
from .precision import DEFAULT_CONTEXT, ComplexShift, PrecisionContext, lattice_distance
from .roots import RootOfUnity
from .special import to_mp

FAMILIES = ("S", "St", "R")
_FAMILY_ALIASES = {"S": "S", "St": "St", "S~": "St", "S̃": "St", "Stilde": "St", "R": "R"}


def _shift_value(a) -> complex:
    return a.value if isinstance(a, ComplexShift) else complex(a)


def _check_not_negative_integer(a: complex, what: str, eps: float):
    if lattice_distance(a, "not-in-N-") < eps:
        raise SpecError(f"{what}: shift a={a} lies on (or within {eps:g} of) a negative integer", "a not in N-")


@dataclass(frozen=True)
class SumSpec:
    """One Euler sum ``sum_n prod_j zeta_n(p_j; x_j; .) x^n / (n + .)^q``.

    ``family`` selects where the shift ``a`` enters: ``S`` (inner and outer),
    ``St`` (inner only, outer ``n^q``) or ``R`` (outer only).
    """

    family: str
    inner_exponents: tuple
    outer_exponent: int
    inner_args: tuple
    outer_arg: RootOfUnity
    shift: complex = 0j
    eps_pole: float = 1e-6
    allow_divergent: bool = False

    def __post_init__(self):
        fam = _FAMILY_ALIASES.get(self.family)
        if fam is None:
            raise SpecError(f"unknown family {self.family!r}", "family")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "inner_exponents", tuple(int(p) for p in self.inner_exponents))
        object.__setattr__(self, "inner_args", tuple(self.inner_args))
        object.__setattr__(self, "shift", _shift_value(self.shift))
        r = len(self.inner_exponents)
        if r != len(self.inner_args):
            raise SpecError("inner exponents and arguments differ in length", "arity")
        if not 1 <= r <= 3:
            raise SpecError("depth must be 1, 2 or 3", "r <= 3")
        if min(self.inner_exponents) < 1 or self.outer_exponent < 1:
            raise SpecError("exponents must be positive integers", "exponents >= 1")
        if self.outer_exponent == 1 and self.outer_arg.is_one and not self.allow_divergent:
            raise DivergenceError("(q, x) = (1, 1): the outer series diverges")
        if fam in ("S", "St"):
            _check_not_negative_integer(self.shift, "inner sums", self.eps_pole)
        if fam in ("S", "R"):
            _check_not_negative_integer(self.shift, "outer denominator", self.eps_pole)

    @property
    def depth(self) -> int:
        return len(self.inner_exponents)

    @property
    def weight(self) -> int:
        return sum(self.inner_exponents) + self.outer_exponent

    @property
    def inner_shift(self) -> complex:
        return 0j if self.family == "R" else self.shift

    @property
    def outer_shift(self) -> complex:
        return 0j if self.family == "St" else self.shift

    def roots(self):
        return (*self.inner_args, self.outer_arg)


@dataclass(frozen=True)
class MplSpec:
    """``sum_{0<n_1<...<n_r} prod_j x_j^{n_j} / (n_j + a)^{k_j}`` (``a`` is the denominator shift)."""

    exponents: tuple
    args: tuple
    shift: complex = 0j
    eps_pole: float = 1e-6

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(k) for k in self.exponents))
        object.__setattr__(self, "args", tuple(self.args))
        object.__setattr__(self, "shift", _shift_value(self.shift))
        if len(self.exponents) != len(self.args) or not 1 <= len(self.exponents) <= 3:
            raise SpecError("depth must be 1, 2 or 3 with one argument per exponent", "arity")
        if min(self.exponents) < 1:
            raise SpecError("exponents must be positive integers", "exponents >= 1")
        _check_not_negative_integer(self.shift, "multiple polylogarithm", self.eps_pole)

    @property
    def depth(self) -> int:
        return len(self.exponents)

    @property
    def admissible(self) -> bool:
        return not (self.exponents[-1] == 1 and self.args[-1].is_one)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    error_estimate: float
    terms_used: int
    accelerated: bool


# -- accelerated engine ------------------------------------------------------


class _Seq:
    __slots__ = ("head", "exp")

    def __init__(self, head, exp):
        self.head = head
        self.exp = exp


class _Engine:
    """Head arrays for ``n = 1..M`` plus expansions in ``s = n + sigma``."""

    def __init__(self, mp, M: int, E: int, sigma):
        self.mp = mp
        self.M = M
        self.E = E
        self.sigma = sigma
        self.trailing = 0.0

    def power(self, x: RootOfUnity, k: int, c) -> _Seq:
        mp = self.mp
        per = [(x ** j).value(mp) for j in range(x.order)]
        head = [per[n % x.order] / (n + c) ** k for n in range(1, self.M + 1)]
        exp = Expansion(self.E, {x: power_series(k, c - self.sigma, self.E, mp)})
        return _Seq(head, exp)

    def product(self, a: _Seq, b: _Seq) -> _Seq:
        return _Seq([u * v for u, v in zip(a.head, b.head)], a.exp.mul(b.exp, self.mp))

    def _sum(self, a: _Seq):
        mp = self.mp
        tail = a.exp.tail(mp)
        acc = mp.zero
        cum = []
        for v in a.head:
            acc += v
            cum.append(acc)
        total = acc + tail.evaluate(self.M, self.sigma, mp)
        self.trailing += tail.trailing(self.M, self.sigma, mp)
        return cum, tail, total

    def partial(self, a: _Seq, strict: bool) -> _Seq:
        mp = self.mp
        cum, tail, total = self._sum(a)
        exp = Expansion.constant(total, self.E, mp).add(tail, mp, -1)
        if strict:
            cum = [mp.zero] + cum[:-1]
            exp = exp.add(a.exp, mp, -1)
        return _Seq(cum, exp)

    def total(self, a: _Seq):
        """Sum over all ``n >= 1`` as a polynomial in ``L = log n`` (constant first)."""
        mp = self.mp
        _, tail, total = self._sum(a)
        return [total] + [-c for c in tail.log_growth(mp)]


def _parameters(ctx: PrecisionContext, roots, sigma: complex):
    tol = ctx.target_tol * 1e-3
    E = math.ceil(math.log(1 / tol) / math.log(2 * math.e)) + 6
    L = lcm_order(roots)
    rho = 2 * math.pi / max(L, 1)
    s0 = max(40.0, 2.0 * E / rho + 10)
    M_needed = max(8, math.ceil(s0 - sigma.real))
    return min(M_needed, ctx.max_terms), E, M_needed


def _finish(poly, engine: _Engine, ctx, M, what):
    err = 10.0 * engine.trailing
    if err > ctx.target_tol:
        raise PrecisionError(f"{what}: tail estimate {err:.3g} exceeds tol with {M} head terms", achieved=err)
    return poly, err


def _euler_engine(spec: SumSpec, ctx: PrecisionContext, exact_shift=None):
    mp = ctx.mp
    # exact_shift: the shift already in working precision (a complex round-trip loses bits)
    a = to_mp(mp, spec.shift) if exact_shift is None else exact_shift
    sigma = mp.zero if spec.family == "St" else a
    M, E, M_needed = _parameters(ctx, spec.roots(), spec.outer_shift)
    eng = _Engine(mp, M, E, sigma)
    c_in = mp.zero if spec.family == "R" else a
    seq = eng.power(spec.outer_arg, spec.outer_exponent, sigma)
    for p, x in zip(spec.inner_exponents, spec.inner_args):
        seq = eng.product(seq, eng.partial(eng.power(x, p, c_in), strict=False))
    return eng, seq, M, M_needed


def _mpl_engine(spec: MplSpec, ctx: PrecisionContext, exact_shift=None):
    mp = ctx.mp
    a = to_mp(mp, spec.shift) if exact_shift is None else exact_shift
    M, E, M_needed = _parameters(ctx, spec.args, spec.shift)
    eng = _Engine(mp, M, E, a)
    seq = None
    for k, x in zip(spec.exponents, spec.args):
        term = eng.power(x, k, a)
        seq = term if seq is None else eng.product(term, eng.partial(seq, strict=True))
    return eng, seq, M, M_needed


def euler_sum_poly(spec: SumSpec, ctx: PrecisionContext = DEFAULT_CONTEXT, exact_shift=None):
    """Accelerated value as a polynomial in ``L = log n`` plus error estimate."""
    eng, seq, M, M_needed = _euler_engine(spec, ctx, exact_shift)
    return _finish(eng.total(seq), eng, ctx, M, "euler sum") + (M,)


def mpl_poly(spec: MplSpec, ctx: PrecisionContext = DEFAULT_CONTEXT, exact_shift=None):
    """Accelerated value as a polynomial in ``L = log n``; non-admissible specs give degree >= 1."""
    eng, seq, M, M_needed = _mpl_engine(spec, ctx, exact_shift)
    return _finish(eng.total(seq), eng, ctx, M, "multiple polylogarithm") + (M,)


# -- brute force oracle ------------------------------------------------------


def _period_table(x: RootOfUnity):
    return [complex(x ** j) for j in range(x.order)]


def _oracle_window(roots) -> int:
    return lcm_order(roots)


def oracle_tail_bound(stats, n_terms: int, roots, weight: int) -> float:
    """Heuristic bound on ``|period-averaged partial sum - limit|``.

    ``stats`` carries ``max|f|`` and ``|mean f|`` over the last period of the
    summand.  The non-oscillating part is bounded by ``n * |mean f|`` (the
    integral of a decay at least ``n**-2``); oscillating parts are left with
    ``O(P * B * |f'|)`` after averaging over the period ``P``, where
    ``B = 1/|sin(pi k/N)|`` bounds partial sums of ``y**n``.
    """
    max_f, mean_f = stats
    P = _oracle_window(roots)
    B = 1.0 / math.sin(math.pi / P) if P > 1 else 1.0
    osc = (2 * B * P + 2 * B * B) * (weight + 2) * max_f / n_terms
    log_slack = (1 + math.log(n_terms)) ** 2
    return 4.0 * (n_terms * mean_f + osc) * log_slack


def _brute_euler(spec: SumSpec, n_terms: int):
    from ._kernels import euler_partial

    window = _oracle_window(spec.roots())
    val, max_f, mean_f = euler_partial(
        n_terms,
        window,
        _period_table(spec.outer_arg),
        spec.outer_exponent,
        spec.outer_shift,
        [_period_table(x) for x in spec.inner_args],
        list(spec.inner_exponents),
        spec.inner_shift,
    )
    bound = oracle_tail_bound((max_f, mean_f), n_terms, spec.roots(), spec.weight)
    return EvalResult(val, bound, n_terms, False)


def _brute_mpl(spec: MplSpec, n_terms: int):
    from ._kernels import mpl_partial

    window = _oracle_window(spec.args)
    val, max_f, mean_f = mpl_partial(
        n_terms, window, [_period_table(x) for x in spec.args], list(spec.exponents), spec.shift
    )
    bound = oracle_tail_bound((max_f, mean_f), n_terms, spec.args, sum(spec.exponents))
    return EvalResult(val, bound, n_terms, False)


# -- public evaluators -------------------------------------------------------


def eval_euler_sum(spec: SumSpec, ctx: PrecisionContext = DEFAULT_CONTEXT, *, accelerated: bool = True) -> EvalResult:
    """Value of the Euler sum described by ``spec``.

    ``accelerated=False`` selects the brute-force oracle: ``ctx.max_terms``
    double-precision terms, period-averaged, with :func:`oracle_tail_bound`
    as the error estimate.
    """
    if not accelerated:
        return _brute_euler(spec, ctx.max_terms)
    poly, err, M = euler_sum_poly(spec, ctx)
    if any(abs(c) > ctx.target_tol for c in poly[1:]):
        raise DivergenceError("Euler sum diverges")
    return EvalResult(poly[0], err, M, True)


def eval_mpl(spec: MplSpec, ctx: PrecisionContext = DEFAULT_CONTEXT, *, accelerated: bool = True) -> EvalResult:
    """Value of the multiple Hurwitz polylogarithm described by ``spec``."""
    if not spec.admissible:
        raise DivergenceError(f"(k_r, x_r) = ({spec.exponents[-1]}, 1): the outermost sum diverges")
    if not accelerated:
        return _brute_mpl(spec, ctx.max_terms)
    poly, err, M = mpl_poly(spec, ctx)
    return EvalResult(poly[0], err, M, True)


# -- bridges to multiple polylogarithms -------------------------------------


def linear_sum_to_mpl(p: int, q: int, x1: RootOfUnity, x: RootOfUnity, a=0j):
    """``S_{p;q}(x1; x)`` with shift ``a`` as ``Li_{p,q}(x1, x) + Li_{p+q}(x1 x)``."""
    from .expr import ExpressionTree, Shift, mpl_atom

    SumSpec("S", (p,), q, (x1,), x, a)
    A = Shift(1)
    return ExpressionTree.from_terms(
        [
            (1, [mpl_atom((p, q), (x1, x), A)]),
            (1, [mpl_atom((p + q,), (x1 * x,), A)]),
        ],
        shift=a,
    )


def quadratic_sum_to_mpl(p1: int, p2: int, q: int, x1: RootOfUnity, x2: RootOfUnity, x: RootOfUnity, a=0j):
    """``S_{p1,p2;q}(x1, x2; x)`` as a combination of multiple polylogarithms.

    ``-Li_{p2,q,p1}(x2,x,x1) - Li_{p2+q,p1}(x2 x, x1)
    + Li_{p1}(x1) (Li_{p2,q}(x2,x) + Li_{p2+q}(x x2))``, all with shift ``a``.
    """
    from .expr import ExpressionTree, Shift, mpl_atom

    A = Shift(1)
    SumSpec("S", (p1, p2), q, (x1, x2), x, a)
    for pj, xj in ((p1, x1), (p2, x2)):
        if pj == 1 and xj.is_one:
            raise SpecError("(p_j, x_j) = (1, 1) makes the expansion divergent", "(p_j, x_j) != (1, 1)")
    li1 = mpl_atom((p1,), (x1,), A)
    return ExpressionTree.from_terms(
        [
            (-1, [mpl_atom((p2, q, p1), (x2, x, x1), A)]),
            (-1, [mpl_atom((p2 + q, p1), (x2 * x, x1), A)]),
            (1, [li1, mpl_atom((p2, q), (x2, x), A)]),
            (1, [li1, mpl_atom((p2 + q,), (x * x2,), A)]),
        ],
        shift=a,
    )


def stuffle_terms(k1: int, x1: RootOfUnity, k2: int, x2: RootOfUnity):
    """Index-set split of ``Li_k1(x1) Li_k2(x2)``: ``(k1,k2), (k2,k1)`` orderings plus the diagonal."""
    return [((k1, k2), (x1, x2)), ((k2, k1), (x2, x1)), ((k1 + k2,), (x1 * x2,))]


def spec_roots(roots: Sequence[RootOfUnity]) -> int:
    return lcm_order(roots)
