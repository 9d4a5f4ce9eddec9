"""Exact-coefficient linear combinations of products of evaluable atoms.

Atoms are symbolic in a single complex shift ``a``: each carries an affine
denominator shift ``c*a + k``.  Coefficients are exact (rational times a root
of unity).  A factor is either an atom or a parenthesized sub-combination, so a
tree keeps the grouping in which an identity is written; :meth:`expand`
distributes it away.

Evaluation returns a polynomial in a formal symbol ``L = log n``: divergent
atoms such as ``sum 1/(n+c)`` are cut off at a common ``n`` and only their
``L``-free part is kept, so a combination is well defined exactly when every
positive power of ``L`` cancels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivergenceError
from .precision import DEFAULT_CONTEXT, PrecisionContext
from .roots import RootOfUnity


@dataclass(frozen=True, order=True)
class Shift:
    """Affine shift ``coef_a * a + const``."""

    coef_a: int
    const: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "const", Fraction(self.const))

    def __str__(self):
        parts = []
        if self.coef_a:
            parts.append({1: "a", -1: "-a"}.get(self.coef_a, f"{self.coef_a}a"))
        if self.const or not parts:
            c = str(self.const)
            if parts and not c.startswith("-"):
                c = "+" + c
            parts.append(c)
        return "".join(parts)

    @property
    def is_zero(self):
        return self.coef_a == 0 and self.const == 0


def shift_of(s) -> Shift:
    if isinstance(s, Shift):
        return s
    if isinstance(s, tuple):
        return Shift(*s)
    return Shift(0, Fraction(s))


ZERO_SHIFT = Shift(0)


def _roots_text(roots):
    return ",".join(str(r) for r in roots)


@dataclass(frozen=True)
class Mpl:
    """Multiple Hurwitz polylogarithm ``sum_{n_1<...<n_r} prod x_j^n_j/(n_j + shift)^k_j``."""

    exponents: tuple
    args: tuple
    shift: Shift = ZERO_SHIFT

    @property
    def depth(self):
        return len(self.exponents)

    @property
    def order(self):
        return self.depth - 1

    @property
    def divergent(self):
        return self.exponents[-1] == 1 and self.args[-1].is_one

    def __str__(self):
        ks = ",".join(map(str, self.exponents))
        if self.shift.is_zero:
            return f"Li[{ks}]({_roots_text(self.args)})"
        return f"Li[{ks}]({_roots_text(self.args)}; {self.shift})"


@dataclass(frozen=True)
class EulerSum:
    """Euler sum of family ``S``/``St``/``R`` whose shift is the affine ``shift``."""

    family: str
    inner_exponents: tuple
    outer_exponent: int
    inner_args: tuple
    outer_arg: RootOfUnity
    shift: Shift = ZERO_SHIFT

    @property
    def order(self):
        return len(self.inner_exponents)

    def __str__(self):
        ps = ",".join(map(str, self.inner_exponents))
        return (
            f"{self.family}[{ps};{self.outer_exponent}]"
            f"({_roots_text(self.inner_args)}; {self.outer_arg}; {self.shift})"
        )


Atom = Union[Mpl, EulerSum]


def mpl_atom(exponents, args, shift=0) -> Mpl:
    return Mpl(tuple(exponents), tuple(args), shift_of(shift))


def li(k: int, x: RootOfUnity, shift=0) -> Mpl:
    return Mpl((k,), (x,), shift_of(shift))


def esum(family, inner_exponents, q, inner_args, outer_arg, shift=0) -> EulerSum:
    return EulerSum(family, tuple(inner_exponents), q, tuple(inner_args), outer_arg, shift_of(shift))


@dataclass(frozen=True)
class Coef:
    """Exact coefficient ``rational * root``."""

    rational: Fraction
    root: RootOfUnity = RootOfUnity(1, 0)

    def __post_init__(self):
        # canonical form: root angle in [0, pi), sign carried by the rational
        r = Fraction(self.rational)
        root = self.root
        if 2 * root.index >= root.order and not root.is_one:
            root = RootOfUnity(2 * root.order, 2 * root.index + root.order)
            r = -r
        object.__setattr__(self, "rational", r)
        object.__setattr__(self, "root", root)

    def __mul__(self, other):
        other = as_coef(other)
        return Coef(self.rational * other.rational, self.root * other.root)

    __rmul__ = __mul__

    def __neg__(self):
        return Coef(-self.rational, self.root)

    def value(self, mp):
        r = mp.mpf(self.rational.numerator) / self.rational.denominator
        return r if self.root.is_one else r * self.root.value(mp)

    def __str__(self):
        r = self.rational
        if self.root.is_one:
            return str(r)
        if r == 1:
            return str(self.root)
        if r == -1:
            return f"-{self.root}" if not str(self.root).startswith("-") else str(self.root)[1:]
        return f"{r}*{self.root}"


def as_coef(c) -> Coef:
    if isinstance(c, Coef):
        return c
    if isinstance(c, RootOfUnity):
        return Coef(Fraction(1), c)
    return Coef(Fraction(c))


@dataclass(frozen=True)
class Group:
    """A parenthesized sub-combination used as a single factor."""

    tree: "ExpressionTree"

    @property
    def order(self):
        return self.tree.max_order()

    def __str__(self):
        return f"({self.tree.text()})"


Factor = Union[Mpl, EulerSum, Group]


@dataclass(frozen=True)
class Term:
    coef: Coef
    factors: tuple

    def text(self):
        body = " * ".join(str(f) for f in self.factors)
        c = self.coef
        if not body:
            return str(c)
        if c.rational == 1 and c.root.is_one:
            return body
        if c.rational == -1 and c.root.is_one:
            return "-" + body
        return f"{c} * {body}"


class ExpressionTree:
    """Sum of terms ``coef * prod(factors)``."""

    def __init__(self, terms: Iterable[Term] = (), shift=None):
        self.terms = tuple(terms)
        self.shift = shift

    @classmethod
    def from_terms(cls, pairs, shift=None) -> "ExpressionTree":
        terms = []
        for c, factors in pairs:
            c = as_coef(c)
            if c.rational == 0:
                continue
            terms.append(Term(c, tuple(_as_factor(f) for f in factors)))
        return cls(terms, shift)

    def __add__(self, other):
        return ExpressionTree(self.terms + other.terms, self.shift if self.shift is not None else other.shift)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        c = as_coef(c)
        return ExpressionTree((Term(c * t.coef, t.factors) for t in self.terms), self.shift)

    def __len__(self):
        return len(self.terms)

    @property
    def n_terms(self):
        return len(self.terms)

    def atoms(self):
        out = []
        for t in self.terms:
            for f in t.factors:
                if isinstance(f, Group):
                    out.extend(f.tree.atoms())
                else:
                    out.append(f)
        return out

    def max_order(self):
        return max((a.order for a in self.atoms()), default=-1)

    def expand(self) -> "ExpressionTree":
        """Distribute grouped factors; like terms are merged."""
        out = []
        for t in self.terms:
            partial = [(t.coef, ())]
            for f in t.factors:
                if isinstance(f, Group):
                    sub = f.tree.expand()
                    partial = [(c * s.coef, fs + s.factors) for c, fs in partial for s in sub.terms]
                else:
                    partial = [(c, fs + (f,)) for c, fs in partial]
            out.extend(partial)
        merged: dict = {}
        order = []
        for c, fs in out:
            key = (tuple(sorted(fs, key=str)), c.root)
            if key not in merged:
                merged[key] = Fraction(0)
                order.append(key)
            merged[key] += c.rational
        terms = [Term(Coef(merged[k], k[1]), k[0]) for k in order if merged[k] != 0]
        return ExpressionTree(terms, self.shift)

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, t in enumerate(self.terms):
            s = t.text()
            if i and not s.startswith("-"):
                s = "+ " + s
            elif i:
                s = "- " + s[1:]
            parts.append(s)
        return " ".join(parts)

    def canonical_text(self) -> str:
        """Expanded form with factors and terms in sorted order, one term per line."""
        lines = []
        for t in self.expand().terms:
            fs = " * ".join(sorted(str(f) for f in t.factors)) or "1"
            lines.append(f"{t.coef} * {fs}" if not (t.coef.rational == 1 and t.coef.root.is_one) else fs)
        return "\n".join(sorted(lines)) if lines else "0"

    def __str__(self):
        return self.text()

    def evaluate(self, a=None, ctx: PrecisionContext = DEFAULT_CONTEXT, evaluator=None):
        """Numeric value at shift ``a``; raises if an ``L``-divergence survives."""
        a = self.shift if a is None else a
        ev = evaluator or TreeEvaluator(ctx, a)
        poly, err = ev.tree_poly(self)
        ev.check_finite(poly, "expression")
        return poly[0], err


def _as_factor(f):
    if isinstance(f, ExpressionTree):
        return Group(f)
    return f


def group(pairs) -> Group:
    return Group(ExpressionTree.from_terms(pairs))


# -- polynomial-in-L arithmetic ----------------------------------------------


def _pmul(p, q, mp):
    out = [mp.zero] * (len(p) + len(q) - 1)
    for i, u in enumerate(p):
        if not u:
            continue
        for j, v in enumerate(q):
            out[i + j] += u * v
    return out


def _padd(p, q, mp, c=1):
    n = max(len(p), len(q))
    out = list(p) + [mp.zero] * (n - len(p))
    for j, v in enumerate(q):
        out[j] += c * v
    return out


class TreeEvaluator:
    """Evaluates atoms at a fixed ``a`` with a per-instance cache."""

    def __init__(self, ctx: PrecisionContext, a):
        self.ctx = ctx
        self.mp = ctx.mp
        self.a = complex(a)
        self._cache: dict = {}

    def shift_value(self, s: Shift):
        mp = self.mp
        a = mp.mpc(self.a.real, self.a.imag) if self.a.imag else mp.mpf(self.a.real)
        c = mp.mpf(s.const.numerator) / s.const.denominator
        return s.coef_a * a + c

    def atom_poly(self, atom):
        hit = self._cache.get(atom)
        if hit is None:
            hit = self._compute(atom)
            self._cache[atom] = hit
        return hit

    def _compute(self, atom):
        from . import euler_sums, special

        mp = self.mp
        ctx = self.ctx
        c = self.shift_value(atom.shift)
        if isinstance(atom, Mpl):
            if atom.depth == 1:
                k, x = atom.exponents[0], atom.args[0]
                if k == 1 and x.is_one:
                    return [-special.digamma(1 + c, ctx), mp.one], ctx.target_tol
                return [special.hurwitz_polylog(k, x, c, ctx)], ctx.target_tol
            spec = euler_sums.MplSpec(atom.exponents, atom.args, complex(c), eps_pole=ctx.eps_pole)
            poly, err, _ = euler_sums.mpl_poly(spec, ctx, exact_shift=c)
            return poly, err
        spec = euler_sums.SumSpec(
            atom.family, atom.inner_exponents, atom.outer_exponent, atom.inner_args, atom.outer_arg,
            complex(c), eps_pole=ctx.eps_pole, allow_divergent=True,
        )
        poly, err, _ = euler_sums.euler_sum_poly(spec, ctx, exact_shift=c)
        return poly, err

    def factor_poly(self, f):
        if isinstance(f, Group):
            return self.tree_poly(f.tree)
        return self.atom_poly(f)

    def tree_poly(self, tree: ExpressionTree):
        mp = self.mp
        total = [mp.zero]
        err = 0.0
        for t in tree.terms:
            cv = t.coef.value(mp)
            poly = [cv]
            mag = abs(float(abs(cv)))
            bound = mag
            for f in t.factors:
                fp, fe = self.factor_poly(f)
                poly = _pmul(poly, fp, mp)
                size = float(abs(fp[0]))
                mag *= size
                bound *= size + fe
            total = _padd(total, poly, mp)
            err += bound - mag
        return total, err

    def check_finite(self, poly, what):
        scale = max(1.0, float(abs(poly[0])))
        for c in poly[1:]:
            if float(abs(c)) > 1e3 * self.ctx.target_tol * scale:
                raise DivergenceError(f"{what}: log-divergent parts do not cancel")

    def divergent_residue(self, poly) -> float:
        return max((float(abs(c)) for c in poly[1:]), default=0.0)


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)
