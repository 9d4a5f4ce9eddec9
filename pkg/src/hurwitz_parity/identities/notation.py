"""Shorthand used to write identities close to their printed form.

Single and multiple polylogarithms are written with a *label* ``b``:
``Li_k(x; b)`` stands for ``sum x^n / (n + b - 1)^k``, so ``Li_k(x; 1)`` is the
ordinary polylogarithm.  Euler sums are written with their *denominator shift*
directly, ``S^{(c)}`` having ``(n + c)`` in every denominator.

Labels and shifts are affine in ``a`` and are given as short strings:

    label "a"    -> denominator shift a - 1
    label "1-a"  -> -a
    label "a+1"  -> a
    label "-a"   -> -a - 1

A :class:`Notation` with ``label_offset=0`` instead reads every polylogarithm
label as the denominator shift itself; it exists only to test the alternative
reading of the depth-2/3 reflection formulas.
"""

from __future__ import annotations

from fractions import Fraction

from ..expr import Coef, EulerSum, ExpressionTree, Group, Mpl, Shift, as_coef, binom, esum, mpl_atom
from ..roots import RootOfUnity

_AFFINE = {
    None: Shift(0, 0),
    "a": Shift(1, 0),
    "-a": Shift(-1, 0),
    "1-a": Shift(-1, 1),
    "a+1": Shift(1, 1),
    "a-1": Shift(1, -1),
}

CONVENTIONS = {"label": -1, "denominator": 0}


def affine(text) -> Shift:
    return _AFFINE[text]


class Notation:
    """Atom constructors for one reading of polylogarithm labels."""

    def __init__(self, convention: str = "label"):
        self.convention = convention
        self.offset = CONVENTIONS[convention]

    def Li(self, k: int, x: RootOfUnity, label=None) -> Mpl:
        return self.Lim((k,), (x,), label)

    def Lim(self, ks, xs, label=None) -> Mpl:
        if label is None:
            return mpl_atom(ks, xs, 0)
        s = _AFFINE[label]
        return mpl_atom(ks, xs, Shift(s.coef_a, s.const + self.offset))

    @staticmethod
    def S(ps, q, xs, x, sup=None) -> EulerSum:
        return _esum("S", ps, q, xs, x, sup)

    @staticmethod
    def St(ps, q, xs, x, sup=None) -> EulerSum:
        return _esum("St", ps, q, xs, x, sup)

    @staticmethod
    def R(ps, q, xs, x, sup=None) -> EulerSum:
        return _esum("R", ps, q, xs, x, sup)


def _esum(family, ps, q, xs, x, sup):
    if isinstance(ps, int):
        ps, xs = (ps,), (xs,)
    return esum(family, ps, q, xs, x, _AFFINE[sup])


def sgn(e: int) -> int:
    return -1 if e % 2 else 1


def T(*items):
    """One term: numbers and roots multiply into the coefficient, the rest are factors."""
    c = Coef(Fraction(1))
    factors = []
    for it in items:
        if isinstance(it, (int, Fraction, RootOfUnity, Coef)):
            c = c * as_coef(it)
        elif isinstance(it, ExpressionTree):
            factors.append(Group(it))
        else:
            factors.append(it)
    return c, tuple(factors)


def G(*terms) -> Group:
    """A parenthesized sub-combination."""
    return Group(ExpressionTree.from_terms(terms))


def tree(terms, a=None) -> ExpressionTree:
    return ExpressionTree.from_terms(terms, a)


def compositions(total: int, parts: int):
    """All ``parts``-tuples of nonnegative integers summing to ``total``."""
    if parts == 1:
        if total >= 0:
            yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def pairs_upto(total: int):
    """``(m, k)`` with ``m, k >= 0`` and ``m + k <= total``."""
    for s in range(total + 1):
        for m in range(s + 1):
            yield m, s - m


__all__ = ["Notation", "T", "G", "tree", "sgn", "binom", "compositions", "pairs_upto", "affine", "CONVENTIONS"]
