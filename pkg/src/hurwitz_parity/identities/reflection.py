"""Reflection formulas for multiple Hurwitz polylogarithms of depth 2 and 3.

``Li_{k_1..k_r}(x_1..x_r; b)`` pairs with ``x_1...x_r Li(x^-1; 1-b)``; the
combination reduces to lower depth.  Both follow from the ``S`` family
relations through

    S_{p;q}(x1; x)        = Li_{p,q}(x1, x) + Li_{p+q}(x1 x)
    S_{p1,p2;q}(x1,x2; x) = -Li_{p2,q,p1}(x2,x,x1) - Li_{p2+q,p1}(x2 x, x1)
                            + Li_{p1}(x1) (Li_{p2,q}(x2,x) + Li_{p2+q}(x x2)).

Builders take a :class:`Notation`, so the same code produces the
``"label"`` reading (the label ``b`` means denominator shift ``b - 1``) and the
``"denominator"`` reading.  Euler sums keep their denominator shift in both.
"""

from __future__ import annotations

from ..expr import as_coef
from . import linear, quadratic
from .notation import G, T, sgn


def _scaled(terms, k):
    k = as_coef(k)
    return [(c * k, fs) for c, fs in terms]


# -- depth 2 --------------------------------------------------------------------


def mpl2_lhs(e, v, n):
    (p, q), (x, y) = e, v
    return [
        T(n.Lim((p, q), (x, y), "a")),
        T(-sgn(p + q), x * y, n.Lim((p, q), (x.inverse(), y.inverse()), "1-a")),
    ]


def mpl2_rhs(e, v, n):
    (p, q), (x, y) = e, v
    P = x * y
    # S relation at x -> (xy)^-1, y -> x, scaled by xy
    out = _scaled(linear.s_rhs((p, q), (P.inverse(), x), n), P)
    out += [
        T(-1, n.Li(p + q, P, "a")),
        T(sgn(p + q), P, n.Li(p + q, P.inverse(), "1-a")),
    ]
    return out


def _pm(n, k, s, P):
    # Li_k(P^-1; 1-a) +/- P^-1 Li_k(P; a)
    return G(T(n.Li(k, P.inverse(), "1-a")), T(s, P.inverse(), n.Li(k, P, "a")))


def _mp(n, k, s, P):
    # P^-1 Li_k(P; a) +/- Li_k(P^-1; 1-a)
    return G(T(P.inverse(), n.Li(k, P, "a")), T(s, n.Li(k, P.inverse(), "1-a")))


def mpl2_ex22_lhs(e, v, n):
    x, y = v
    return [
        T(n.Lim((2, 2), (x, y), "a")),
        T(-1, x * y, n.Lim((2, 2), (x.inverse(), y.inverse()), "1-a")),
    ]


def mpl2_ex22_rhs(e, v, n):
    x, y = v
    P, Li = x * y, n.Li
    return [
        T(-1, Li(4, P, "a")),
        T(P, Li(4, P.inverse(), "1-a")),
        T(Li(2, x, "a"), Li(2, y, "a")),
        T(y, Li(2, x, "a"), Li(2, y.inverse(), "1-a")),
        T(-1, P, Li(4, P.inverse(), "1-a")),
        T(2, P, _pm(n, 1, -1, P), Li(3, y.inverse())),
        T(-1, P, _pm(n, 2, 1, P), Li(2, y.inverse())),
        T(2, P, _mp(n, 1, -1, P), Li(3, x)),
        T(-1, P, _mp(n, 2, 1, P), Li(2, x)),
    ]


def mpl2_ex23_lhs(e, v, n):
    x, y = v
    return [
        T(n.Lim((2, 3), (x, y), "a")),
        T(x * y, n.Lim((2, 3), (x.inverse(), y.inverse()), "1-a")),
    ]


def mpl2_ex23_rhs(e, v, n):
    x, y = v
    P, Li = x * y, n.Li
    return [
        T(-1, Li(5, P, "a")),
        T(-1, P, Li(5, P.inverse(), "1-a")),
        T(Li(2, x, "a"), Li(3, y, "a")),
        T(-1, y, Li(2, x, "a"), Li(3, y.inverse(), "1-a")),
        T(P, Li(5, P.inverse(), "1-a")),
        T(-3, P, _pm(n, 1, -1, P), Li(4, y.inverse())),
        T(P, _pm(n, 2, 1, P), Li(3, y.inverse())),
        T(-3, P, _mp(n, 1, -1, P), Li(4, x)),
        T(2, P, _mp(n, 2, 1, P), Li(3, x)),
        T(-1, P, _mp(n, 3, -1, P), Li(2, x)),
    ]


def mpl2_hypotheses(e, v):
    (p, q), (x, y) = e, v
    return [
        ("(p,x) != (1,1)", not (p == 1 and x.is_one)),
        ("(p,y) != (1,1)", not (p == 1 and y.is_one)),
        ("(q,y) != (1,1)", not (q == 1 and y.is_one)),
    ]


# -- depth 3 --------------------------------------------------------------------


def mpl3_lhs(e, v, n):
    (p, q, r), (x, y, z) = e, v
    inv = (x.inverse(), y.inverse(), z.inverse())
    return [
        T(n.Lim((p, q, r), (x, y, z), "a")),
        T(sgn(p + q + r), x * y * z, n.Lim((p, q, r), inv, "1-a")),
    ]


def _tail(n, p, q, r, x, y, z, label):
    # -Li_{p+q,r}(xy, z) + Li_r(z) (Li_{p,q}(x, y) + Li_{p+q}(xy))
    return [
        T(-1, n.Lim((p + q, r), (x * y, z), label)),
        T(n.Li(r, z, label), G(T(n.Lim((p, q), (x, y), label)), T(n.Li(p + q, x * y, label)))),
    ]


def mpl3_rhs(e, v, n):
    (p, q, r), (x, y, z) = e, v
    W = x * y * z
    # quadratic S relation with (p1, p2) = (r, p), inner args (z, x), outer exponent q
    out = _scaled(quadratic.s_rhs((r, p, q), (W.inverse(), z, x), n), -as_coef(W))
    out += _tail(n, p, q, r, x, y, z, "a")
    inv = _tail(n, p, q, r, x.inverse(), y.inverse(), z.inverse(), "1-a")
    out += _scaled(inv, sgn(p + q + r) * as_coef(W))
    return out


def mpl3_ex212_lhs(e, v, n):
    x, y, z = v
    inv = (x.inverse(), y.inverse(), z.inverse())
    return [
        T(n.Lim((2, 1, 2), (x, y, z), "a")),
        T(-1, x * y * z, n.Lim((2, 1, 2), inv, "1-a")),
    ]


def mpl3_ex212_rhs(e, v, n):
    x, y, z = v
    W, Li, Lim, S = x * y * z, n.Li, n.Lim, n.S
    xi, yi, zi = x.inverse(), y.inverse(), z.inverse()
    ps = lambda k, s: _pm(n, k, s, W)  # noqa: E731
    out = [
        T(-1, Lim((3, 2), (x * y, z), "a")),
        T(Li(2, z, "a"), G(T(Lim((2, 1), (x, y), "a")), T(Li(3, x * y, "a")))),
        T(W, Lim((3, 2), ((x * y).inverse(), zi), "1-a")),
        T(-1, W, Li(2, zi, "1-a"), G(T(Lim((2, 1), (xi, yi), "1-a")), T(Li(3, (x * y).inverse(), "1-a")))),
        T(-1, S(2, 3, z, x * y, "a-1")),
        T(-1, S(2, 3, x, y * z, "a-1")),
        T(-1, Li(2, z, "a"), S(2, 1, x, y, "a-1")),
        T(-1, Li(2, x, "a"), S(2, 1, z, y, "a-1")),
        T(-1, x * y, Li(2, z, "a"), S(2, 1, xi, yi, "-a")),
        T(-1, y * z, Li(2, x, "a"), S(2, 1, zi, yi, "-a")),
        T(W, Li(5, W.inverse(), "1-a")),
        T(Li(2, z, "a"), Li(3, x * y, "a")),
        T(Li(2, x, "a"), Li(3, y * z, "a")),
        T(Li(2, z, "a"), Li(2, x, "a"), Li(1, y, "a")),
        T(-1, y, Li(2, z, "a"), Li(2, x, "a"), Li(1, yi, "1-a")),
        T(-1, W, ps(1, -1), Li(4, yi)),
        T(W, ps(2, 1), Li(3, yi)),
        T(-1, W, ps(3, -1), Li(2, yi)),
        T(W, ps(4, 1), Li(1, yi)),
    ]
    for u in (z, x):
        ui = u.inverse()
        out += [
            T(-1, W, ps(1, -1), G(T(Li(2, u), Li(2, yi)), T(S(2, 2, ui, yi)))),
            T(2, W, ps(1, -1), G(T(Li(3, u), Li(1, yi)), T(-1, S(3, 1, ui, yi)))),
            T(W, ps(2, 1), G(T(Li(2, u), Li(1, yi)), T(S(2, 1, ui, yi)))),
        ]
    for u in (x, z):
        out += [
            T(W, Li(2, u), ps(3, -1)),
            T(2, W, Li(3, u), ps(2, 1)),
            T(3, W, Li(4, u), ps(1, -1)),
        ]
    out.append(T(W, Li(2, z), Li(2, x), ps(1, -1)))
    return out


def mpl3_hypotheses(e, v):
    (p, q, r), (x, y, z) = e, v
    return [
        ("(p,x) != (1,1)", not (p == 1 and x.is_one)),
        ("(q,y) != (1,1)", not (q == 1 and y.is_one)),
        ("(r,z) != (1,1)", not (r == 1 and z.is_one)),
    ]
