"""Parity relations for linear sums ``S``, ``St`` and ``R`` (one inner factor).

Each relation has arguments ``(x, y)`` and exponents ``(p, q)``; the left side
pairs a sum at ``(y; (xy)^-1)`` with its mirror at ``(y^-1; xy)`` and the right
side consists of single polylogarithms only.  Worked instances at fixed
exponents are kept verbatim next to the general formulas so the two can be
compared term by term.
"""

from __future__ import annotations

from .notation import G, T, binom, sgn


def _phi(n, m, x):
    # (-1)^m Li_{m+1}(x; 1-a) - x Li_{m+1}(x^-1; a)
    return G(T(sgn(m), n.Li(m + 1, x, "1-a")), T(-1, x, n.Li(m + 1, x.inverse(), "a")))


def _plain(n, m, x):
    # (-1)^m Li_{m+1}(x) - Li_{m+1}(x^-1)
    return G(T(sgn(m), n.Li(m + 1, x)), T(-1, n.Li(m + 1, x.inverse())))


# -- family S -------------------------------------------------------------------


def s_lhs(e, v, n):
    (p, q), (x, y) = e, v
    xy = x * y
    return [
        T(x, n.S(p, q, y, xy.inverse(), "a-1")),
        T(-sgn(p + q), n.S(p, q, y.inverse(), xy, "-a")),
    ]


def s_rhs(e, v, n):
    (p, q), (x, y) = e, v
    xy = x * y
    out = [
        T(x, n.Li(p, y, "a"), n.Li(q, xy.inverse(), "a")),
        T(sgn(q), y.inverse(), n.Li(p, y, "a"), n.Li(q, xy, "1-a")),
        T(sgn(p + q - 1), n.Li(p + q, x, "1-a")),
    ]
    for m in range(p):
        out.append(T(sgn(q) * binom(p + q - m - 2, q - 1), _phi(n, m, x), n.Li(p + q - m - 1, xy)))
    for m in range(q):
        grp = G(T(sgn(m), x, n.Li(m + 1, x.inverse(), "a")), T(-1, n.Li(m + 1, x, "1-a")))
        out.append(T(sgn(q) * binom(p + q - m - 2, p - 1), grp, n.Li(p + q - m - 1, y)))
    return out


def s_ex12_lhs(e, v, n):
    x, y = v
    xy = x * y
    return [T(x, n.S(1, 2, y, xy.inverse(), "a-1")), T(n.S(1, 2, y.inverse(), xy, "-a"))]


def s_ex12_rhs(e, v, n):
    x, y = v
    xy, xi = x * y, x.inverse()
    Li = n.Li
    return [
        T(x, Li(1, y, "a"), Li(2, xy.inverse(), "a")),
        T(y.inverse(), Li(1, y, "a"), Li(2, xy, "1-a")),
        T(Li(3, x, "1-a")),
        T(G(T(Li(1, x, "1-a")), T(-1, x, Li(1, xi, "a"))), Li(2, xy)),
        T(G(T(x, Li(1, xi, "a")), T(-1, Li(1, x, "1-a"))), Li(2, y)),
        T(-1, G(T(x, Li(2, xi, "a")), T(Li(2, x, "1-a"))), Li(1, y)),
    ]


def s_ex21_lhs(e, v, n):
    x, y = v
    xy = x * y
    return [T(x, n.S(2, 1, y, xy.inverse(), "a-1")), T(n.S(2, 1, y.inverse(), xy, "-a"))]


def s_ex21_rhs(e, v, n):
    x, y = v
    xy, xi = x * y, x.inverse()
    Li = n.Li
    return [
        T(x, Li(2, y, "a"), Li(1, xy.inverse(), "a")),
        T(-1, y.inverse(), Li(2, y, "a"), Li(1, xy, "1-a")),
        T(Li(3, x, "1-a")),
        T(-1, G(T(Li(1, x, "1-a")), T(-1, x, Li(1, xi, "a"))), Li(2, xy)),
        T(G(T(Li(2, x, "1-a")), T(x, Li(2, xi, "a"))), Li(1, xy)),
        T(-1, G(T(x, Li(1, xi, "a")), T(-1, Li(1, x, "1-a"))), Li(2, y)),
    ]


# -- family St ------------------------------------------------------------------


def st_lhs(e, v, n):
    (p, q), (x, y) = e, v
    xy = x * y
    return [
        T(y.inverse(), n.St(p, q, y, xy.inverse(), "a-1")),
        T(-sgn(p + q), n.St(p, q, y.inverse(), xy, "-a")),
    ]


def st_rhs(e, v, n):
    (p, q), (x, y) = e, v
    xy, yi = x * y, y.inverse()
    Li = n.Li
    out = [
        T(yi, Li(q, xy.inverse()), Li(p, y, "a")),
        T(sgn(q), yi, Li(q, xy), Li(p, y, "a")),
        T(sgn(q) * binom(p + q - 1, p - 1), yi, Li(p + q, y, "a")),
    ]
    for m in range(p):
        out.append(T(sgn(q) * binom(p + q - m - 2, q - 1), xy.inverse(), Li(p + q - m - 1, xy, "a"), _phi(n, m, x)))
    for m in range(q):
        grp = G(T(sgn(m), Li(m + 1, x.inverse())), T(-1, Li(m + 1, x)))
        out.append(T(sgn(q) * binom(p + q - m - 2, p - 1), yi, Li(p + q - m - 1, y, "a"), grp))
    return out


def st_ex12_lhs(e, v, n):
    x, y = v
    xy = x * y
    return [T(y.inverse(), n.St(1, 2, y, xy.inverse(), "a-1")), T(n.St(1, 2, y.inverse(), xy, "-a"))]


def st_ex12_rhs(e, v, n):
    x, y = v
    xy, xi, yi = x * y, x.inverse(), y.inverse()
    Li = n.Li
    return [
        T(yi, Li(2, xy.inverse()), Li(1, y, "a")),
        T(yi, Li(2, xy), Li(1, y, "a")),
        T(yi, Li(3, y, "a")),
        T(xy.inverse(), Li(2, xy, "a"), G(T(Li(1, x, "1-a")), T(-1, x, Li(1, xi, "a")))),
        T(yi, Li(2, y, "a"), G(T(Li(1, xi)), T(-1, Li(1, x)))),
        T(-1, yi, Li(1, y, "a"), G(T(Li(2, xi)), T(Li(2, x)))),
    ]


def st_ex21_lhs(e, v, n):
    x, y = v
    xy = x * y
    return [T(y.inverse(), n.St(2, 1, y, xy.inverse(), "a-1")), T(n.St(2, 1, y.inverse(), xy, "-a"))]


def st_ex21_rhs(e, v, n):
    x, y = v
    xy, xi, yi = x * y, x.inverse(), y.inverse()
    Li = n.Li
    return [
        T(yi, Li(1, xy.inverse()), Li(2, y, "a")),
        T(-1, yi, Li(1, xy), Li(2, y, "a")),
        T(-2, yi, Li(3, y, "a")),
        T(-1, xy.inverse(), Li(2, xy, "a"), G(T(Li(1, x, "1-a")), T(-1, x, Li(1, xi, "a")))),
        T(xy.inverse(), Li(1, xy, "a"), G(T(Li(2, x, "1-a")), T(x, Li(2, xi, "a")))),
        T(-1, yi, Li(2, y, "a"), G(T(Li(1, xi)), T(-1, Li(1, x)))),
    ]


# -- family R -------------------------------------------------------------------


def r_lhs(e, v, n):
    (p, q), (x, y) = e, v
    xy = x * y
    return [
        T(xy.inverse(), n.R(p, q, y, xy.inverse(), "a+1")),
        T(-sgn(p + q), n.R(p, q, y.inverse(), xy, "-a")),
    ]


def r_rhs(e, v, n):
    (p, q), (x, y) = e, v
    xy, xi, yi = x * y, x.inverse(), y.inverse()
    Li = n.Li
    out = [
        T(Li(p, y), Li(q, xy.inverse(), "a+1")),
        T(sgn(q), xy.inverse(), Li(p, y), Li(q, xy, "-a")),
        T(sgn(q) * binom(p + q - 1, p), xy.inverse(), Li(p + q, xy, "-a")),
    ]
    for m in range(p):
        out.append(T(sgn(q) * binom(p + q - m - 2, q - 1), xy.inverse(), _plain(n, m, x), Li(p + q - m - 1, xy, "-a")))
    for m in range(q):
        grp = G(T(sgn(m), Li(m + 1, xi, "a+1")), T(-1, xi, Li(m + 1, x, "-a")))
        out.append(T(sgn(q) * binom(p + q - m - 2, p - 1), yi, Li(p + q - m - 1, y, "-a"), grp))
    return out


def r_ex12_lhs(e, v, n):
    x, y = v
    xy = x * y
    return [T(xy.inverse(), n.R(1, 2, y, xy.inverse(), "a+1")), T(n.R(1, 2, y.inverse(), xy, "-a"))]


def r_ex12_rhs(e, v, n):
    x, y = v
    xy, xi, yi = x * y, x.inverse(), y.inverse()
    Li = n.Li
    return [
        T(Li(1, y), Li(2, xy.inverse(), "a+1")),
        T(xy.inverse(), Li(1, y), Li(2, xy, "-a")),
        T(2, xy.inverse(), Li(3, xy, "-a")),
        T(xy.inverse(), G(T(Li(1, x)), T(-1, Li(1, xi))), Li(2, xy, "-a")),
        T(yi, Li(2, y, "-a"), G(T(Li(1, xi, "a+1")), T(-1, xi, Li(1, x, "-a")))),
        T(-1, yi, Li(1, y, "-a"), G(T(Li(2, xi, "a+1")), T(xi, Li(2, x, "-a")))),
    ]


def r_ex21_lhs(e, v, n):
    x, y = v
    xy = x * y
    return [T(xy.inverse(), n.R(2, 1, y, xy.inverse(), "a+1")), T(n.R(2, 1, y.inverse(), xy, "-a"))]


def r_ex21_rhs(e, v, n):
    x, y = v
    xy, xi, yi = x * y, x.inverse(), y.inverse()
    Li = n.Li
    return [
        T(Li(2, y), Li(1, xy.inverse(), "a+1")),
        T(-1, xy.inverse(), Li(2, y), Li(1, xy, "-a")),
        T(-1, xy.inverse(), Li(3, xy, "-a")),
        T(-1, xy.inverse(), G(T(Li(1, x)), T(-1, Li(1, xi))), Li(2, xy, "-a")),
        T(xy.inverse(), G(T(Li(2, x)), T(Li(2, xi))), Li(1, xy, "-a")),
        T(-1, yi, Li(2, y, "-a"), G(T(Li(1, xi, "a+1")), T(-1, xi, Li(1, x, "-a")))),
    ]


def hypotheses(e, v):
    (p, q), (x, y) = e, v
    return [
        ("(p,y) != (1,1)", not (p == 1 and y.is_one)),
        ("(q,xy) != (1,1)", not (q == 1 and (x * y).is_one)),
    ]
