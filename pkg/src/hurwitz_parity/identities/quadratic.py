"""Parity relations for quadratic sums (two inner factors).

Arguments are ``(x, x1, x2)`` with exponents ``(p1, p2, q)``; ``X`` below is
``x*x1*x2``.  The right sides contain single polylogarithms and *linear* sums
only, so they reduce the order by one.  For the ``St`` family the linear sums
include ``R`` sums.
"""

from __future__ import annotations

from .notation import G, T, binom, compositions, pairs_upto, sgn


def _phi(n, m, x):
    # (-1)^m Li_{m+1}(x; 1-a) - x Li_{m+1}(x^-1; a)
    return G(T(sgn(m), n.Li(m + 1, x, "1-a")), T(-1, x, n.Li(m + 1, x.inverse(), "a")))


def _plain(n, m, x):
    # (-1)^m Li_{m+1}(x) - Li_{m+1}(x^-1)
    return G(T(sgn(m), n.Li(m + 1, x)), T(-1, n.Li(m + 1, x.inverse())))


def _ph(n, k, sign, x):
    # printed form Li_k(x; 1-a) +/- x Li_k(x^-1; a)
    return G(T(n.Li(k, x, "1-a")), T(sign, x, n.Li(k, x.inverse(), "a")))


def _pl(n, k, sign, x):
    # printed form Li_k(x) +/- Li_k(x^-1)
    return G(T(n.Li(k, x)), T(sign, n.Li(k, x.inverse())))


def _unpack(v):
    x, x1, x2 = v
    return x, x1, x2, x * x1 * x2


# -- family S -------------------------------------------------------------------


def s_lhs(e, v, n):
    (p1, p2, q), (x, x1, x2, X) = e, _unpack(v)
    return [
        T(x, n.S((p1, p2), q, (x1, x2), X.inverse(), "a-1")),
        T(sgn(p1 + p2 + q), n.S((p1, p2), q, (x1.inverse(), x2.inverse()), X, "-a")),
    ]


def s_rhs(e, v, n):
    (p1, p2, q), (x, x1, x2, X) = e, _unpack(v)
    Li, S = n.Li, n.S
    Xi = X.inverse()
    out = [
        T(x, S(p1, p2 + q, x1, (x * x1).inverse(), "a-1")),
        T(x, S(p2, p1 + q, x2, (x * x2).inverse(), "a-1")),
        T(x, Li(p1, x1, "a"), S(p2, q, x2, Xi, "a-1")),
        T(x, Li(p2, x2, "a"), S(p1, q, x1, Xi, "a-1")),
        T(-sgn(p2 + q), x1.inverse(), Li(p1, x1, "a"), S(p2, q, x2.inverse(), X, "-a")),
        T(-sgn(p1 + q), x2.inverse(), Li(p2, x2, "a"), S(p1, q, x1.inverse(), X, "-a")),
        T(sgn(p1 + p2 + q), Li(p1 + p2 + q, x, "1-a")),
        T(-1, x, Li(p1, x1, "a"), Li(p2 + q, (x * x1).inverse(), "a")),
        T(-1, x, Li(p2, x2, "a"), Li(p1 + q, (x * x2).inverse(), "a")),
        T(-1, x, Li(p1, x1, "a"), Li(p2, x2, "a"), Li(q, Xi, "a")),
        T(-sgn(q), (x1 * x2).inverse(), Li(p1, x1, "a"), Li(p2, x2, "a"), Li(q, X, "1-a")),
    ]
    for m, k in compositions(p1 + q - 1, 2):
        out.append(T(-sgn(k) * binom(k + p2 - 1, p2 - 1), Li(k + p2, x2), _phi(n, m, x)))
    for m, k in compositions(p2 + q - 1, 2):
        out.append(T(-sgn(k) * binom(k + p1 - 1, p1 - 1), Li(k + p1, x1), _phi(n, m, x)))
    for m in range(p1 + p2):
        out.append(T(-sgn(q) * binom(p1 + p2 + q - m - 2, q - 1), _phi(n, m, x), Li(p1 + p2 + q - m - 1, X)))
    for m, k1, k2 in compositions(q - 1, 3):
        c = -sgn(k1 + k2) * binom(k1 + p1 - 1, p1 - 1) * binom(k2 + p2 - 1, p2 - 1)
        out.append(T(c, Li(k1 + p1, x1), Li(k2 + p2, x2), _phi(n, m, x)))
    for (pa, xa), (pb, xb) in (((p1, x1), (p2, x2)), ((p2, x2), (p1, x1))):
        for m, k in pairs_upto(pb - 1):
            w = pb + q - m - k - 1
            c = -sgn(q) * binom(k + pa - 1, pa - 1) * binom(pb + q - m - k - 2, q - 1)
            inner = G(T(sgn(k), Li(k + pa, xa), Li(w, X)), T(sgn(pa), S(k + pa, w, xa.inverse(), X)))
            out.append(T(c, _phi(n, m, x), inner))
    return out


def s_ex112_lhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    return [
        T(x, n.S((1, 1), 2, (x1, x2), X.inverse(), "a-1")),
        T(n.S((1, 1), 2, (x1.inverse(), x2.inverse()), X, "-a")),
    ]


def s_ex112_rhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    Li, S = n.Li, n.S
    Xi = X.inverse()
    ph = lambda k, s: _ph(n, k, s, x)  # noqa: E731
    return [
        T(x, S(1, 3, x1, (x * x1).inverse(), "a-1")),
        T(x, S(1, 3, x2, (x * x2).inverse(), "a-1")),
        T(x, Li(1, x1, "a"), S(1, 2, x2, Xi, "a-1")),
        T(x, Li(1, x2, "a"), S(1, 2, x1, Xi, "a-1")),
        T(x1.inverse(), Li(1, x1, "a"), S(1, 2, x2.inverse(), X, "-a")),
        T(x2.inverse(), Li(1, x2, "a"), S(1, 2, x1.inverse(), X, "-a")),
        T(Li(4, x, "1-a")),
        T(-1, x, Li(1, x1, "a"), Li(3, (x * x1).inverse(), "a")),
        T(-1, x, Li(1, x2, "a"), Li(3, (x * x2).inverse(), "a")),
        T(-1, x, Li(1, x1, "a"), Li(1, x2, "a"), Li(2, Xi, "a")),
        T(-1, (x1 * x2).inverse(), Li(1, x1, "a"), Li(1, x2, "a"), Li(2, X, "1-a")),
        T(-2, ph(1, -1), Li(3, X)),
        T(ph(2, 1), Li(2, X)),
        T(-1, ph(1, -1), G(T(Li(1, x1), Li(2, X)), T(-1, S(1, 2, x1.inverse(), X)))),
        T(-1, ph(1, -1), G(T(Li(1, x2), Li(2, X)), T(-1, S(1, 2, x2.inverse(), X)))),
        T(-1, Li(2, x2), ph(2, 1)),
        T(-1, Li(3, x2), ph(1, -1)),
        T(-1, Li(1, x2), ph(3, -1)),
        T(-1, Li(2, x1), ph(2, 1)),
        T(-1, Li(3, x1), ph(1, -1)),
        T(-1, Li(1, x1), ph(3, -1)),
        T(Li(1, x1), Li(1, x2), ph(2, 1)),
        T(Li(2, x1), Li(1, x2), ph(1, -1)),
        T(Li(1, x1), Li(2, x2), ph(1, -1)),
    ]


def s_ex122_lhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    return [
        T(x, n.S((1, 2), 2, (x1, x2), X.inverse(), "a-1")),
        T(-1, n.S((1, 2), 2, (x1.inverse(), x2.inverse()), X, "-a")),
    ]


def s_ex122_rhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    Li, S = n.Li, n.S
    Xi = X.inverse()
    ph = lambda k, s: _ph(n, k, s, x)  # noqa: E731
    return [
        T(x, S(1, 4, x1, (x * x1).inverse(), "a-1")),
        T(x, S(2, 3, x2, (x * x2).inverse(), "a-1")),
        T(x, Li(1, x1, "a"), S(2, 2, x2, Xi, "a-1")),
        T(x, Li(2, x2, "a"), S(1, 2, x1, Xi, "a-1")),
        T(-1, x1.inverse(), Li(1, x1, "a"), S(2, 2, x2.inverse(), X, "-a")),
        T(x2.inverse(), Li(2, x2, "a"), S(1, 2, x1.inverse(), X, "-a")),
        T(-1, Li(5, x, "1-a")),
        T(-1, x, Li(1, x1, "a"), Li(4, (x * x1).inverse(), "a")),
        T(-1, x, Li(2, x2, "a"), Li(3, (x * x2).inverse(), "a")),
        T(-1, x, Li(1, x1, "a"), Li(2, x2, "a"), Li(2, Xi, "a")),
        T(-1, (x1 * x2).inverse(), Li(1, x1, "a"), Li(2, x2, "a"), Li(2, X, "1-a")),
        T(-3, ph(1, -1), Li(4, X)),
        T(2, ph(2, 1), Li(3, X)),
        T(-1, ph(3, -1), Li(2, X)),
        T(-2, ph(1, -1), G(T(Li(1, x1), Li(3, X)), T(-1, S(1, 3, x1.inverse(), X)))),
        T(ph(2, 1), G(T(Li(1, x1), Li(2, X)), T(-1, S(1, 2, x1.inverse(), X)))),
        T(ph(1, -1), G(T(Li(2, x1), Li(2, X)), T(S(2, 2, x1.inverse(), X)))),
        T(-1, ph(1, -1), G(T(Li(2, x2), Li(2, X)), T(S(2, 2, x2.inverse(), X)))),
        T(-3, Li(4, x2), ph(1, -1)),
        T(-1, Li(2, x2), ph(3, -1)),
        T(-2, Li(3, x2), ph(2, 1)),
        T(Li(1, x1), ph(4, 1)),
        T(Li(2, x1), ph(3, -1)),
        T(Li(3, x1), ph(2, 1)),
        T(Li(4, x1), ph(1, -1)),
        T(Li(1, x1), Li(2, x2), ph(2, 1)),
        T(Li(2, x1), Li(2, x2), ph(1, -1)),
        T(2, Li(1, x1), Li(3, x2), ph(1, -1)),
    ]


# -- family St ------------------------------------------------------------------


def st_lhs(e, v, n):
    (p1, p2, q), (x, x1, x2, X) = e, _unpack(v)
    return [
        T(sgn(p1 + p2 + q + 1), n.St((p1, p2), q, (x1.inverse(), x2.inverse()), X, "-a")),
        T(-1, (x1 * x2).inverse(), n.St((p1, p2), q, (x1, x2), X.inverse(), "a-1")),
    ]


def st_rhs(e, v, n):
    (p1, p2, q), (x, x1, x2, X) = e, _unpack(v)
    Li, St, R = n.Li, n.St, n.R
    Xi, x12i = X.inverse(), (x1 * x2).inverse()
    out = [
        T(x12i, Li(p1, x1, "a"), Li(p2, x2, "a"), Li(q, Xi)),
        T(-1, x12i, Li(p1, x1, "a"), St(p2, q, x2, Xi, "a-1")),
        T(-1, x12i, Li(p2, x2, "a"), St(p1, q, x1, Xi, "a-1")),
        T(sgn(q), x12i, Li(p1, x1, "a"), Li(p2, x2, "a"), Li(q, X)),
        T(sgn(q + p2), x1.inverse(), Li(p1, x1, "a"), St(p2, q, x2.inverse(), X, "-a")),
        T(sgn(q + p1), x2.inverse(), Li(p2, x2, "a"), St(p1, q, x1.inverse(), X, "-a")),
    ]
    for k in range(p1 + p2):
        c = sgn(q) * binom(p1 + p2 + q - k - 2, q - 1)
        out.append(T(c, _phi(n, k, x), Xi, Li(p1 + p2 + q - k - 1, X, "a")))
    for (pa, xa), (pb, xb) in (((p1, x1), (p2, x2)), ((p2, x2), (p1, x1))):
        for k1, k2 in pairs_upto(pb - 1):
            w = pb + q - k1 - k2 - 1
            c = sgn(q) * binom(k2 + pa - 1, pa - 1) * binom(pb + q - k1 - k2 - 2, q - 1)
            out.append(T(c, Xi, _phi(n, k1, x), sgn(k2), Li(k2 + pa, xa), Li(w, X, "a")))
            out.append(T(c, _phi(n, k1, x), sgn(pa), R(k2 + pa, w, xa.inverse(), X, "a")))
    for k1, k2 in compositions(q, 2):
        c = sgn(q) * binom(k1 + p1 - 1, p1 - 1) * binom(k2 + p2 - 1, p2 - 1)
        out.append(T(x12i, c, Li(k1 + p1, x1, "a"), Li(k2 + p2, x2, "a")))
    for k1, k2, k3 in compositions(q - 1, 3):
        c = sgn(k2 + k3) * binom(k2 + p1 - 1, p1 - 1) * binom(k3 + p2 - 1, p2 - 1)
        out.append(T(c, Li(k2 + p1, x1, "a"), Li(k3 + p2, x2, "a"), x12i, _plain(n, k1, x)))
    return out


def st_ex112_lhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    return [
        T((x1 * x2).inverse(), n.St((1, 1), 2, (x1, x2), X.inverse(), "a-1")),
        T(n.St((1, 1), 2, (x1.inverse(), x2.inverse()), X, "-a")),
    ]


def st_ex112_rhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    Li, St, R = n.Li, n.St, n.R
    Xi, x12i = X.inverse(), (x1 * x2).inverse()
    ph = lambda k, s: _ph(n, k, s, x)  # noqa: E731
    pl = lambda k, s: _pl(n, k, s, x)  # noqa: E731
    return [
        T(-1, x12i, Li(1, x1, "a"), Li(1, x2, "a"), Li(2, Xi)),
        T(x12i, Li(1, x1, "a"), St(1, 2, x2, Xi, "a-1")),
        T(x12i, Li(1, x2, "a"), St(1, 2, x1, Xi, "a-1")),
        T(-1, x12i, Li(1, x1, "a"), Li(1, x2, "a"), Li(2, X)),
        T(x1.inverse(), Li(1, x1, "a"), St(1, 2, x2.inverse(), X, "-a")),
        T(x2.inverse(), Li(1, x2, "a"), St(1, 2, x1.inverse(), X, "-a")),
        T(-2, Xi, ph(1, -1), Li(3, X, "a")),
        T(Xi, ph(2, 1), Li(2, X, "a")),
        T(-1, Xi, ph(1, -1), Li(1, x1), Li(2, X, "a")),
        T(ph(1, -1), R(1, 2, x1.inverse(), X, "a")),
        T(-1, Xi, ph(1, -1), Li(1, x2), Li(2, X, "a")),
        T(ph(1, -1), R(1, 2, x2.inverse(), X, "a")),
        T(-1, x12i, Li(3, x1, "a"), Li(1, x2, "a")),
        T(-1, x12i, Li(1, x1, "a"), Li(3, x2, "a")),
        T(-1, x12i, Li(2, x1, "a"), Li(2, x2, "a")),
        T(x12i, Li(1, x1, "a"), Li(1, x2, "a"), pl(2, 1)),
        T(x12i, Li(2, x1, "a"), Li(1, x2, "a"), pl(1, -1)),
        T(x12i, Li(1, x1, "a"), Li(2, x2, "a"), pl(1, -1)),
    ]


def st_ex122_lhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    return [
        T((x1 * x2).inverse(), n.St((1, 2), 2, (x1, x2), X.inverse(), "a-1")),
        T(-1, n.St((1, 2), 2, (x1.inverse(), x2.inverse()), X, "-a")),
    ]


def st_ex122_rhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    Li, St, R = n.Li, n.St, n.R
    Xi, x12i = X.inverse(), (x1 * x2).inverse()
    ph = lambda k, s: _ph(n, k, s, x)  # noqa: E731
    pl = lambda k, s: _pl(n, k, s, x)  # noqa: E731
    return [
        T(-1, x12i, Li(1, x1, "a"), Li(2, x2, "a"), Li(2, Xi)),
        T(x12i, Li(1, x1, "a"), St(2, 2, x2, Xi, "a-1")),
        T(x12i, Li(2, x2, "a"), St(1, 2, x1, Xi, "a-1")),
        T(-1, x12i, Li(1, x1, "a"), Li(2, x2, "a"), Li(2, X)),
        T(-1, x1.inverse(), Li(1, x1, "a"), St(2, 2, x2.inverse(), X, "-a")),
        T(x2.inverse(), Li(2, x2, "a"), St(1, 2, x1.inverse(), X, "-a")),
        T(-3, ph(1, -1), Xi, Li(4, X, "a")),
        T(2, ph(2, 1), Xi, Li(3, X, "a")),
        T(-1, ph(3, -1), Xi, Li(2, X, "a")),
        T(-2, ph(1, -1), G(T(Xi, Li(1, x1), Li(3, X, "a")), T(-1, R(1, 3, x1.inverse(), X, "a")))),
        T(ph(2, 1), G(T(Xi, Li(1, x1), Li(2, X, "a")), T(-1, R(1, 2, x1.inverse(), X, "a")))),
        T(ph(1, -1), G(T(Xi, Li(2, x1), Li(2, X, "a")), T(R(2, 2, x1.inverse(), X, "a")))),
        T(-1, ph(1, -1), G(T(Xi, Li(2, x2), Li(2, X, "a")), T(R(2, 2, x2.inverse(), X, "a")))),
        T(-1, x12i, Li(3, x1, "a"), Li(2, x2, "a")),
        T(-3, x12i, Li(1, x1, "a"), Li(4, x2, "a")),
        T(-2, x12i, Li(2, x1, "a"), Li(3, x2, "a")),
        T(x12i, Li(1, x1, "a"), Li(2, x2, "a"), pl(2, 1)),
        T(x12i, Li(2, x1, "a"), Li(2, x2, "a"), pl(1, -1)),
        T(2, x12i, Li(1, x1, "a"), Li(3, x2, "a"), pl(1, -1)),
    ]


# -- family R -------------------------------------------------------------------


def r_lhs(e, v, n):
    (p1, p2, q), (x, x1, x2, X) = e, _unpack(v)
    return [
        T(sgn(p1 + p2 + q + 1), n.R((p1, p2), q, (x1.inverse(), x2.inverse()), X, "-a")),
        T(-1, X.inverse(), n.R((p1, p2), q, (x1, x2), X.inverse(), "a+1")),
    ]


def r_rhs(e, v, n, *, printed_index=False):
    """General right side.

    In the two single sums over ``k`` the polylogarithm of ``x_j`` carries the
    index ``k + p_j``, as the residue computation at the non-positive integers
    requires.  ``printed_index=True`` uses ``k + 1`` instead; that variant
    agrees with the standard one only when the matching exponent is 1.
    """
    (p1, p2, q), (x, x1, x2, X) = e, _unpack(v)
    Li, R = n.Li, n.R
    Xi, x12i = X.inverse(), (x1 * x2).inverse()
    out = [
        T(Li(p1, x1), Li(p2, x2), Li(q, Xi, "a+1")),
        T(-1, Xi, Li(p1, x1), R(p2, q, x2, Xi, "a+1")),
        T(-1, Xi, Li(p2, x2), R(p1, q, x1, Xi, "a+1")),
        T(sgn(q) * binom(q + p1 + p2 - 1, q - 1), Xi, Li(q + p1 + p2, X, "-a")),
    ]
    for (pa, xa), (pb, xb) in (((p1, x1), (p2, x2)), ((p2, x2), (p1, x1))):
        for k in range(pa + 1):
            c = sgn(q) * binom(k + pb - 1, pb - 1) * binom(q + pa - k - 1, q - 1)
            idx = k + 1 if printed_index else k + pb
            inner = G(
                T(sgn(k), Xi, Li(idx, xb), Li(pa + q - k, X, "-a")),
                T(sgn(pb), R(k + pb, pa + q - k, xb.inverse(), X, "-a")),
            )
            out.append(T(c, inner))
    for k in range(p1 + p2):
        c = sgn(q) * binom(q + p1 + p2 - k - 2, q - 1)
        out.append(T(c, Xi, _plain(n, k, x), Li(q + p1 + p2 - k - 1, X, "-a")))
    out += [
        T(sgn(q), Xi, Li(p1, x1), Li(p2, x2), Li(q, X, "-a")),
        T(sgn(q + p2), Li(p1, x1), R(p2, q, x2.inverse(), X, "-a")),
        T(sgn(q + p1), Li(p2, x2), R(p1, q, x1.inverse(), X, "-a")),
    ]
    for (pa, xa), (pb, xb) in (((p1, x1), (p2, x2)), ((p2, x2), (p1, x1))):
        for k1, k2 in pairs_upto(pa - 1):
            w = pa + q - k1 - k2 - 1
            c = sgn(q) * binom(k2 + pb - 1, pb - 1) * binom(q + pa - k1 - k2 - 2, q - 1)
            inner = G(
                T(sgn(k2), Xi, Li(k2 + pb, xb), Li(w, X, "-a")),
                T(sgn(pb), R(k2 + pb, w, xb.inverse(), X, "-a")),
            )
            out.append(T(c, _plain(n, k1, x), inner))
    for k1, k2, k3 in compositions(q - 1, 3):
        c = sgn(k2 + k3) * binom(k2 + p1 - 1, p1 - 1) * binom(k3 + p2 - 1, p2 - 1)
        out.append(T(c, _phi(n, k1, x), Li(k2 + p1, x1, "-a"), Li(k3 + p2, x2, "-a"), x12i))
    return out


def r_rhs_printed(e, v, n):
    return r_rhs(e, v, n, printed_index=True)


def r_ex112_lhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    return [
        T(X.inverse(), n.R((1, 1), 2, (x1, x2), X.inverse(), "a+1")),
        T(n.R((1, 1), 2, (x1.inverse(), x2.inverse()), X, "-a")),
    ]


def r_ex112_rhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    Li, R = n.Li, n.R
    Xi, x12i = X.inverse(), (x1 * x2).inverse()
    ph = lambda k, s: _ph(n, k, s, x)  # noqa: E731
    pl = lambda k, s: _pl(n, k, s, x)  # noqa: E731

    def blk(k, w, xa, s):
        return G(T(Xi, Li(k, xa), Li(w, X, "-a")), T(s, R(k, w, xa.inverse(), X, "-a")))

    return [
        T(-1, Li(1, x1), Li(1, x2), Li(2, Xi, "a+1")),
        T(Xi, Li(1, x1), R(1, 2, x2, Xi, "a+1")),
        T(Xi, Li(1, x2), R(1, 2, x1, Xi, "a+1")),
        T(-3, Xi, Li(4, X, "-a")),
        T(-2, blk(1, 3, x2, -1)),
        T(blk(2, 2, x2, 1)),
        T(-2, blk(1, 3, x1, -1)),
        T(blk(2, 2, x1, 1)),
        T(-2, Xi, pl(1, -1), Li(3, X, "-a")),
        T(Xi, pl(2, 1), Li(2, X, "-a")),
        T(-1, Xi, Li(1, x1), Li(1, x2), Li(2, X, "-a")),
        T(Li(1, x1), R(1, 2, x2.inverse(), X, "-a")),
        T(Li(1, x2), R(1, 2, x1.inverse(), X, "-a")),
        T(-1, pl(1, -1), blk(1, 2, x2, -1)),
        T(-1, pl(1, -1), blk(1, 2, x1, -1)),
        T(ph(2, 1), Li(1, x1, "-a"), Li(1, x2, "-a"), x12i),
        T(ph(1, -1), Li(2, x1, "-a"), Li(1, x2, "-a"), x12i),
        T(ph(1, -1), Li(1, x1, "-a"), Li(2, x2, "-a"), x12i),
    ]


def r_ex222_lhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    return [
        T(X.inverse(), n.R((2, 2), 2, (x1, x2), X.inverse(), "a+1")),
        T(n.R((2, 2), 2, (x1.inverse(), x2.inverse()), X, "-a")),
    ]


def r_ex222_rhs(e, v, n):
    x, x1, x2, X = _unpack(v)
    Li, R = n.Li, n.R
    Xi, x12i = X.inverse(), (x1 * x2).inverse()
    ph = lambda k, s: _ph(n, k, s, x)  # noqa: E731
    pl = lambda k, s: _pl(n, k, s, x)  # noqa: E731

    def blk(k, w, xa, s):
        return G(T(Xi, Li(k, xa), Li(w, X, "-a")), T(s, R(k, w, xa.inverse(), X, "-a")))

    out = [
        T(-1, Li(2, x1), Li(2, x2), Li(2, Xi, "a+1")),
        T(Xi, Li(2, x1), R(2, 2, x2, Xi, "a+1")),
        T(Xi, Li(2, x2), R(2, 2, x1, Xi, "a+1")),
        T(-5, Xi, Li(6, X, "-a")),
    ]
    for xa in (x2, x1):
        out += [T(-3, blk(2, 4, xa, 1)), T(4, blk(3, 3, xa, -1)), T(-3, blk(4, 2, xa, 1))]
    out += [
        T(-4, Xi, pl(1, -1), Li(5, X, "-a")),
        T(3, Xi, pl(2, 1), Li(4, X, "-a")),
        T(-2, Xi, pl(3, -1), Li(3, X, "-a")),
        T(Xi, pl(4, 1), Li(2, X, "-a")),
        T(-1, Xi, Li(2, x1), Li(2, x2), Li(2, X, "-a")),
        T(-1, Li(2, x1), R(2, 2, x2.inverse(), X, "-a")),
        T(-1, Li(2, x2), R(2, 2, x1.inverse(), X, "-a")),
    ]
    for xa in (x2, x1):
        out += [
            T(-2, pl(1, -1), blk(2, 3, xa, 1)),
            T(pl(2, 1), blk(2, 2, xa, 1)),
            T(2, pl(1, -1), blk(3, 2, xa, -1)),
        ]
    out += [
        T(ph(2, 1), Li(2, x1, "-a"), Li(2, x2, "-a"), x12i),
        T(2, ph(1, -1), Li(3, x1, "-a"), Li(2, x2, "-a"), x12i),
        T(2, ph(1, -1), Li(2, x1, "-a"), Li(3, x2, "-a"), x12i),
    ]
    return out


def hypotheses(e, v):
    (p1, p2, q), (x, x1, x2) = e, v
    return [
        ("(p1,x1) != (1,1)", not (p1 == 1 and x1.is_one)),
        ("(p2,x2) != (1,1)", not (p2 == 1 and x2.is_one)),
        ("(q,x*x1*x2) != (1,1)", not (q == 1 and (x * x1 * x2).is_one)),
    ]
