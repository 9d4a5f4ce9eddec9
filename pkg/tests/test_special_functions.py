from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hurwitz_parity import (
    DivergenceError,
    DomainError,
    PoleError,
    RootOfUnity,
    UnsupportedRangeError,
    bernoulli,
    digamma,
    even_zeta_via_bernoulli,
    ext_trig,
    finite_sum,
    hurwitz_polylog,
    hurwitz_zeta,
    lerch_phi_deriv,
    polylog,
)

from conftest import CTX, I, MINUS_I, MINUS_ONE, ONE, TOL, roots_up_to
from oracles import averaged_root_series, cval, hurwitz_zeta_bracket

PI = mpmath.pi


# -- Bernoulli numbers and even zeta values ------------------------------------------


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(4) == Fraction(-1, 30)


@pytest.mark.parametrize("n", range(0, 41))
def test_bernoulli_matches_generating_function_oracle(n):
    # mpmath builds B_n by a different route; same x/(e^x - 1) sign convention
    num, den = mpmath.bernfrac(n)
    assert bernoulli(n) == Fraction(int(num), int(den))


def test_bernoulli_table_limit():
    with pytest.raises(UnsupportedRangeError):
        bernoulli(41)


@pytest.mark.parametrize("m, closed", [(1, PI**2 / 6), (2, PI**4 / 90), (3, PI**6 / 945)])
def test_even_zeta_closed_forms(m, closed):
    assert abs(even_zeta_via_bernoulli(m) - closed) <= TOL


@pytest.mark.parametrize("m", range(1, 5))
def test_polylog_calibrates_against_bernoulli_formula(m):
    assert abs(polylog(2 * m, ONE) - even_zeta_via_bernoulli(m)) <= TOL


# -- Hurwitz zeta and digamma ------------------------------------------------------


def test_hurwitz_zeta_at_one_is_basel():
    assert abs(hurwitz_zeta(2, 1) - PI**2 / 6) <= TOL


@pytest.mark.parametrize("p, q", [(2, 0.5), (3, 1.0)])
def test_hurwitz_zeta_inside_brute_force_bracket(p, q):
    lo, hi = hurwitz_zeta_bracket(p, q)
    v = float(hurwitz_zeta(p, q))
    assert lo - 1e-12 <= v <= hi + 1e-12


def test_hurwitz_zeta_frozen_values():
    assert abs(hurwitz_zeta(2, 0.5) - PI**2 / 2) <= TOL
    assert abs(hurwitz_zeta(3, 1) - mpmath.zeta(3)) <= TOL
    assert mpmath.nstr(hurwitz_zeta(2, 0.5), 11) == "4.9348022005"
    assert mpmath.nstr(hurwitz_zeta(3, 1), 11) == "1.2020569032"


def test_hurwitz_zeta_domain():
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 0)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, -1.5)
    with pytest.raises(DomainError):
        hurwitz_zeta(1, 1)


@given(st.sampled_from([2, 3, 4]), st.floats(min_value=0.01, max_value=3.0))
def test_hurwitz_ladder(p, q):
    q = mpmath.mpf(q)
    d = hurwitz_zeta(p, q) - hurwitz_zeta(p, q + 1) - q ** (-p)
    assert abs(d) <= 10 * TOL * max(1, q ** (-p))


def test_digamma_examples():
    g = mpmath.euler
    assert abs(digamma(1) + g) <= TOL
    assert abs(digamma(2) - (1 - g)) <= TOL
    assert abs(digamma(0.5) - (-g - 2 * mpmath.log(2))) <= TOL


def test_digamma_half_against_paired_series():
    # psi(1/2) = -gamma + sum_{n>=0} (1/(n+1) - 1/(n+1/2)), summed in pairs with a 1/(2n) tail
    n = 200_000
    s = mpmath.fsum(mpmath.mpf(1) / (k + 1) - mpmath.mpf(1) / (k + 0.5) for k in range(n))
    approx = -mpmath.euler + s - mpmath.mpf(1) / (2 * n)
    assert abs(digamma(0.5) - approx) < 1e-9


def test_digamma_pole_guard():
    with pytest.raises(DomainError):
        digamma(-2)
    with pytest.raises(DomainError):
        digamma(1e-9)


off_lattice = st.complex_numbers(min_magnitude=0.0, max_magnitude=6.0, allow_nan=False, allow_infinity=False).filter(
    lambda z: min(abs(z + k) for k in range(0, 8)) > 1e-3
)


@given(off_lattice)
def test_digamma_recurrence(s):
    s = mpmath.mpc(s)
    d = digamma(s + 1) - digamma(s) - 1 / s
    assert abs(d) <= 10 * TOL * max(1, abs(1 / s))


@given(off_lattice.filter(lambda z: abs(z.imag) > 1e-3 or z.real > 0))
def test_digamma_matches_mpmath(s):
    assert abs(digamma(s) - mpmath.digamma(s)) < 1e-25 * max(1, abs(mpmath.digamma(s)))


# -- polylogarithms -----------------------------------------------------------------


def test_polylog_examples():
    assert abs(polylog(2, ONE) - PI**2 / 6) <= TOL
    assert abs(polylog(1, MINUS_ONE) + mpmath.log(2)) <= TOL
    with pytest.raises(DivergenceError):
        polylog(1, ONE)


def test_polylog_at_i_against_averaged_partial_sums():
    brute = averaged_root_series(2, I)
    v = complex(polylog(2, I))
    assert abs(v - brute) < 1e-9
    assert f"{v.real:.10f}" == "-0.2056167584"
    assert f"{v.imag:.10f}" == "0.9159655942"


@pytest.mark.parametrize("x", roots_up_to(6))
@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_polylog_matches_mpmath(p, x):
    if p == 1 and x.is_one:
        pytest.skip("divergent")
    ref = mpmath.polylog(p, cval(x))
    assert abs(polylog(p, x) - ref) < 1e-25


@pytest.mark.parametrize("x", roots_up_to(6))
@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_hurwitz_polylog_at_zero_shift_is_polylog(p, x):
    if p == 1 and x.is_one:
        pytest.skip("divergent")
    assert abs(hurwitz_polylog(p, x, 0) - polylog(p, x)) <= 10 * TOL


def test_hurwitz_polylog_examples():
    assert abs(hurwitz_polylog(2, ONE, 0) - PI**2 / 6) <= TOL
    assert abs(hurwitz_polylog(1, MINUS_ONE, 0) + mpmath.log(2)) <= TOL
    assert abs(hurwitz_polylog(2, ONE, -0.5) - PI**2 / 2) <= TOL
    lo, hi = hurwitz_zeta_bracket(2, 0.5)
    assert lo - 1e-12 <= float(hurwitz_polylog(2, ONE, -0.5)) <= hi + 1e-12


def test_hurwitz_polylog_errors():
    with pytest.raises(DivergenceError):
        hurwitz_polylog(1, ONE, 0.3)
    with pytest.raises(DomainError):
        hurwitz_polylog(2, I, -2 + 1e-9)


@pytest.mark.parametrize("x", [ONE, MINUS_ONE, I, RootOfUnity(3, 1), RootOfUnity(6, 5)])
@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("a", [0.3, -0.4, 0.25 + 0.1j])
def test_hurwitz_polylog_against_lerch_oracle(p, x, a):
    if p == 1 and x.is_one:
        pytest.skip("divergent")
    z = cval(x)
    ref = z * mpmath.lerchphi(z, p, 1 + mpmath.mpmathify(a))
    assert abs(hurwitz_polylog(p, x, a) - ref) < 1e-25


@given(st.sampled_from(roots_up_to(6)), st.integers(1, 4), st.sampled_from([0.3, -0.4, 0.7, 0.25 + 0.1j]))
def test_bridge_to_lerch_sum(x, p, a):
    a = mpmath.mpmathify(a)
    if x.is_one:
        # Hurwitz-zeta component form for x = 1
        if p == 1:
            return
        ref = hurwitz_zeta(p, 1 + a)
    else:
        ref = x.value(CTX.mp) * lerch_phi_deriv(p, 1 + a, x)
    assert abs(hurwitz_polylog(p, x, a) - ref) <= 10 * TOL * max(1, abs(ref))


def test_finite_sum_examples():
    assert finite_sum(0, 2, I, 0.3) == 0
    v = finite_sum(1, 3, I, 0.3)
    assert abs(v - cval(I) / (1 + mpmath.mpf(0.3)) ** 3) <= TOL
    assert abs(finite_sum(2, 1, MINUS_ONE, 0) + mpmath.mpf(1) / 2) <= TOL


# -- lerch_phi_deriv and ext_trig ----------------------------------------------------


def test_lerch_phi_deriv_examples():
    assert abs(lerch_phi_deriv(1, 1, MINUS_ONE) - mpmath.log(2)) <= TOL
    assert abs(lerch_phi_deriv(2, 1, MINUS_ONE) - PI**2 / 12) <= TOL
    # reindexing k -> n - 1
    assert abs(lerch_phi_deriv(1, 1, I) - polylog(1, I) / cval(I)) <= TOL


def test_lerch_phi_deriv_against_alternating_partial_sums():
    n = 200_000
    s1 = mpmath.fsum((-1) ** k / mpmath.mpf(k + 1) for k in range(n))
    s2 = mpmath.fsum((-1) ** k / mpmath.mpf(k + 1) ** 2 for k in range(n))
    # alternating series: error below the first omitted term
    assert abs(lerch_phi_deriv(1, 1, MINUS_ONE) - s1) < 1.0 / n
    assert abs(lerch_phi_deriv(2, 1, MINUS_ONE) - s2) < 1.0 / n**2


def test_lerch_phi_deriv_errors():
    with pytest.raises(DomainError):
        lerch_phi_deriv(1, 0.5, ONE)
    with pytest.raises(DomainError):
        lerch_phi_deriv(2, -3, I)


def test_ext_trig_examples():
    assert abs(ext_trig(0.5, ONE)) <= TOL
    assert abs(ext_trig(0.25, ONE) - PI) <= TOL
    assert abs(ext_trig(-0.3, MINUS_I) + ext_trig(0.3, I)) <= TOL


def test_ext_trig_cot_against_difference_series():
    # 1/s + sum_{k>=1} (1/(k+s) - 1/(k-s)) at s = 1/4, direct partial sum
    s = mpmath.mpf(1) / 4
    n = 200_000
    series = 1 / s + mpmath.fsum(1 / (k + s) - 1 / (k - s) for k in range(1, n))
    assert abs(ext_trig(s, ONE) - series) < 1e-5


def test_ext_trig_pole_guard():
    with pytest.raises(PoleError):
        ext_trig(2 + 1e-9, I)


s_off_integers = st.complex_numbers(max_magnitude=3.5, allow_nan=False, allow_infinity=False).filter(
    lambda z: min(abs(z - k) for k in range(-5, 6)) > 1e-3
)


@given(s_off_integers, st.sampled_from(roots_up_to(4)))
def test_ext_trig_quasi_periodicity(s, x):
    s = mpmath.mpc(s)
    lhs = ext_trig(s + 1, x)
    rhs = ext_trig(s, x) / x.value(CTX.mp)
    assert abs(lhs - rhs) <= 10 * TOL * max(1, abs(rhs))


@given(s_off_integers, st.sampled_from(roots_up_to(4)))
def test_ext_trig_antisymmetry(s, x):
    v = ext_trig(s, x)
    assert abs(ext_trig(-s, x.inverse()) + v) <= 10 * TOL * max(1, abs(v))


# -- roots of unity ------------------------------------------------------------------


@given(st.integers(1, 24), st.integers(-50, 50))
def test_root_inverse_and_embedding(n, k):
    x = RootOfUnity(n, k)
    assert x.inverse() == RootOfUnity(n, -k % n)
    assert x * x.inverse() == ONE
    mp = CTX.mp
    assert abs(x.value(mp) ** n - 1) <= TOL


@pytest.mark.parametrize("text, expected", [("1", ONE), ("-1", MINUS_ONE), ("i", I), ("-i", MINUS_I),
                                            ("w(6,1)", RootOfUnity(6, 1)), ("w 3 2", RootOfUnity(3, 2))])
def test_root_parse(text, expected):
    assert RootOfUnity.parse(text) == expected
    assert RootOfUnity.parse(str(expected)) == expected
