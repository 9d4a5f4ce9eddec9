import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitz_parity import RootOfUnity, SpecError, SumSpec, UnsupportedRangeError, eval_euler_sum
from hurwitz_parity.expr import EulerSum, TreeEvaluator
from hurwitz_parity.identities import (
    IDENTITIES,
    PARITY_TOL,
    REFLECTION_TOL,
    ParamPoint,
    SamplingConfig,
    build_parity_lhs,
    build_parity_rhs,
    example_consistency,
    get_identity,
    identity_residual,
    reduce_parity_combination,
    select_identities,
    suite_points,
)
from hurwitz_parity.identities import quadratic
from hurwitz_parity.identities.notation import Notation, tree

from conftest import CTX, I, MINUS_I, MINUS_ONE, ONE, TOL, roots_up_to

EXAMPLES = [i for i, d in IDENTITIES.items() if d.is_example]


def test_registry_shape():
    assert len(IDENTITIES) == 23
    assert len(EXAMPLES) == 15
    assert select_identities("mpl*") == ["mpl2-reflection", "mpl2-reflection/ex-2-2", "mpl2-reflection/ex-2-3",
                                         "mpl3-reflection", "mpl3-reflection/ex-2-1-2"]
    assert select_identities("linear-S,linear-R") == ["linear-S", "linear-R"]
    assert select_identities("nothing*") == []
    assert get_identity("linear-S").tol == PARITY_TOL
    assert get_identity("mpl2-reflection").tol == REFLECTION_TOL
    with pytest.raises(SpecError):
        get_identity("linear-T")


# -- tree construction ----------------------------------------------------------------


def test_linear_lhs_pairs_sum_with_mirror():
    lhs = build_parity_lhs("linear-S", ParamPoint((2, 1), (I, MINUS_ONE), 0.3))
    sums = [a for a in lhs.atoms() if isinstance(a, EulerSum)]
    assert len(sums) == 2
    assert {s.family for s in sums} == {"S"}
    # mirror has inverted arguments
    args = sorted((s.inner_args[0].as_tuple(), s.outer_arg.as_tuple()) for s in sums)
    xy = I * MINUS_ONE
    assert args == sorted([(MINUS_ONE.as_tuple(), xy.inverse().as_tuple()),
                           (MINUS_ONE.inverse().as_tuple(), xy.as_tuple())])


@pytest.mark.parametrize("p, q", [(1, 1), (1, 2), (2, 1), (2, 3), (3, 3)])
def test_linear_rhs_term_count(p, q):
    rhs = build_parity_rhs("linear-S", ParamPoint((p, q), (I, MINUS_ONE), 0.3))
    assert rhs.n_terms == 3 + p + q


@pytest.mark.parametrize("p, q", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_linear_mirror_sign(p, q):
    lhs = build_parity_lhs("linear-S", ParamPoint((p, q), (I, MINUS_ONE), 0.3))
    coefs = sorted(str(t.coef) for t in lhs.terms)
    # the mirrored sum enters with -(-1)^(p+q)
    assert str(-1 if (p + q) % 2 == 0 else 1) in coefs


def test_linear_rhs_has_no_sums():
    rhs = build_parity_rhs("linear-St", ParamPoint((2, 2), (I, MINUS_I), 0.3))
    assert rhs.max_order() == 0
    assert not any(isinstance(a, EulerSum) for a in rhs.atoms())


def test_hypothesis_violation_names_condition():
    with pytest.raises(SpecError) as exc:
        build_parity_lhs("linear-S", ParamPoint((1, 1), (ONE, ONE), 0.3))
    assert exc.value.condition
    with pytest.raises(SpecError):
        build_parity_lhs("linear-S", ParamPoint((1, 2), (I, ONE), 2.0))
    with pytest.raises(SpecError):
        build_parity_lhs("linear-S/ex-1-2", ParamPoint((2, 2), (I, ONE), 0.3))


# -- residuals ------------------------------------------------------------------------


@pytest.mark.parametrize("ident, pt", [
    ("linear-S", ParamPoint((2, 1), (I, MINUS_ONE), 0.3)),
    ("linear-R", ParamPoint((1, 2), (MINUS_ONE, I), -0.4)),
    ("quadratic-St/ex-1-2-2", ParamPoint((1, 2, 2), (MINUS_ONE,) * 3, 0.25 + 0.1j)),
    ("quadratic-St", ParamPoint((1, 2, 2), (MINUS_ONE,) * 3, 0.25 + 0.1j)),
    ("mpl2-reflection/ex-2-2", ParamPoint((2, 2), (I, MINUS_ONE), 0.3)),
    ("mpl3-reflection/ex-2-1-2", ParamPoint((2, 1, 2), (I, MINUS_I, MINUS_ONE), 0.3)),
])
def test_residual_examples(ident, pt):
    rec = identity_residual(ident, pt, CTX)
    assert rec.status == "pass", rec.to_dict()
    assert rec.abs_err <= rec.tol_used


def test_residual_lhs_matches_direct_sums():
    # left side of linear-S evaluated independently from the two sums
    x, y, a = I, MINUS_ONE, mpmath.mpf(0.3)  # same binary value ParamPoint stores
    xy = x * y
    p, q = 2, 1
    direct = (x.value(mpmath.mp) * eval_euler_sum(SumSpec("S", (p,), q, (y,), xy.inverse(), a - 1), CTX).value
              - (-1) ** (p + q) * eval_euler_sum(SumSpec("S", (p,), q, (y.inverse(),), xy, -a), CTX).value)
    rec = identity_residual("linear-S", ParamPoint((p, q), (x, y), 0.3), CTX)
    assert abs(complex(direct) - rec.lhs) <= 1e-14 * abs(rec.lhs)


def test_reflection_records_alternative_convention():
    rec = identity_residual("mpl2-reflection", ParamPoint((2, 2), (I, MINUS_ONE), 0.3), CTX)
    assert rec.convention == "label"
    assert set(rec.alternatives) == {"denominator"}


def _printed_r_residual(e, v, a):
    n = Notation("label")
    ev = TreeEvaluator(CTX, a)
    lv, _ = tree(quadratic.r_lhs(e, v, n), a).evaluate(a, CTX, ev)
    rv, _ = tree(quadratic.r_rhs_printed(e, v, n), a).evaluate(a, CTX, ev)
    return abs(lv - rv)


def test_printed_r_index_agrees_only_for_unit_exponents():
    v = (I, MINUS_ONE, MINUS_I)
    assert _printed_r_residual((1, 1, 2), v, 0.3) <= PARITY_TOL
    assert _printed_r_residual((2, 1, 2), v, 0.3) > 1e-6
    assert identity_residual("quadratic-R", ParamPoint((2, 1, 2), v, 0.3), CTX).status == "pass"


linear_points = st.tuples(
    st.sampled_from(["linear-S", "linear-St", "linear-R"]),
    st.integers(1, 3), st.integers(1, 3),
    st.sampled_from(roots_up_to(4)), st.sampled_from(roots_up_to(4)),
    st.sampled_from([0.3, -0.4, 0.25 + 0.1j]),
)


@settings(max_examples=15)
@given(linear_points)
def test_linear_relations_hold(pt):
    ident, p, q, x, y, a = pt
    point = ParamPoint((p, q), (x, y), a)
    try:
        rec = identity_residual(ident, point, CTX)
    except SpecError:
        return
    assert rec.status in ("pass", "skipped-divergent"), rec.to_dict()


# -- worked examples against general formulas -----------------------------------------


@pytest.mark.parametrize("ident", EXAMPLES)
def test_example_consistency(ident):
    pt = suite_points(ident, SamplingConfig(counts=(("linear", 1), ("quadratic", 1), ("mpl2", 1), ("mpl3", 1)))).points[0]
    rec = example_consistency(ident, pt, CTX)
    assert rec.status == "pass", rec.to_dict()
    assert rec.sign in (1, -1)


def test_consistency_rejects_general_id():
    with pytest.raises(SpecError):
        example_consistency("linear-S", ParamPoint((1, 2), (I, MINUS_ONE), 0.3))


# -- reduction ------------------------------------------------------------------------


def test_reduce_linear_to_polylogs():
    spec = SumSpec("S", (2,), 1, (MINUS_ONE,), I, -0.7)
    red = reduce_parity_combination(spec)
    assert red.identity == "linear-S"
    assert red.max_order == 0
    assert abs(red.point.a - 0.3) < 1e-12
    ev = TreeEvaluator(CTX, red.point.a)
    lv, _ = red.lhs.evaluate(red.point.a, CTX, ev)
    tv, _ = red.tree.evaluate(red.point.a, CTX, ev)
    assert abs(lv - tv) <= 10 * TOL


def test_reduce_quadratic_lowers_order():
    red = reduce_parity_combination(SumSpec("S", (1, 2), 2, (I, MINUS_ONE), MINUS_I, -0.7))
    assert red.max_order <= 1
    st_red = reduce_parity_combination(SumSpec("St", (1, 2), 2, (I, MINUS_ONE), MINUS_I, -0.7))
    assert any(isinstance(a, EulerSum) and a.family == "R" for a in st_red.tree.atoms())


def test_reduce_rejects_high_order_and_bad_shift():
    with pytest.raises(UnsupportedRangeError):
        reduce_parity_combination(SumSpec("S", (1, 1, 1), 2, (I, I, I), MINUS_ONE, 0.3))
    with pytest.raises(SpecError):
        reduce_parity_combination(SumSpec("S", (2,), 1, (MINUS_ONE,), I, -0.7), a=0.5)


# -- sampling -------------------------------------------------------------------------


def test_suite_points_deterministic_and_admissible():
    cfg = SamplingConfig()
    a = suite_points("linear-S", cfg)
    b = suite_points("linear-S", cfg)
    assert [p.key() for p in a.points] == [p.key() for p in b.points]
    assert len(a.points) == 25
    assert all(sum(p.exponents) <= cfg.max_weight for p in a.points)
    assert all(reason for _, reason in a.filtered)
    other = suite_points("linear-S", SamplingConfig(seed=1))
    assert [p.key() for p in other.points] != [p.key() for p in a.points]


def test_suite_points_respect_fixed_exponents():
    pts = suite_points("quadratic-R/ex-2-2-2").points
    assert pts and all(p.exponents == (2, 2, 2) for p in pts)


def test_param_point_round_trip():
    pt = ParamPoint((2, 1), (I, RootOfUnity(6, 5)), 0.25 + 0.1j)
    assert ParamPoint.from_dict(pt.to_dict()) == pt
