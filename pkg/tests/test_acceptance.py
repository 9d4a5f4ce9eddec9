"""End-to-end acceptance checks; each prints one PASS/FAIL line."""

import json
import random
import time

import mpmath
import pytest

from hurwitz_parity import (
    DivergenceError,
    DEFAULT_CONTEXT,
    PrecisionContext,
    RootOfUnity,
    SpecError,
    SumSpec,
    eval_euler_sum,
    even_zeta_via_bernoulli,
    polylog,
)
from hurwitz_parity.cli import main
from hurwitz_parity.expr import TreeEvaluator
from hurwitz_parity.harness import strip_timestamp
from hurwitz_parity.identities import IDENTITIES, RELATION_OFFSET, reduce_parity_combination

from oracles import oracle_specs
from test_euler_sums import _stuffle_residual, stuffle_cases

SHIFTS = (0.3, -0.4, 0.7, 0.25 + 0.1j, -0.35 + 0.2j)


def report_line(name, ok, detail):
    return f"ACCEPTANCE {'PASS' if ok else 'FAIL'} {name}: {detail}"


@pytest.fixture
def emit(capsys):
    def _emit(name, ok, detail):
        with capsys.disabled():
            print("\n" + report_line(name, ok, detail))
        assert ok, detail
    return _emit


@pytest.fixture(scope="module")
def verify_runs(tmp_path_factory):
    d = tmp_path_factory.mktemp("verify")
    texts = []
    for k in range(2):
        path = d / f"run{k}.json"
        code = main(["verify", "--consistency", "--out", str(path)], out=open(d / f"log{k}.txt", "w"))
        texts.append((code, path.read_text()))
    return texts


@pytest.fixture(scope="module")
def report(verify_runs):
    return json.loads(verify_runs[0][1])


def _suites(report, kinds):
    return [s for s in report["suites"] if s.get("kind") in kinds]


def _group(report, kinds, min_points, tol):
    suites = _suites(report, kinds)
    worst = max(r["abs_err"] for s in suites for r in s["records"] if r["abs_err"] is not None)
    short = [s["suite"] for s in suites if s["summary"]["pass"] < min_points]
    fails = sum(s["summary"]["fail"] + s["summary"]["skipped"] for s in suites)
    secs = sum(report["timestamp"]["wall_clock_s"][s["suite"]] for s in suites)
    return suites, worst, short, fails, secs


def test_calibration(emit):
    ctx = PrecisionContext(precision_bits=256)
    t0 = time.perf_counter()
    one = RootOfUnity(1)
    errs = [abs(polylog(2, one, ctx) - mpmath.pi**2 / 6)]
    errs += [abs(polylog(2 * m, one, ctx) - even_zeta_via_bernoulli(m, ctx)) for m in range(1, 5)]
    secs = time.perf_counter() - t0
    worst = float(max(errs))
    emit("calibration", worst <= 1e-25 and secs < 1, f"max error {worst:.2e}, {secs:.3f}s")


def test_oracle_equivalence(emit):
    t0 = time.perf_counter()
    brute_ctx = PrecisionContext(max_terms=100_000)
    bad = 0
    for spec in oracle_specs():
        acc = eval_euler_sum(spec, DEFAULT_CONTEXT)
        brute = eval_euler_sum(spec, brute_ctx, accelerated=False)
        if abs(complex(acc.value) - complex(brute.value)) > acc.error_estimate + brute.error_estimate:
            bad += 1
    secs = time.perf_counter() - t0
    emit("oracle equivalence", bad == 0 and secs < 120, f"20 specs, {bad} disagreements, {secs:.1f}s")


def test_linear_suites(emit, report):
    suites, worst, short, fails, secs = _group(report, ("linear",), 25, 1e-10)
    ok = len(suites) == 9 and not short and fails == 0 and worst <= 1e-10 and secs < 300
    emit("linear parity suites", ok, f"{len(suites)} suites, max |LHS-RHS| {worst:.1e}, {secs:.1f}s")


def test_quadratic_suites(emit, report):
    suites, worst, short, fails, secs = _group(report, ("quadratic",), 15, 1e-10)
    ok = len(suites) == 9 and not short and fails == 0 and worst <= 1e-10 and secs < 900
    emit("quadratic parity suites", ok, f"{len(suites)} suites, max |LHS-RHS| {worst:.1e}, {secs:.1f}s")


def test_reflection_suites(emit, report):
    d2 = _group(report, ("mpl2",), 15, 1e-8)
    d3 = _group(report, ("mpl3",), 8, 1e-8)
    passing = report["conventions"]["passing"]
    secs = d2[4] + d3[4]
    ok = (len(d2[0]) == 3 and len(d3[0]) == 2 and not d2[2] and not d3[2] and d2[3] + d3[3] == 0
          and max(d2[1], d3[1]) <= 1e-8 and passing == ["label"] and secs < 1200)
    emit("reflection suites", ok,
         f"max |LHS-RHS| {max(d2[1], d3[1]):.1e}, passing convention {passing}, {secs:.1f}s")


def _reduction_specs(family, count=10, seed=0):
    rng = random.Random(f"{family}-{seed}")
    out = []
    while len(out) < count:
        p1, p2, q = (rng.randint(1, 3) for _ in range(3))
        if p1 + p2 + q > 6:
            continue
        N = rng.choice((1, 2, 3, 4, 6))
        x1, x2, x = (RootOfUnity(N, rng.randrange(N)) for _ in range(3))
        a = rng.choice(SHIFTS)
        try:
            spec = SumSpec(family, (p1, p2), q, (x1, x2), x, complex(a) - RELATION_OFFSET[family])
            red = reduce_parity_combination(spec)
        except (SpecError, DivergenceError):
            continue
        out.append(red)
    return out


def test_reduction_engine(emit):
    worst, max_order, n = 0.0, 0, 0
    for fam in ("S", "St", "R"):
        for red in _reduction_specs(fam):
            ev = TreeEvaluator(DEFAULT_CONTEXT, red.point.a)
            lv, _ = red.lhs.evaluate(red.point.a, DEFAULT_CONTEXT, ev)
            tv, _ = red.tree.evaluate(red.point.a, DEFAULT_CONTEXT, ev)
            worst = max(worst, float(abs(lv - tv)))
            max_order = max(max_order, red.max_order)
            n += 1
    emit("reduction engine", n == 30 and worst <= 1e-10 and max_order < 2,
         f"{n} specs, max residual {worst:.1e}, max atom order {max_order}")


def test_lemma_suites(emit, report):
    lem = {s["suite"]: s for s in report["suites"] if s["suite"].startswith("lemma-")}
    fails = sum(s["summary"]["fail"] for s in lem.values())
    slope_n = lem["lemma-slope"]["summary"]["pass"]
    m40 = [r["magnitudes"][-1] for r in lem["lemma-residue-sum"]["records"] if r["bound_applies"]]
    ok = len(lem) == 3 and fails == 0 and max(m40) < 1e-3
    emit("lemma suites", ok, f"{slope_n} slope cases, residue-sum m=40 max {max(m40):.1e}, {fails} failures")


def test_stuffle(emit):
    cases = stuffle_cases()
    worst = max(float(_stuffle_residual(*c)) for c in cases)
    tol = DEFAULT_CONTEXT.target_tol
    emit("stuffle depth 2", len(cases) == 36 and worst <= 10 * tol, f"36 cases, max residual {worst:.1e}")


def test_determinism(emit, verify_runs):
    (c0, t0), (c1, t1) = verify_runs
    same = strip_timestamp(t0) == strip_timestamp(t1)
    diff = [i for i, (a, b) in enumerate(zip(t0.splitlines(), t1.splitlines())) if a != b]
    emit("determinism", same and c0 == c1 == 0 and diff == [1],
         f"exit codes {c0}/{c1}, differing lines {diff}")
