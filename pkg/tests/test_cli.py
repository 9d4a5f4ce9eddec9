import csv
import io
import json

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hurwitz_parity.cli import main, parse_complex, parse_expression, ParseError
from hurwitz_parity.harness import (
    CONFIG_ENV,
    RunConfig,
    dumps_report,
    run_suites,
    schema_path,
    select_suites,
    strip_timestamp,
)
from hurwitz_parity import SpecError

SMALL = {"counts": {"linear": 2, "quadratic": 1, "mpl2": 2, "mpl3": 1}}


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.fixture
def small_config(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(RunConfig(sampling=SMALL).to_json())
    return str(path)


@pytest.fixture(scope="module")
def schema():
    with open(schema_path(), encoding="utf-8") as fh:
        return json.load(fh)


# -- eval -----------------------------------------------------------------------------


@pytest.mark.parametrize("argv, prefix", [
    (("li", "2", "1"), "1.6449340668"),
    (("hli", "1", "-1", "0"), "-0.6931471805"),
    (("sum", "S", "1", "2", "1", "1", "0"), "2.4041138063"),
    (("Phi", "0.3", "i"), None),
    (("phi", "2", "0.5", "-1"), None),
    (("mpl", "1", "2", "1", "1", "0"), "1.2020569031"),
])
def test_eval_examples(argv, prefix):
    code, text = run("eval", *argv)
    assert code == 0
    lines = dict(l.split(": ", 1) for l in text.strip().splitlines())
    assert set(lines) == {"value", "error_estimate", "terms_used"}
    if prefix:
        assert lines["value"].startswith(prefix)


def test_eval_exit_codes():
    assert run("eval", "sum", "S", "1", "1", "i", "1", "0.3")[0] == 3
    assert run("eval", "li", "two", "1")[0] == 2
    assert run("eval", "frob", "1")[0] == 2
    assert run("eval")[0] == 2
    assert run("nonsense")[0] == 2


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_expression(["li", "2", "q"])
    assert exc.value.position == 2


def test_parse_complex_forms():
    assert parse_complex("0.25+0.1i") == 0.25 + 0.1j
    assert parse_complex("a=-0.4") == -0.4
    assert parse_complex("1j") == 1j


# -- reduce ---------------------------------------------------------------------------


def test_reduce_check():
    code, text = run("reduce", "S", "2", "1", "-1", "i", "a=0.3", "--check")
    assert code == 0
    assert "# reduces to (max atom order 0)" in text
    residual = float(text.strip().splitlines()[-1].split(": ")[1])
    assert residual < 1e-25


def test_reduce_quadratic_and_unsupported():
    code, text = run("reduce", "St", "1", "2", "2", "i", "-1", "-i", "a=0.3")
    assert code == 0
    assert "max atom order 1" in text
    assert run("reduce", "S", "1", "1", "1", "2", "i", "i", "i", "-1", "a=0.3")[0] == 4


# -- verify / lemmas / sweep ----------------------------------------------------------


def test_verify_small_suite_validates(tmp_path, small_config, schema):
    out = tmp_path / "r.json"
    csv_path = tmp_path / "r.csv"
    code, text = run("verify", "--config", small_config, "--suite", "linear-S*", "--suite", "mpl2*",
                     "--consistency", "--out", str(out), "--csv", str(csv_path))
    assert code == 0, text
    assert "TOTAL" in text and "reflection label convention passing: label" in text
    report = json.loads(out.read_text())
    jsonschema.validate(report, schema)
    assert report["summary"]["fail"] == 0
    assert "consistency" in report
    for s in report["suites"]:
        tally = {k: 0 for k in ("pass", "fail", "skipped")}
        for r in s["records"]:
            tally["skipped" if r["status"].startswith("skipped") else r["status"]] += 1
        assert tally == {k: s["summary"][k] for k in tally}
    rows = list(csv.reader(csv_path.open()))
    assert rows[0] == ["suite", "status", "abs_err", "tol_used", "case"]
    assert len(rows) - 1 == sum(len(s["records"]) for s in report["suites"])


def test_report_is_deterministic():
    cfg = RunConfig(sampling=SMALL, suites=("linear-R", "lemma-residue-closed-form"))
    a = strip_timestamp(dumps_report(run_suites(cfg)))
    b = strip_timestamp(dumps_report(run_suites(cfg)))
    assert a == b
    assert "timestamp" not in a


def test_lemmas_report_validates(tmp_path, schema):
    out = tmp_path / "l.json"
    code, _ = run("lemmas", "--suite", "lemma-residue-*", "--out", str(out))
    assert code == 0
    report = json.loads(out.read_text())
    jsonschema.validate(report, schema)
    assert {s["suite"] for s in report["suites"]} == {"lemma-residue-closed-form", "lemma-residue-sum"}


def test_unknown_suite_glob():
    assert run("verify", "--suite", "nosuch.*")[0] == 2
    with pytest.raises(SpecError):
        select_suites(["nothing*"])
    assert select_suites(["all"])[-1] == "lemma-residue-sum"


def test_sweep_lists_cases(tmp_path, small_config):
    out = tmp_path / "plan.json"
    code, text = run("sweep", "--config", small_config, "--suite", "quadratic-*", "--out", str(out))
    assert code == 0
    plan = json.loads(out.read_text())
    assert len(plan) == 9
    assert all(len(s["cases"]) == 1 for s in plan)


# -- config ---------------------------------------------------------------------------


configs = st.builds(
    RunConfig,
    precision_bits=st.integers(64, 1024),
    target_tol=st.sampled_from([1e-20, 1e-30, 1e-40]),
    max_terms=st.integers(100, 10**6),
    seed=st.integers(0, 2**31),
    suites=st.lists(st.sampled_from(["all", "linear-*", "mpl*", "lemma-slope"]), min_size=1).map(tuple),
    sampling=st.fixed_dictionaries({}, optional={
        "orders": st.lists(st.sampled_from([1, 2, 3, 4, 6]), min_size=1),
        "shifts": st.lists(st.complex_numbers(max_magnitude=0.9, allow_nan=False, allow_infinity=False), min_size=1),
        "max_weight": st.integers(2, 8),
        "counts": st.dictionaries(st.sampled_from(["linear", "quadratic", "mpl2", "mpl3"]), st.integers(1, 30)),
    }),
    jobs=st.integers(1, 8),
    consistency=st.booleans(),
)


@given(configs)
def test_config_round_trip(cfg):
    again = RunConfig.from_json(cfg.to_json())
    assert again == cfg
    assert again.to_json() == cfg.to_json()


def test_config_rejects_unknown_keys():
    with pytest.raises(SpecError):
        RunConfig.from_dict({"precision": 3})
    with pytest.raises(SpecError):
        RunConfig(sampling={"colour": 1})


def test_config_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "env.json"
    path.write_text(RunConfig(seed=7, sampling=SMALL).to_json())
    monkeypatch.setenv(CONFIG_ENV, str(path))
    code, _ = run("sweep", "--suite", "linear-S")
    assert code == 0
    from hurwitz_parity.harness import load_config
    assert load_config().seed == 7
    # an explicit flag beats the file
    out = tmp_path / "plan.json"
    run("sweep", "--suite", "linear-S", "--seed", "3", "--out", str(out))
    assert len(json.loads(out.read_text())[0]["cases"]) == 2
