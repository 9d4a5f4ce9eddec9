"""Suite execution: run configuration, task fan-out and report assembly.

A run is a flat list of independent tasks, one per (suite, case).  Tasks go to
a process pool capped by ``jobs``; results come back in submission order, so
the report is the same for any ``jobs`` value.  Everything that depends on the
clock lives in the single ``timestamp`` header field.
"""

from __future__ import annotations

import csv
import fnmatch
import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from datetime import datetime, timezone
from typing import Optional

from . import __version__
from .identities import (
    IDENTITIES,
    ParamPoint,
    SamplingConfig,
    example_consistency,
    get_identity,
    identity_residual,
    suite_points,
)
from .kernel_expansions import (
    LinearKernel,
    ResidueTable,
    default_cases,
    residual_slope,
    residue_sum_check,
    richardson_residue,
)
from .errors import SpecError
from .precision import DEFAULT_CONTEXT, PrecisionContext
from .roots import RootOfUnity

CONFIG_ENV = "HURWITZ_PARITY_CONFIG"

LEMMA_SUITES = ("lemma-slope", "lemma-residue-closed-form", "lemma-residue-sum")
ALL_SUITES = tuple(IDENTITIES) + LEMMA_SUITES

SLOPE_MARGIN = 0.9
RICHARDSON_TOL = 1e-6
RESIDUE_SUM_CLASSES = (5, 10, 20, 40)
RESIDUE_SUM_BOUND = 1e-3
RESIDUE_SUM_SLACK = 2.0
# q >= 2 kernels: a q = 1 kernel decays only like 1/m and cannot reach 1e-3 at m = 40
RESIDUE_SUM_KERNELS = (
    (2, 2, "i", "-1", 0.3),
    (1, 2, "1", "i", 0.25 + 0.1j),
    (2, 3, "1", "1", 0.7),
    (2, 2, "i", "-1", 0.5),
)
# poles -n-a sit on the m+1/2 contour; only the retry and the decay are asserted there
DEGENERATE_SHIFTS = (0.5,)
RESIDUE_SAMPLES = 10
EXECUTION_ONLY = ("out", "csv", "jobs")


def _complex_to_json(z):
    z = complex(z)
    return [z.real, z.imag]


def _complex_from_json(v):
    if isinstance(v, (list, tuple)):
        return complex(v[0], v[1])
    return complex(v)


@dataclass
class RunConfig:
    precision_bits: int = DEFAULT_CONTEXT.precision_bits
    target_tol: float = DEFAULT_CONTEXT.target_tol
    max_terms: int = DEFAULT_CONTEXT.max_terms
    seed: int = 0
    suites: tuple = ("all",)
    sampling: dict = field(default_factory=dict)  # overrides of SamplingConfig fields
    out: Optional[str] = None
    csv: Optional[str] = None
    jobs: int = 1
    consistency: bool = False

    def __post_init__(self):
        if isinstance(self.suites, str):
            self.suites = (self.suites,)
        self.suites = tuple(self.suites)
        unknown = set(self.sampling) - {"orders", "shifts", "max_weight", "counts", "eps_pole"}
        if unknown:
            raise SpecError(f"unknown sampling override(s): {sorted(unknown)}", "sampling keys")
        self.sampling = _normalize_sampling(self.sampling)

    def context(self) -> PrecisionContext:
        return PrecisionContext(self.precision_bits, self.target_tol, self.max_terms)

    def sampling_config(self) -> SamplingConfig:
        kw = dict(self.sampling)
        if "orders" in kw:
            kw["orders"] = tuple(kw["orders"])
        if "shifts" in kw:
            kw["shifts"] = tuple(_complex_from_json(s) for s in kw["shifts"])
        if "counts" in kw:
            base = dict(SamplingConfig().counts)
            base.update(kw["counts"])
            kw["counts"] = tuple(base.items())
        return SamplingConfig(seed=self.seed, **kw)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["suites"] = list(self.suites)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        names = {f.name for f in fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise SpecError(f"unknown config key(s): {sorted(unknown)}", "config keys")
        return cls(**d)

    def echo(self) -> dict:
        """The settings that determine report content (destinations and pool size excluded)."""
        d = self.to_dict()
        for k in EXECUTION_ONLY:
            d.pop(k)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        return cls.from_dict(json.loads(text))


def _normalize_sampling(s: dict) -> dict:
    out = {}
    for k, v in s.items():
        if k == "shifts":
            v = [_complex_to_json(_complex_from_json(z)) for z in v]
        elif k == "orders":
            v = [int(n) for n in v]
        elif k == "counts":
            v = {str(kk): int(vv) for kk, vv in dict(v).items()}
        out[k] = v
    return out


def load_config(path: Optional[str] = None) -> RunConfig:
    """Config from ``path``, else from ``$HURWITZ_PARITY_CONFIG``, else defaults."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return RunConfig()
    with open(path, encoding="utf-8") as fh:
        return RunConfig.from_json(fh.read())


def select_suites(patterns) -> list:
    """Suite ids matching any glob; a glob matching nothing is an error."""
    chosen = set()
    for pat in patterns:
        for p in (s.strip() for s in pat.split(",")):
            if not p:
                continue
            if p == "all":
                chosen.update(ALL_SUITES)
                continue
            hits = [s for s in ALL_SUITES if fnmatch.fnmatchcase(s, p)]
            if not hits:
                raise SpecError(f"suite pattern {p!r} matches no identity or lemma suite", "known suite")
            chosen.update(hits)
    return [s for s in ALL_SUITES if s in chosen]


# -- tasks --------------------------------------------------------------------------


def _ctx_from(params) -> PrecisionContext:
    return PrecisionContext(*params)


def _identity_task(payload):
    ident, point, ctx_params = payload
    rec = identity_residual(ident, ParamPoint.from_dict(point), _ctx_from(ctx_params))
    return rec.to_dict()


def _consistency_task(payload):
    ident, point, ctx_params = payload
    return example_consistency(ident, ParamPoint.from_dict(point), _ctx_from(ctx_params)).to_dict()


def _case_dict(c) -> dict:
    return {"kind": c.kind, "n": c.n, "p": c.p, "x": str(c.x), "a": _complex_to_json(c.a), "K": c.K}


def _slope_task(payload):
    (case,) = payload
    slope = residual_slope(case)
    need = case.K + SLOPE_MARGIN
    return {"suite": "lemma-slope", "case": _case_dict(case), "measured": slope, "threshold": need,
            "comparison": ">=", "status": "pass" if slope >= need else "fail"}


def residue_samples(seed: int, count: int = RESIDUE_SAMPLES) -> list:
    """Seeded ``(p, q, x, y, a, pole)`` tuples for the closed-form residue cross-check."""
    rng = random.Random(seed + 2024)
    roots = [RootOfUnity(1), RootOfUnity(2, 1), RootOfUnity(3, 1), RootOfUnity(4, 1), RootOfUnity(4, 3)]
    shifts = (0.3, -0.4, 0.7, 0.25 + 0.1j, -0.35 + 0.2j)
    out = []
    while len(out) < count:
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        x, y = rng.choice(roots), rng.choice(roots)
        if p == 1 and y.is_one:
            continue
        out.append((p, q, x, y, rng.choice(shifts), rng.randint(-3, 3)))
    return out


def _richardson_task(payload):
    p, q, x, y, a, pole = payload
    kernel = LinearKernel(p, q, x, y, a)
    table = ResidueTable(kernel)
    closed = complex(table.at_nonnegative(pole) if pole >= 0 else table.at_negative(-pole))
    numeric = richardson_residue(kernel, pole)
    err = abs(closed - numeric)
    return {"suite": "lemma-residue-closed-form",
            "case": {"p": p, "q": q, "x": str(x), "y": str(y), "a": _complex_to_json(a), "pole": pole},
            "closed_form": _complex_to_json(closed), "numeric": _complex_to_json(numeric),
            "measured": err, "threshold": RICHARDSON_TOL, "comparison": "<=",
            "status": "pass" if err <= RICHARDSON_TOL else "fail"}


def _residue_sum_task(payload):
    p, q, x, y, a = payload
    xs, ys = RootOfUnity.parse(x), RootOfUnity.parse(y)
    mags = [abs(residue_sum_check(p, q, xs, ys, a, m)) for m in RESIDUE_SUM_CLASSES]
    monotone = all(b <= RESIDUE_SUM_SLACK * a_ for a_, b in zip(mags, mags[1:]))
    bounded = complex(a) in DEGENERATE_SHIFTS or mags[-1] < RESIDUE_SUM_BOUND
    ok = monotone and bounded
    return {"suite": "lemma-residue-sum",
            "case": {"p": p, "q": q, "x": x, "y": y, "a": _complex_to_json(a)},
            "classes": list(RESIDUE_SUM_CLASSES), "magnitudes": mags, "monotone": monotone,
            "bound_applies": complex(a) not in DEGENERATE_SHIFTS,
            "measured": mags[-1], "threshold": RESIDUE_SUM_BOUND, "comparison": "<",
            "status": "pass" if ok else "fail"}


def _run_task(task):
    kind, payload = task
    t0 = time.perf_counter()
    out = _TASKS[kind](payload)
    return out, time.perf_counter() - t0


_TASKS = {
    "identity": _identity_task,
    "consistency": _consistency_task,
    "slope": _slope_task,
    "richardson": _richardson_task,
    "residue-sum": _residue_sum_task,
}


def _suite_tasks(suite: str, cfg: RunConfig, ctx_params):
    """(tasks, filtered) for one suite."""
    if suite == "lemma-slope":
        return [("slope", (c,)) for c in default_cases()], []
    if suite == "lemma-residue-closed-form":
        return [("richardson", s) for s in residue_samples(cfg.seed)], []
    if suite == "lemma-residue-sum":
        return [("residue-sum", k) for k in RESIDUE_SUM_KERNELS], []
    sp = suite_points(suite, cfg.sampling_config())
    tasks = [("identity", (suite, pt.to_dict(), ctx_params)) for pt in sp.points]
    filtered = [{"point": d, "reason": r} for d, r in sp.filtered]
    return tasks, filtered


def _map(tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_task, tasks, chunksize=1))


def _tally(records) -> dict:
    c = {"pass": 0, "fail": 0, "skipped": 0}
    for r in records:
        st = r["status"]
        c["skipped" if st.startswith("skipped") else ("pass" if st == "pass" else "fail")] += 1
    return c


def _conventions(suites) -> Optional[dict]:
    """Per-convention tallies over the reflection records, and which reading passed."""
    recs = [r for s in suites for r in s["records"] if "convention" in r and r["status"] != "skipped-divergent"]
    if not recs:
        return None
    label = {"pass": sum(r["status"] == "pass" for r in recs), "fail": sum(r["status"] == "fail" for r in recs)}
    out = {"label": label}
    for r in recs:
        for name, alt in r["alternatives"].items():
            t = out.setdefault(name, {"pass": 0, "fail": 0})
            if alt["status"] in ("pass", "fail"):
                t[alt["status"]] += 1
    out["passing"] = sorted(k for k, v in out.items() if v["fail"] == 0 and v["pass"] > 0)
    return out


def run_suites(cfg: RunConfig, progress=None) -> dict:
    """Execute the selected suites and return the report dictionary."""
    suites = select_suites(cfg.suites)
    ctx = cfg.context()
    ctx_params = (ctx.precision_bits, ctx.target_tol, ctx.max_terms)
    t_start = time.perf_counter()
    plan, all_tasks = [], []
    for s in suites:
        tasks, filtered = _suite_tasks(s, cfg, ctx_params)
        plan.append((s, len(all_tasks), len(tasks), filtered))
        all_tasks += tasks
    cons_start = len(all_tasks)
    cons_ids = []
    if cfg.consistency:
        for s, start, n, _ in plan:
            if s in IDENTITIES and get_identity(s).is_example:
                for _, (ident, pt, cp) in all_tasks[start:start + n]:
                    all_tasks.append(("consistency", (ident, pt, cp)))
                    cons_ids.append(ident)
    results = _map(all_tasks, cfg.jobs)
    out_suites, timing = [], {}
    for s, start, n, filtered in plan:
        chunk = results[start:start + n]
        recs = [r for r, _ in chunk]
        timing[s] = round(sum(t for _, t in chunk), 3)
        entry = {"suite": s, "records": recs, "summary": _tally(recs)}
        if s in IDENTITIES:
            d = get_identity(s)
            entry.update(kind=d.kind, tolerance=d.tol, parent=d.parent, filtered=filtered)
        out_suites.append(entry)
        if progress:
            progress(entry)
    report = {
        "timestamp": {
            "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "wall_clock_s": timing,
            "total_s": round(time.perf_counter() - t_start, 3),
        },
        "tool": {"name": "hurwitz-parity", "version": __version__},
        "config": cfg.echo(),
        "suites": out_suites,
        "summary": _tally([r for s in out_suites for r in s["records"]]),
    }
    conv = _conventions(out_suites)
    if conv is not None:
        report["conventions"] = conv
    if cfg.consistency:
        report["consistency"] = [r for r, _ in results[cons_start:]]
        report["summary"]["consistency_fail"] = sum(r["status"] != "pass" for r in report["consistency"])
    return report


# -- serialization ------------------------------------------------------------------


def _clean(v):
    # strict JSON: NaN/inf become null
    if isinstance(v, float):
        return v if math.isfinite(v) else None
    if isinstance(v, dict):
        return {k: _clean(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_clean(x) for x in v]
    return v


def dumps_report(report: dict) -> str:
    """JSON text whose second line is the whole ``timestamp`` header and nothing else."""
    body = {k: v for k, v in report.items() if k != "timestamp"}
    head = json.dumps(_clean(report.get("timestamp", {})), sort_keys=True)
    rest = json.dumps(_clean(body), sort_keys=True, indent=1)
    return "{\n \"timestamp\": " + head + ",\n" + rest[2:] + "\n"


def strip_timestamp(text: str) -> str:
    return "\n".join(line for line in text.splitlines() if not line.startswith(' "timestamp": '))


def write_csv(report: dict, path: str) -> None:
    cols = ["suite", "status", "abs_err", "tol_used", "case"]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(cols)
        for s in report["suites"]:
            for r in s["records"]:
                case = r.get("point") or r.get("case")
                err = r.get("abs_err", r.get("measured"))
                tol = r.get("tol_used", r.get("threshold"))
                w.writerow([s["suite"], r["status"], err, tol, json.dumps(case, sort_keys=True)])


def schema_path() -> str:
    return os.path.join(os.path.dirname(__file__), "schema", "report.schema.json")


def sweep(cfg: RunConfig) -> list:
    """The planned cases of each selected suite, without evaluating anything."""
    out = []
    for s in select_suites(cfg.suites):
        if s == "lemma-slope":
            cases = [_case_dict(c) for c in default_cases()]
            out.append({"suite": s, "cases": cases, "filtered": []})
        elif s == "lemma-residue-closed-form":
            cases = [{"p": p, "q": q, "x": str(x), "y": str(y), "a": _complex_to_json(a), "pole": n}
                     for p, q, x, y, a, n in residue_samples(cfg.seed)]
            out.append({"suite": s, "cases": cases, "filtered": []})
        elif s == "lemma-residue-sum":
            cases = [{"p": p, "q": q, "x": x, "y": y, "a": _complex_to_json(a)} for p, q, x, y, a in RESIDUE_SUM_KERNELS]
            out.append({"suite": s, "cases": cases, "filtered": []})
        else:
            sp = suite_points(s, cfg.sampling_config())
            out.append({"suite": s, "cases": [p.to_dict() for p in sp.points],
                        "filtered": [{"point": d, "reason": r} for d, r in sp.filtered]})
    return out
