"""Identity registry, parameter points and residual evaluation."""

from __future__ import annotations

import fnmatch
import itertools
import random
import zlib
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..errors import DivergenceError, PrecisionError, SpecError, UnsupportedRangeError
from ..euler_sums import SumSpec
from ..expr import ExpressionTree
from ..precision import DEFAULT_CONTEXT, PrecisionContext, lattice_distance
from ..roots import RootOfUnity
from . import linear, quadratic, reflection
from .notation import CONVENTIONS, Notation, tree

PARITY_TOL = 1e-10
REFLECTION_TOL = 1e-8
CONSISTENCY_TOL = 1e-12


@dataclass(frozen=True)
class IdentityDef:
    id: str
    kind: str  # linear | quadratic | mpl2 | mpl3
    lhs: Callable
    rhs: Callable
    hypotheses: Callable
    arity: int
    family: Optional[str] = None
    exponents: Optional[tuple] = None  # fixed for worked examples
    parent: Optional[str] = None
    description: str = ""

    @property
    def is_example(self) -> bool:
        return self.parent is not None

    @property
    def is_reflection(self) -> bool:
        return self.kind in ("mpl2", "mpl3")

    @property
    def tol(self) -> float:
        return REFLECTION_TOL if self.is_reflection else PARITY_TOL


def _registry():
    out = {}

    def add(d: IdentityDef):
        out[d.id] = d

    for mod, kind, arity, fams in (
        (linear, "linear", 2, ("S", "St", "R")),
        (quadratic, "quadratic", 3, ("S", "St", "R")),
    ):
        for fam in fams:
            base = f"{kind}-{fam}"
            low = fam.lower()
            add(IdentityDef(base, kind, getattr(mod, f"{low}_lhs"), getattr(mod, f"{low}_rhs"),
                            mod.hypotheses, arity, fam, description=f"{kind} parity relation, family {fam}"))
            if kind == "linear":
                exs = ((1, 2), (2, 1))
            else:
                exs = ((1, 1, 2), (2, 2, 2) if fam == "R" else (1, 2, 2))
            for e in exs:
                tag = "".join(map(str, e))
                add(IdentityDef(f"{base}/ex-{'-'.join(map(str, e))}", kind,
                                getattr(mod, f"{low}_ex{tag}_lhs"), getattr(mod, f"{low}_ex{tag}_rhs"),
                                mod.hypotheses, arity, fam, e, base, f"worked instance of {base} at {e}"))
    add(IdentityDef("mpl2-reflection", "mpl2", reflection.mpl2_lhs, reflection.mpl2_rhs,
                    reflection.mpl2_hypotheses, 2, description="depth-2 reflection"))
    for e in ((2, 2), (2, 3)):
        tag = "".join(map(str, e))
        add(IdentityDef(f"mpl2-reflection/ex-{e[0]}-{e[1]}", "mpl2", getattr(reflection, f"mpl2_ex{tag}_lhs"),
                        getattr(reflection, f"mpl2_ex{tag}_rhs"), reflection.mpl2_hypotheses, 2, None, e,
                        "mpl2-reflection", f"worked instance of mpl2-reflection at {e}"))
    add(IdentityDef("mpl3-reflection", "mpl3", reflection.mpl3_lhs, reflection.mpl3_rhs,
                    reflection.mpl3_hypotheses, 3, description="depth-3 reflection"))
    add(IdentityDef("mpl3-reflection/ex-2-1-2", "mpl3", reflection.mpl3_ex212_lhs, reflection.mpl3_ex212_rhs,
                    reflection.mpl3_hypotheses, 3, None, (2, 1, 2), "mpl3-reflection",
                    "worked instance of mpl3-reflection at (2, 1, 2)"))
    return out


IDENTITIES: dict = _registry()


def get_identity(identity_id: str) -> IdentityDef:
    try:
        return IDENTITIES[identity_id]
    except KeyError:
        raise SpecError(f"unknown identity {identity_id!r}", "known identity") from None


def select_identities(pattern: Optional[str] = None) -> list:
    """Identity ids matching a glob (``None`` or ``"all"`` selects everything)."""
    if pattern in (None, "", "all"):
        return list(IDENTITIES)
    pats = [p.strip() for p in pattern.split(",") if p.strip()]
    return [i for i in IDENTITIES if any(fnmatch.fnmatchcase(i, p) for p in pats)]


# -- points -----------------------------------------------------------------------


@dataclass(frozen=True)
class ParamPoint:
    exponents: tuple
    args: tuple
    a: complex

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(k) for k in self.exponents))
        object.__setattr__(self, "args", tuple(r if isinstance(r, RootOfUnity) else RootOfUnity.parse(r)
                                               for r in self.args))
        object.__setattr__(self, "a", complex(self.a))

    def to_dict(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "args": [str(r) for r in self.args],
            "a": [self.a.real, self.a.imag],
        }

    @classmethod
    def from_dict(cls, d) -> "ParamPoint":
        a = d["a"]
        if isinstance(a, (list, tuple)):
            a = complex(a[0], a[1])
        return cls(tuple(d["exponents"]), tuple(d["args"]), a)

    def key(self):
        return (self.exponents, tuple(r.as_tuple() for r in self.args), (self.a.real, self.a.imag))

    def __str__(self):
        args = ",".join(str(r) for r in self.args)
        return f"k={self.exponents} x=({args}) a={self.a:g}"


def check_point(d: IdentityDef, pt: ParamPoint, eps_pole: float = DEFAULT_CONTEXT.eps_pole) -> None:
    """Raise :class:`SpecError` naming the first violated hypothesis."""
    if len(pt.exponents) != d.arity or len(pt.args) != d.arity:
        raise SpecError(f"{d.id} takes {d.arity} exponents and {d.arity} arguments", "arity")
    if min(pt.exponents) < 1:
        raise SpecError("exponents must be positive", "exponents >= 1")
    if d.exponents is not None and pt.exponents != d.exponents:
        raise SpecError(f"{d.id} is fixed at exponents {d.exponents}", f"exponents == {d.exponents}")
    if lattice_distance(pt.a, "not-in-Z") < eps_pole:
        raise SpecError(f"a={pt.a:g} is within {eps_pole:g} of an integer", "a not in Z")
    for name, ok in d.hypotheses(pt.exponents, pt.args):
        if not ok:
            raise SpecError(f"{d.id}: hypothesis {name} violated at {pt}", name)


def _notation(convention):
    if convention not in CONVENTIONS:
        raise SpecError(f"unknown label convention {convention!r}", "convention")
    return Notation(convention)


def build_parity_lhs(identity_id: str, pt: ParamPoint, convention: str = "label") -> ExpressionTree:
    d = get_identity(identity_id)
    check_point(d, pt)
    return tree(d.lhs(pt.exponents, pt.args, _notation(convention)), pt.a)


def build_parity_rhs(identity_id: str, pt: ParamPoint, convention: str = "label") -> ExpressionTree:
    d = get_identity(identity_id)
    check_point(d, pt)
    return tree(d.rhs(pt.exponents, pt.args, _notation(convention)), pt.a)


# -- residuals --------------------------------------------------------------------


@dataclass
class ResidualRecord:
    identity: str
    point: ParamPoint
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    tol_used: float
    status: str  # pass | fail | skipped-divergent
    convention: Optional[str] = None
    alternatives: dict = field(default_factory=dict)
    diagnostics: str = ""

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "point": self.point.to_dict(),
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "tol_used": self.tol_used,
            "status": self.status,
        }
        if self.convention is not None:
            out["convention"] = self.convention
            out["alternatives"] = self.alternatives
        if self.diagnostics:
            out["diagnostics"] = self.diagnostics
        return out


def _nan():
    return complex(float("nan"), float("nan"))


def _evaluate_pair(d, pt, ctx, convention):
    from ..expr import TreeEvaluator

    n = _notation(convention)
    ev = TreeEvaluator(ctx, pt.a)
    lv, le = tree(d.lhs(pt.exponents, pt.args, n), pt.a).evaluate(pt.a, ctx, ev)
    rv, re_ = tree(d.rhs(pt.exponents, pt.args, n), pt.a).evaluate(pt.a, ctx, ev)
    return complex(lv), complex(rv), float(abs(lv - rv)), le + re_


def identity_residual(identity_id: str, pt: ParamPoint, ctx: PrecisionContext = DEFAULT_CONTEXT,
                      tol: Optional[float] = None) -> ResidualRecord:
    """Evaluate both sides at ``pt``; reflection ids also report the alternative label reading."""
    d = get_identity(identity_id)
    check_point(d, pt, ctx.eps_pole)
    tol = d.tol if tol is None else tol
    conv = "label" if d.is_reflection else None
    try:
        lv, rv, err, _ = _evaluate_pair(d, pt, ctx, "label")
    except DivergenceError as exc:
        return ResidualRecord(identity_id, pt, _nan(), _nan(), float("nan"), float("nan"), tol,
                              "skipped-divergent", conv, diagnostics=str(exc))
    except PrecisionError as exc:
        return ResidualRecord(identity_id, pt, _nan(), _nan(), float("nan"), float("nan"), tol, "fail", conv,
                              diagnostics=f"precision: {exc} (achieved {exc.achieved})")
    scale = max(abs(lv), abs(rv))
    rel = err / scale if scale else err
    status = "pass" if (err <= tol or rel <= tol) else "fail"
    rec = ResidualRecord(identity_id, pt, lv, rv, err, rel, tol, status, conv)
    if d.is_reflection:
        for other in CONVENTIONS:
            if other == "label":
                continue
            try:
                _, _, oerr, _ = _evaluate_pair(d, pt, ctx, other)
                rec.alternatives[other] = {"abs_err": oerr, "status": "pass" if oerr <= tol else "fail"}
            except (DivergenceError, PrecisionError) as exc:
                rec.alternatives[other] = {"abs_err": None, "status": "skipped-divergent", "diagnostics": str(exc)}
    return rec


# -- example against general formula ----------------------------------------------


@dataclass
class ConsistencyRecord:
    identity: str
    parent: str
    point: ParamPoint
    sign: int
    abs_err: float
    status: str  # pass | fail | lhs-mismatch
    structural_difference: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "parent": self.parent,
            "point": self.point.to_dict(),
            "sign": self.sign,
            "abs_err": self.abs_err,
            "status": self.status,
            "structural_difference": self.structural_difference,
        }


def _difference_terms(t: ExpressionTree) -> list:
    text = t.canonical_text()
    return [] if text == "0" else text.splitlines()


def example_consistency(identity_id: str, pt: ParamPoint, ctx: PrecisionContext = DEFAULT_CONTEXT,
                        tol: float = CONSISTENCY_TOL) -> ConsistencyRecord:
    """Compare a worked example's right side with its general formula at the same point.

    The example's left side must equal ``sign`` times the general left side as
    exact trees; the right sides are then compared numerically.  Surviving
    terms of the expanded difference are reported, never corrected.
    """
    from ..expr import TreeEvaluator

    d = get_identity(identity_id)
    if not d.is_example:
        raise SpecError(f"{identity_id} is not a worked example", "example id")
    parent = get_identity(d.parent)
    check_point(d, pt, ctx.eps_pole)
    n = Notation("label")
    lhs_ex = tree(d.lhs(pt.exponents, pt.args, n))
    lhs_gen = tree(parent.lhs(pt.exponents, pt.args, n))
    sign = 0
    for s in (1, -1):
        if not _difference_terms(lhs_ex - lhs_gen.scaled(s)):
            sign = s
            break
    if not sign:
        return ConsistencyRecord(identity_id, parent.id, pt, 0, float("nan"), "lhs-mismatch",
                                 _difference_terms(lhs_ex - lhs_gen))
    diff = tree(d.rhs(pt.exponents, pt.args, n)) - tree(parent.rhs(pt.exponents, pt.args, n)).scaled(sign)
    ev = TreeEvaluator(ctx, pt.a)
    val, _ = diff.evaluate(pt.a, ctx, ev)
    err = float(abs(val))
    status = "pass" if err <= tol else "fail"
    surviving = _difference_terms(diff) if status == "fail" else []
    return ConsistencyRecord(identity_id, parent.id, pt, sign, err, status, surviving)


# -- reduction --------------------------------------------------------------------

RELATION_OFFSET = {"S": 1, "St": 1, "R": -1}  # theorem a = own shift + this


@dataclass
class Reduction:
    identity: str
    point: ParamPoint
    lhs: ExpressionTree
    tree: ExpressionTree

    @property
    def max_order(self) -> int:
        return self.tree.max_order()


def reduce_parity_combination(spec: SumSpec, a=None) -> Reduction:
    """Rewrite the parity combination containing ``spec`` in terms of lower-order objects.

    ``spec`` is the sum appearing with the shifted argument: for ``S`` and ``St``
    its shift is ``a - 1``, for ``R`` it is ``a + 1``, where ``a`` is the shift
    of the relation.  ``a`` may be passed explicitly to cross-check.
    """
    r = len(spec.inner_exponents)
    if r >= 3:
        raise UnsupportedRangeError(f"no explicit reduction for order r={r} (only r <= 2)")
    fam = spec.family
    kind = "linear" if r == 1 else "quadratic"
    theta = complex(spec.shift) + RELATION_OFFSET[fam]
    if a is not None and abs(complex(a) - theta) > 1e-12:
        raise SpecError(f"shift of the sum ({spec.shift}) does not match a={a}", "shift consistent")
    prod = spec.outer_arg
    for u in spec.inner_args:
        prod = prod * u
    x = prod.inverse()
    pt = ParamPoint(tuple(spec.inner_exponents) + (spec.outer_exponent,), (x,) + tuple(spec.inner_args), theta)
    ident = f"{kind}-{fam}"
    return Reduction(ident, pt, build_parity_lhs(ident, pt), build_parity_rhs(ident, pt))


# -- suite sampling ---------------------------------------------------------------


@dataclass(frozen=True)
class SamplingConfig:
    seed: int = 0
    orders: tuple = (1, 2, 3, 4, 6)
    shifts: tuple = (0.3, -0.4, 0.7, 0.25 + 0.1j, -0.35 + 0.2j)
    max_weight: int = 6
    counts: tuple = (("linear", 25), ("quadratic", 15), ("mpl2", 15), ("mpl3", 8))
    eps_pole: float = DEFAULT_CONTEXT.eps_pole

    def count_for(self, d: IdentityDef) -> int:
        return dict(self.counts)[d.kind]


@dataclass
class SampledPoints:
    identity: str
    points: list
    filtered: list  # (point dict, reason)


def _exponent_choices(d: IdentityDef, max_weight: int):
    if d.exponents is not None:
        return [d.exponents]
    return [e for e in itertools.product(range(1, max_weight + 1), repeat=d.arity) if sum(e) <= max_weight]


def suite_points(identity_id: str, config: SamplingConfig = SamplingConfig()) -> SampledPoints:
    """Deterministic admissible points; rejected candidates are kept with the reason."""
    d = get_identity(identity_id)
    rng = random.Random(zlib.crc32(identity_id.encode()) + config.seed)
    exps = _exponent_choices(d, config.max_weight)
    want = config.count_for(d)
    points, filtered, seen = [], [], set()
    attempts = 0
    while len(points) < want and attempts < 50 * want:
        e = exps[rng.randrange(len(exps))]
        N = config.orders[rng.randrange(len(config.orders))]
        args = tuple(RootOfUnity(N, rng.randrange(N)) for _ in range(d.arity))
        a = config.shifts[attempts % len(config.shifts)]
        attempts += 1
        pt = ParamPoint(e, args, a)
        if pt.key() in seen:
            continue
        seen.add(pt.key())
        try:
            check_point(d, pt, config.eps_pole)
        except SpecError as exc:
            filtered.append((pt.to_dict(), exc.condition or str(exc)))
            continue
        points.append(pt)
    return SampledPoints(identity_id, points, filtered)
