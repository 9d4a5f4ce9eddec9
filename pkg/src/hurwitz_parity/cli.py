"""Command-line front end.

Exit codes: 0 success, 1 verification failures, 2 parse/usage error (including
an unknown suite glob), 3 divergent or out-of-domain input, 4 no explicit
formula for the requested order.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .errors import DivergenceError, DomainError, PrecisionError, SpecError, UnsupportedRangeError
from .euler_sums import MplSpec, SumSpec, eval_euler_sum, eval_mpl
from .expr import TreeEvaluator
from .harness import RunConfig, dumps_report, load_config, run_suites, sweep, write_csv
from .identities import RELATION_OFFSET, reduce_parity_combination
from .precision import PrecisionContext
from .roots import RootOfUnity
from .special import ext_trig, hurwitz_polylog, lerch_phi_deriv, polylog

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


class ParseError(Exception):
    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


# -- textual grammar ----------------------------------------------------------------


def _tokens(words):
    """Merge ``w N k`` into one token; keep each token's original position."""
    out, i = [], 0
    while i < len(words):
        if words[i] == "w" and i + 2 < len(words):
            out.append((f"w({words[i + 1]},{words[i + 2]})", i))
            i += 3
        else:
            out.append((words[i], i))
            i += 1
    return out


def _int(tok):
    text, pos = tok
    try:
        v = int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", pos) from None
    return v


def _root(tok):
    text, pos = tok
    try:
        return RootOfUnity.parse(text)
    except ValueError:
        raise ParseError(f"expected a root of unity (1, -1, i, -i, w N k), got {text!r}", pos) from None


def parse_complex(text: str) -> complex:
    """``RE[+IMi]`` with an optional ``a=`` prefix; ``i`` or ``j`` marks the imaginary unit."""
    t = text.strip()
    if t.startswith("a="):
        t = t[2:]
    t = t.replace("i", "j")
    if t in ("j", "+j", "-j"):
        t = t.replace("j", "1j")
    return complex(t)


def _shift(tok):
    text, pos = tok
    try:
        return parse_complex(text)
    except ValueError:
        raise ParseError(f"expected a shift RE[+IMi], got {text!r}", pos) from None


def _split_shift(toks, required: bool):
    """Pull an ``a=`` token out, else take a trailing bare shift when the count is odd."""
    named = [t for t in toks if t[0].startswith("a=")]
    rest = [t for t in toks if not t[0].startswith("a=")]
    if len(named) > 1:
        raise ParseError("shift given twice", named[1][1])
    if named:
        return rest, _shift(named[0])
    if len(rest) % 2 == 1:
        return rest[:-1], _shift(rest[-1])
    if required:
        raise ParseError("missing shift a=...", toks[-1][1] + 1 if toks else 0)
    return rest, 0j


def _sum_parts(toks, what: str):
    """``p_1..p_r q x_1..x_r x`` (even count)."""
    if len(toks) < 4 or len(toks) % 2:
        pos = toks[-1][1] if toks else 0
        raise ParseError(f"{what}: expected p_1..p_r q x_1..x_r x", pos)
    r = len(toks) // 2 - 1
    ints = [_int(t) for t in toks[: r + 1]]
    roots = [_root(t) for t in toks[r + 1:]]
    return tuple(ints[:r]), ints[r], tuple(roots[:r]), roots[r]


def parse_expression(words):
    """Return ``(kind, payload)`` for the ``eval`` grammar."""
    if not words:
        raise ParseError("empty expression", 0)
    head, toks = words[0], _tokens(words[1:])
    toks = [(t, p + 1) for t, p in toks]
    if head == "li":
        if len(toks) != 2:
            raise ParseError("usage: li p x", len(words))
        return "li", (_int(toks[0]), _root(toks[1]))
    if head == "hli":
        body, a = _split_shift(toks, required=True)
        if len(body) != 2:
            raise ParseError("usage: hli p x a", len(words))
        return "hli", (_int(body[0]), _root(body[1]), a)
    if head == "sum":
        if not toks or toks[0][0] not in ("S", "St", "R"):
            raise ParseError("sum family must be S, St or R", 1)
        fam = toks[0][0]
        body, a = _split_shift(toks[1:], required=False)
        ps, q, xs, x = _sum_parts(body, "sum")
        return "sum", (fam, ps, q, xs, x, a)
    if head == "mpl":
        body, a = _split_shift(toks, required=False)
        if not body or len(body) % 2:
            raise ParseError("usage: mpl k_1..k_r x_1..x_r [a]", len(words))
        r = len(body) // 2
        return "mpl", (tuple(_int(t) for t in body[:r]), tuple(_root(t) for t in body[r:]), a)
    if head == "phi":
        if len(toks) != 3:
            raise ParseError("usage: phi p s x", len(words))
        return "phi", (_int(toks[0]), _shift(toks[1]), _root(toks[2]))
    if head == "Phi":
        if len(toks) != 2:
            raise ParseError("usage: Phi s x", len(words))
        return "Phi", (_shift(toks[0]), _root(toks[1]))
    raise ParseError(f"unknown function {head!r} (li, hli, sum, mpl, phi, Phi)", 0)


def evaluate_expression(kind, payload, ctx: PrecisionContext):
    """``(value, error_estimate, terms_used)``; closed-form evaluators report the target tolerance."""
    if kind == "sum":
        fam, ps, q, xs, x, a = payload
        res = eval_euler_sum(SumSpec(fam, ps, q, xs, x, a, eps_pole=ctx.eps_pole), ctx)
        return res.value, res.error_estimate, res.terms_used
    if kind == "mpl":
        ks, xs, a = payload
        spec = MplSpec(ks, xs, a, eps_pole=ctx.eps_pole)
        if not spec.admissible:
            raise DivergenceError("the outermost pair (k_r, x_r) = (1, 1) diverges")
        res = eval_mpl(spec, ctx)
        return res.value, res.error_estimate, res.terms_used
    if kind == "li":
        v = polylog(*payload, ctx)
    elif kind == "hli":
        p, x, a = payload
        v = hurwitz_polylog(p, x, a, ctx)
    elif kind == "phi":
        p, s, x = payload
        v = lerch_phi_deriv(p, s, x, ctx)
    else:
        v = ext_trig(*payload, ctx)
    return v, ctx.target_tol, None


def format_value(v, digits: int = 20) -> str:
    from mpmath import nstr

    # values come from private mp contexts, so test by attribute rather than type
    imag = getattr(v, "imag", 0)
    if imag and abs(imag) > 10.0 ** -digits * max(1, abs(v)):
        return nstr(v, digits)
    return nstr(getattr(v, "real", v), digits)


# -- commands -----------------------------------------------------------------------


def _ctx(args, cfg: Optional[RunConfig] = None) -> PrecisionContext:
    cfg = cfg or RunConfig()
    return PrecisionContext(
        args.precision_bits if args.precision_bits is not None else cfg.precision_bits,
        args.tol if args.tol is not None else cfg.target_tol,
        args.max_terms if args.max_terms is not None else cfg.max_terms,
    )


def cmd_eval(args, out=sys.stdout) -> int:
    kind, payload = parse_expression(args.expr)
    ctx = _ctx(args)
    v, err, terms = evaluate_expression(kind, payload, ctx)
    digits = max(10, min(40, int(ctx.precision_bits * 0.30103) - 5))
    print(f"value: {format_value(v, digits)}", file=out)
    print(f"error_estimate: {err:.3g}", file=out)
    print(f"terms_used: {terms if terms is not None else 'closed form'}", file=out)
    return EXIT_OK


def parse_reduce(words):
    """``FAM p_1..p_r q x_1..x_r x a=..``; ``a`` is the shift of the relation."""
    toks = _tokens(words)
    if not toks or toks[0][0] not in RELATION_OFFSET:
        raise ParseError("family must be S, St or R", 0)
    body, a = _split_shift(toks[1:], required=False)
    ps, q, xs, x = _sum_parts(body, "reduce")
    return toks[0][0], ps, q, xs, x, a


def cmd_reduce(args, out=sys.stdout) -> int:
    if "--check" in args.spec:
        args.spec = [w for w in args.spec if w != "--check"]
        args.check = True
    fam, ps, q, xs, x, a = parse_reduce(args.spec)
    if len(ps) >= 3:
        raise UnsupportedRangeError(f"no explicit formula in source for order r={len(ps)} (r <= 2 only)")
    ctx = _ctx(args)
    spec = SumSpec(fam, ps, q, xs, x, a - RELATION_OFFSET[fam], eps_pole=ctx.eps_pole)
    red = reduce_parity_combination(spec, a)
    print(f"# relation {red.identity} at {red.point}", file=out)
    print("# combination:", file=out)
    print(red.lhs.canonical_text(), file=out)
    print(f"# reduces to (max atom order {red.max_order}):", file=out)
    print(red.tree.canonical_text(), file=out)
    if args.check:
        ev = TreeEvaluator(ctx, red.point.a)
        lv, _ = red.lhs.evaluate(red.point.a, ctx, ev)
        tv, _ = red.tree.evaluate(red.point.a, ctx, ev)
        print(f"lhs: {format_value(lv)}", file=out)
        print(f"tree: {format_value(tv)}", file=out)
        print(f"residual: {float(abs(lv - tv)):.3e}", file=out)
    return EXIT_OK


def _run_config(args) -> RunConfig:
    cfg = load_config(args.config)
    d = cfg.to_dict()
    for flag, key in (("precision_bits", "precision_bits"), ("tol", "target_tol"), ("max_terms", "max_terms"),
                      ("seed", "seed"), ("jobs", "jobs"), ("out", "out"), ("csv", "csv")):
        v = getattr(args, flag, None)
        if v is not None:
            d[key] = v
    if getattr(args, "suite", None):
        d["suites"] = args.suite
    if getattr(args, "consistency", False):
        d["consistency"] = True
    return RunConfig.from_dict(d)


def _emit_report(report, cfg: RunConfig, out) -> None:
    text = dumps_report(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if cfg.csv:
        write_csv(report, cfg.csv)
    for s in report["suites"]:
        sm = s["summary"]
        print(f"{s['suite']:<34} pass={sm['pass']:<4} fail={sm['fail']:<3} skipped={sm['skipped']}", file=out)
    conv = report.get("conventions")
    if conv:
        print(f"reflection label convention passing: {', '.join(conv['passing']) or 'none'}", file=out)
    sm = report["summary"]
    print(f"TOTAL pass={sm['pass']} fail={sm['fail']} skipped={sm['skipped']}", file=out)
    if not cfg.out:
        out.write(text)


def cmd_verify(args, out=sys.stdout) -> int:
    cfg = _run_config(args)
    report = run_suites(cfg)
    _emit_report(report, cfg, out)
    bad = report["summary"]["fail"] + report["summary"].get("consistency_fail", 0)
    return EXIT_OK if bad == 0 else EXIT_FAIL


def cmd_lemmas(args, out=sys.stdout) -> int:
    if not args.suite:
        args.suite = ["lemma-*"]
    return cmd_verify(args, out)


def cmd_sweep(args, out=sys.stdout) -> int:
    cfg = _run_config(args)
    plan = sweep(cfg)
    text = json.dumps(plan, sort_keys=True, indent=1) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    for s in plan:
        print(f"{s['suite']:<34} cases={len(s['cases']):<4} filtered={len(s['filtered'])}", file=out)
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=int, default=None)
    common.add_argument("--tol", type=float, default=None, help="target tolerance of each evaluation")
    common.add_argument("--max-terms", type=int, default=None)

    run = argparse.ArgumentParser(add_help=False)
    run.add_argument("--config", default=None, help="JSON run config (default: $HURWITZ_PARITY_CONFIG)")
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--jobs", type=int, default=None)
    run.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    run.add_argument("--csv", default=None, help="also write a CSV table of all records")
    run.add_argument("--suite", action="append", default=None, help="suite glob (repeatable, comma lists ok)")

    p = argparse.ArgumentParser(prog="hurwitz-parity", description="Hurwitz-type Euler sums and parity identities")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate one function or sum")
    e.add_argument("expr", nargs=argparse.REMAINDER)
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", parents=[common, run], help="run identity and lemma suites")
    v.add_argument("--consistency", action="store_true", help="also compare worked examples with their general form")
    v.set_defaults(func=cmd_verify)

    lm = sub.add_parser("lemmas", parents=[common, run], help="run the kernel expansion and residue suites")
    lm.set_defaults(func=cmd_lemmas)

    sw = sub.add_parser("sweep", parents=[common, run], help="list planned suite cases without evaluating")
    sw.set_defaults(func=cmd_sweep)

    r = sub.add_parser("reduce", parents=[common], help="rewrite a parity combination in lower-order terms")
    r.add_argument("--check", action="store_true", help="evaluate both sides and print the residual")
    r.add_argument("spec", nargs=argparse.REMAINDER)
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: parse error at token {exc.position}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except SpecError as exc:
        cond = getattr(exc, "condition", "")
        code = EXIT_USAGE if cond in ("known suite", "config keys", "sampling keys") else EXIT_DOMAIN
        print(f"error: {exc}", file=sys.stderr)
        return code
    except (DivergenceError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
