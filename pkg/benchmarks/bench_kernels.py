"""Compare the compiled and pure-Python brute-force kernels.

    python3 benchmarks/bench_kernels.py [--terms 100000] [--repeat 3]

Both backends run the same partial sums; the script prints the best-of-N time
of each, the speedup, and the largest difference between their results.
"""

import argparse
import time

from hurwitz_parity import _pykernels
from hurwitz_parity.euler_sums import _period_table
from hurwitz_parity.roots import RootOfUnity

try:
    from hurwitz_parity import _ckernels
except ImportError:  # extension not built
    _ckernels = None

CASES = [
    ("euler r=1 (1;2) x=1", "euler", dict(outer=RootOfUnity(1), q=2, b=0.3, inner=[RootOfUnity(1)], ps=[1], c=0.3)),
    ("euler r=2 (1,2;2) x=-1", "euler",
     dict(outer=RootOfUnity(2, 1), q=2, b=0.25 + 0.1j, inner=[RootOfUnity(4, 1), RootOfUnity(3, 1)], ps=[1, 2],
          c=0.25 + 0.1j)),
    ("mpl depth 2 (2,2)", "mpl", dict(args=[RootOfUnity(4, 1), RootOfUnity(2, 1)], ks=[2, 2], a=0.3)),
    ("mpl depth 3 (2,1,2)", "mpl", dict(args=[RootOfUnity(4, 1), RootOfUnity(4, 3), RootOfUnity(2, 1)],
                                        ks=[2, 1, 2], a=-0.4)),
]


def _call(mod, kind, kw, n):
    if kind == "euler":
        return mod.euler_partial(n, 12, _period_table(kw["outer"]), kw["q"], kw["b"],
                                 [_period_table(x) for x in kw["inner"]], kw["ps"], kw["c"])
    return mod.mpl_partial(n, 12, [_period_table(x) for x in kw["args"]], kw["ks"], kw["a"])


def _best(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"terms={args.terms} repeat={args.repeat} compiled={'yes' if _ckernels else 'no'}")
    print(f"{'case':<28}{'python s':>10}{'cython s':>10}{'speedup':>9}{'max |diff|':>12}")
    for name, kind, kw in CASES:
        tp, rp = _best(lambda: _call(_pykernels, kind, kw, args.terms), args.repeat)
        if _ckernels is None:
            print(f"{name:<28}{tp:>10.3f}{'-':>10}{'-':>9}{'-':>12}")
            continue
        tc, rc = _best(lambda: _call(_ckernels, kind, kw, args.terms), args.repeat)
        diff = max(abs(complex(u) - complex(v)) for u, v in zip(rp, rc))
        print(f"{name:<28}{tp:>10.3f}{tc:>10.4f}{tp / tc:>9.1f}{diff:>12.2e}")


if __name__ == "__main__":
    main()
