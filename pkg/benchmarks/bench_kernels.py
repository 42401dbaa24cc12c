"""Time the hot scan kernels: compiled extension vs pure Python.

Workloads mirror the two heavy acceptance sweeps (the multiplier scan and
the feasibility screen). Run from the repository root:

    python3 benchmarks/bench_kernels.py [--n-max N] [--q-max Q] [--repeat K]
"""
import argparse
import math
import time

from seljac import _kernels_py
from seljac.arith import prime_powers_upto

try:
    from seljac import _speedups
except ImportError:
    _speedups = None


def pairs(n_max: int, q_max: int):
    out = []
    for n in range(3, n_max + 1):
        for q, p, _ in prime_powers_upto(q_max):
            if math.gcd(n, q) == 1:
                out.append((n, q, p))
    return out


def run_multiplier(impl, work):
    acc = 0
    for n, q, p in work:
        fn, zs = impl.multiplier_scan(n, q, p)
        acc += len(fn) + len(zs)
    return acc


def run_feasibility(impl, work):
    acc = 0
    for n, q, p in work:
        b_count, ok = impl.feasibility_counts(n, q, p)
        acc += b_count + ok
    return acc


def best_of(fn, repeat: int) -> float:
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--q-max", type=int, default=1024)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    work = pairs(args.n_max, args.q_max)
    print(f"{len(work)} (n, q) pairs, n <= {args.n_max}, q <= {args.q_max}, "
          f"best of {args.repeat}")

    impls = [("pure-python", _kernels_py)]
    if _speedups is not None:
        impls.append(("compiled", _speedups))
    else:
        print("compiled extension not built; timing pure Python only")

    for name, runner in (("multiplier_scan", run_multiplier),
                         ("feasibility_counts", run_feasibility)):
        checks = {label: runner(impl, work) for label, impl in impls}
        if len(set(checks.values())) != 1:
            raise SystemExit(f"{name}: backends disagree: {checks}")
        times = {
            label: best_of(lambda impl=impl: runner(impl, work), args.repeat)
            for label, impl in impls
        }
        base = times["pure-python"]
        print(f"\n{name}:")
        for label, t in times.items():
            ratio = "" if label == "pure-python" else f"  ({base / t:.1f}x faster)"
            print(f"  {label:<12} {t * 1000:8.1f} ms{ratio}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
