"""Compare the compiled and pure-Python kernels on the census hot loop.

    python benchmarks/bench_kernels.py --spans 12 14 16 --repeat 3
"""

import argparse
import random
import time

from freiman3k3 import _pycore

try:
    from freiman3k3 import _core
except ImportError:
    _core = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def bench_sumset(mod, pairs):
    def run():
        for a, b in pairs:
            mod.sumset_mask(a, b)
    return run


def bench_scan(mod, n):
    return lambda: mod.scan_span(n, 0, 1 << (n - 1))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--spans", type=int, nargs="+", default=[12, 14, 16])
    p.add_argument("--pairs", type=int, default=20000, help="random sumset operand pairs")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    if _core is None:
        print("compiled core not built; only the Python kernels are available")
    rng = random.Random(args.seed)
    pairs = [(rng.getrandbits(24) | 1, rng.getrandbits(24) | 1) for _ in range(args.pairs)]

    rows = [(f"sumset x{args.pairs} (24-bit)", bench_sumset(_pycore, pairs),
             _core and bench_sumset(_core, pairs))]
    for n in args.spans:
        if _core is not None:
            assert _core.scan_span(n, 0, 1 << (n - 1)) == _pycore.scan_span(n, 0, 1 << (n - 1))
        rows.append((f"scan span {n} ({1 << (n - 1)} sets)", bench_scan(_pycore, n), _core and bench_scan(_core, n)))

    print(f"{'kernel':<32}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, py, cy in rows:
        tp = best_of(py, args.repeat)
        if cy is None:
            print(f"{name:<32}{tp:>12.4f}{'-':>12}{'-':>10}")
            continue
        tc = best_of(cy, args.repeat)
        print(f"{name:<32}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
