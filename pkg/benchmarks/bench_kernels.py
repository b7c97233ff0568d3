"""Timing comparison of the pure-Python and compiled merge kernels.

Run: python3 benchmarks/bench_kernels.py
"""

import random
import time

from pointideal import _merge_py

try:
    from pointideal import _merge_c
except ImportError:
    _merge_c = None


def make_instance(rng, n, length):
    def one():
        return sorted(
            tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(length)
        )

    la, lb = one(), one()

    def deltas(items):
        out = []
        for u, v in zip(items, items[1:]):
            d, _s, _c = _merge_py.compare_from(u, v, 1, n)
            out.append(d)
        return out

    return la, deltas(la), lb, deltas(lb)


def time_kernel(kernel, instances, n, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for la, da, lb, db in instances:
            kernel.merge(la, da, lb, db, n)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = random.Random(0)
    print(f"{'n':>4} {'len':>6} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8}")
    for n, length in [(4, 50), (8, 200), (12, 1000), (20, 4000)]:
        instances = [make_instance(rng, n, length) for _ in range(20)]
        t_py = time_kernel(_merge_py, instances, n)
        if _merge_c is None:
            print(f"{n:>4} {length:>6} {t_py:>12.4f} {'(not built)':>12}")
            continue
        t_c = time_kernel(_merge_c, instances, n)
        for la, da, lb, db in instances[:3]:
            assert _merge_c.merge(la, da, lb, db, n) == _merge_py.merge(
                la, da, lb, db, n
            )
        print(f"{n:>4} {length:>6} {t_py:>12.4f} {t_c:>12.4f} {t_py / t_c:>8.2f}")


if __name__ == "__main__":
    main()
