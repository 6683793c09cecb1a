"""Benchmark the compiled kernel backend against the pure-Python fallback.

Run with:  python3 benchmarks/bench_kernels.py

Both backends are imported directly (ignoring the COCLASS_PURE switch) so
their results can be cross-checked and timed side by side.
"""

import statistics
import time

from coclass._kernels import pure

try:
    from coclass._kernels import _fast as fast
except ImportError:
    fast = None


def timeit(fn, *args, repeat=5):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), result


CENTRALIZER_CASES = [
    ("Sym(7) / (0 1)(2 3)", 7, [(1, 0, 3, 2, 4, 5, 6)]),
    ("Sym(8) / 8-cycle", 8, [(1, 2, 3, 4, 5, 6, 7, 0)]),
    ("Sym(8) / V4 action", 8, [(1, 0, 3, 2, 5, 4, 7, 6),
                               (2, 3, 0, 1, 6, 7, 4, 5)]),
]

CONIC_CASES = [
    ("(2, 5) mod 5^3", 2, 5, 5, 3),
    ("(-1, -1) mod 2^5", -1, -1, 2, 5),
    ("(3, 13) mod 13^3", 3, 13, 13, 3),
    ("(7, 11) mod 37^2", 7, 11, 37, 2),
]


def bench(label, pure_fn, fast_fn, argsets):
    print(f"\n{label}")
    print(f"  {'case':28s} {'pure':>10s} {'fast':>10s} {'speedup':>8s}")
    for name, *args in argsets:
        p_min, _, p_res = timeit(pure_fn, *args)
        row = f"  {name:28s} {p_min * 1e3:9.2f}ms"
        if fast_fn is not None:
            f_min, _, f_res = timeit(fast_fn, *args)
            normalize = lambda r: sorted(map(tuple, r)) if isinstance(
                r, list) else r
            assert normalize(p_res) == normalize(f_res), (
                f"backend disagreement on {name}: {p_res!r} != {f_res!r}")
            row += f" {f_min * 1e3:9.2f}ms {p_min / f_min:7.1f}x"
        else:
            row += "     (compiled backend unavailable)"
        print(row)


def main():
    print(f"pure backend: {pure.BACKEND}")
    print(f"fast backend: {fast.BACKEND if fast else 'not built'}")
    bench("perm_centralizer(n, gens)",
          pure.perm_centralizer,
          fast.perm_centralizer if fast else None,
          CENTRALIZER_CASES)
    bench("conic_search(a, b, p, k)",
          pure.conic_search,
          fast.conic_search if fast else None,
          CONIC_CASES)


if __name__ == "__main__":
    main()
