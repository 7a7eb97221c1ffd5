"""Compare the compiled enumeration kernel with the pure-Python fallback.

    python3 benchmarks/bench_kernel.py --max-n 7
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from asmlab import kernel


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"active backend: {kernel.BACKEND}")
    print(f"{'task':<10}{'n':>3}{'compiled s':>14}{'python s':>12}{'speedup':>10}")
    for n in range(3, args.max_n + 1):
        fast = kernel.stats_histogram(n)
        slow = kernel.python_stats_histogram(n)
        assert np.array_equal(fast, slow), f"backends disagree at n={n}"
        t_fast = best_of(lambda: kernel.stats_histogram(n), args.repeat)
        t_slow = best_of(lambda: kernel.python_stats_histogram(n), 1)
        print(f"{'stats':<10}{n:>3}{t_fast:>14.4f}{t_slow:>12.4f}{t_slow / max(t_fast, 1e-9):>10.1f}")
    for m in range(1, (args.max_n - 1) // 2 + 1):
        assert np.array_equal(kernel.hsasm_histogram(m), kernel.python_hsasm_histogram(m))
        t_fast = best_of(lambda: kernel.hsasm_histogram(m), args.repeat)
        t_slow = best_of(lambda: kernel.python_hsasm_histogram(m), 1)
        print(f"{'hsasm':<10}{2 * m + 1:>3}{t_fast:>14.4f}{t_slow:>12.4f}{t_slow / max(t_fast, 1e-9):>10.1f}")


if __name__ == "__main__":
    main()
