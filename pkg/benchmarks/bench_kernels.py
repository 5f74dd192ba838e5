"""Timing comparison of the two convolution kernels on realistic payloads.

Usage: python3 benchmarks/bench_kernels.py [N]

The payloads are Fraction vectors with growing denominators, like the
Bernoulli-flavoured tails the series layer feeds through series_mul.  Both
backends must (and do) return identical exact output; the wall-clock ratio is
the point of the exercise.
"""

import sys
import time
from fractions import Fraction

from hopfmzv import _kernels_py

try:
    from hopfmzv import _kernels
except ImportError:  # pragma: no cover - source-only install
    _kernels = None


def payload(n, seed):
    return [Fraction((-1) ** i * (seed + i), 1 + (i * i) % 97) for i in range(n)]


def bench(fn, a, b, n, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(a, b, n)
        best = min(best, time.perf_counter() - t0)
    return best, out


def compare(label, a, b, n, repeats):
    py_time, py_out = bench(_kernels_py.convolve, a, b, n, repeats)
    print(f"{label:9s} pure-python: best of {repeats}: {py_time * 1e3:8.2f} ms")
    if _kernels is None:
        print(f"{label:9s} compiled kernel not available (source-only install)")
        return
    c_time, c_out = bench(_kernels.convolve, a, b, n, repeats)
    print(f"{label:9s} compiled:    best of {repeats}: {c_time * 1e3:8.2f} ms")
    assert list(py_out) == list(c_out), "backends disagree -- exactness bug"
    print(f"{label:9s} exact agreement on {n} coefficients; speedup x{py_time / c_time:.2f}")


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 400
    repeats = 5

    # rational payload: arithmetic dominates, the kernel saves loop overhead only
    compare("fraction", payload(n, 3), payload(n, 7), n, repeats)
    # integer payload (pole terms, word counts): loop overhead is the larger share
    ints_a = [(-1) ** i * (i + 1) for i in range(n)]
    ints_b = [(i * i) % 13 - 6 for i in range(n)]
    compare("integer", ints_a, ints_b, n, repeats)


if __name__ == "__main__":
    main()
