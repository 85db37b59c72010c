"""Compare the compiled and pure-Python propagation kernels.

Runs the same canonical orbit through both kernels and reports steps/second
and the speedup.  Usage: python3 benchmarks/bench_backends.py [--steps N]
"""

import argparse
import math
import time

from polyorbit import _propagate_py

try:
    from polyorbit import _propagate_cy
except ImportError:
    _propagate_cy = None


def run(kernel, steps):
    started = time.perf_counter()
    kernel.propagate_kernel(
        1.0, 0.0, 0.5, math.sqrt(3.0) / 2.0, 1.0, 1e-4, steps, steps, 1e-9
    )
    return time.perf_counter() - started


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=2_000_000)
    args = parser.parse_args()

    py_time = run(_propagate_py, args.steps)
    print(f"python: {args.steps / py_time:,.0f} steps/s ({py_time:.3f} s)")

    if _propagate_cy is None:
        print("cython: extension not built")
        return

    cy_time = run(_propagate_cy, args.steps)
    print(f"cython: {args.steps / cy_time:,.0f} steps/s ({cy_time:.3f} s)")
    print(f"speedup: {py_time / cy_time:.1f}x")


if __name__ == "__main__":
    main()
