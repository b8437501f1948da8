"""Timing comparison between the compiled and pure-Python kernel backends.

Runs the series solver and the convolution primitive with both
implementations in the same process and prints best-of-N wall times.
The compiled extension is optional; when it is not built the script
still times the fallback so the numbers stay comparable across machines.

Usage:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --order 800 --repeat 5
"""

from __future__ import annotations

import argparse
import time

from kgonal import _kernels_py

try:
    from kgonal import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def fmt(seconds: float) -> str:
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f} us"
    if seconds < 1.0:
        return f"{seconds * 1e3:8.2f} ms"
    return f"{seconds:8.3f} s "


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=500, help="series order for solve_b")
    ap.add_argument("--repeat", type=int, default=3, help="repetitions, best time wins")
    args = ap.parse_args()

    order = args.order
    repeat = args.repeat

    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.insert(0, ("compiled", _kernels))
    else:
        print("note: compiled extension not importable, timing the fallback only")

    print(f"{'kernel':<34}" + "".join(f"{name:>14}" for name, _ in backends) + f"{'speedup':>10}")

    for p in (2, 11):
        label = f"solve_b p={p} order={order}"
        times = []
        results = []
        for _, mod in backends:
            times.append(best_of(lambda m=mod: results.append(m.solve_b(p, order)), repeat))
        first = results[0]
        if any(r != first for r in results[1:]):
            raise SystemExit(f"backend disagreement in {label}")
        row = f"{label:<34}" + "".join(f"{fmt(t):>14}" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:>9.1f}x"
        print(row)

    # Convolution on coefficients of realistic size: the solver's own
    # output makes a fair operand since late coefficients run to
    # hundreds of digits.
    operand = _kernels_py.solve_b(2, order)
    label = f"convolve len={order + 1}"
    times = []
    results = []
    for _, mod in backends:
        times.append(best_of(lambda m=mod: results.append(m.convolve(operand, operand, order)), repeat))
    first = results[0]
    if any(r != first for r in results[1:]):
        raise SystemExit(f"backend disagreement in {label}")
    row = f"{label:<34}" + "".join(f"{fmt(t):>14}" for t in times)
    if len(times) == 2:
        row += f"{times[1] / times[0]:>9.1f}x"
    print(row)

    return 0


if __name__ == "__main__":
    raise SystemExit(main())
