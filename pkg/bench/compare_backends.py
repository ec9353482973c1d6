"""Time the jitted kernels against the plain-Python module on matched inputs.

Run from the repository root:

    python bench/compare_backends.py [--repeat 3]

The first jitted call pays compilation cost; it is timed separately so the
steady-state numbers compare like with like.
"""

import argparse
import time

import numpy as np

from periwords import kernels
from periwords.words import fibonacci_source, thue_morse_source


def _encode(w: str) -> np.ndarray:
    return np.frombuffer(w.encode("ascii"), np.uint8)


def _tasks():
    fib = _encode(fibonacci_source().prefix(3000))
    tm = _encode(thue_morse_source().prefix(3000))
    needle = _encode("aab")
    return [
        ("profile fib n=600", lambda k: k.local_periods_stream(fib, 600, 2400)),
        ("profile tm  n=600", lambda k: k.local_periods_stream(tm, 600, 2400)),
        ("oracle sweep len<=9", lambda k: k.oracle_sweep(9, 2)),
        ("cft sweep len<=11", lambda k: k.cft_sweep(11, 2)),
        ("occurrences fib", lambda k: k.occurrence_list(needle, fib)),
        ("max run exponent tm", lambda k: k.max_run_exponent(tm, 64)),
    ]


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    py = kernels.python_kernels()
    if not kernels.HAVE_NUMBA:
        print("numba is not importable; nothing to compare")
        return
    t0 = time.perf_counter()
    nb = kernels.numba_kernels()
    tasks = _tasks()
    for _, call in tasks:  # compile every kernel the timed loop touches
        call(nb)
    print(f"jit warmup: {time.perf_counter() - t0:.2f}s\n")

    print(f"{'task':<24} {'python':>10} {'jitted':>10} {'speedup':>9}")
    for name, call in tasks:
        tp = _time(lambda: call(py), args.repeat)
        tn = _time(lambda: call(nb), args.repeat)
        print(f"{name:<24} {tp * 1e3:>8.1f}ms {tn * 1e3:>8.1f}ms {tp / tn:>8.1f}x")


if __name__ == "__main__":
    main()
