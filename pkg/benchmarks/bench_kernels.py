"""Compare the compiled kernels with the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--n 200000] [--length 40]

Prints per-call timings for each kernel and an end-to-end timing of the
wall/path comparison run in a subprocess under each backend.
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from a22crystal import _kernels_py

try:
    from a22crystal import _kernels
except ImportError:
    _kernels = None


def make_strings(rng, count, length):
    out = []
    for _ in range(count):
        eps = [rng.randint(0, 6) for _ in range(length)]
        phi = [rng.randint(0, 6) for _ in range(length)]
        out.append((eps, phi))
    return out


def bench_kernel(mod, name, strings, number):
    fn = getattr(mod, name)
    if name == "energy_h":
        args = [(e[0], e[1], p[0], p[1]) for e, p in strings]
    else:
        args = strings

    def run():
        for a in args:
            fn(*a)

    t = timeit.timeit(run, number=number)
    return t / (number * len(args))


END_TO_END = (
    "from a22crystal.verify import suite_iso_lambda, suite_iso_infinity;"
    "from a22crystal.adjoint import LambdaSpec;"
    "assert all(r.ok for r in suite_iso_lambda(LambdaSpec(4, 1), 7));"
    "assert all(r.ok for r in suite_iso_infinity(7))"
)


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["A22_PURE_PYTHON"] = "1"
    else:
        env.pop("A22_PURE_PYTHON", None)
    start = time.perf_counter()
    subprocess.run([sys.executable, "-c", END_TO_END], check=True, env=env)
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2000, help="strings per kernel")
    ap.add_argument("--length", type=int, default=40, help="factors per string")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if _kernels is None:
        print("compiled kernels not built; only the Python backend is available")
    strings = make_strings(random.Random(args.seed), args.n, args.length)
    print(f"{'kernel':<14}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for name in ("energy_h", "fold_stats", "f_position", "e_position", "cancel_counts"):
        tp = bench_kernel(_kernels_py, name, strings, args.repeat) * 1e6
        if _kernels is None:
            print(f"{name:<14}{tp:>14.3f}{'-':>14}{'-':>10}")
            continue
        tc = bench_kernel(_kernels, name, strings, args.repeat) * 1e6
        print(f"{name:<14}{tp:>14.3f}{tc:>14.3f}{tp / tc:>9.1f}x")

    print()
    tp = end_to_end(pure=True)
    print(f"walls vs paths, python backend: {tp:.2f} s")
    if _kernels is not None:
        tc = end_to_end(pure=False)
        print(f"walls vs paths, cython backend: {tc:.2f} s")


if __name__ == "__main__":
    main()
