"""Compare the compiled and numpy kernels, then time a full search on each.

    python benchmarks/bench_kernels.py [--sizes 12 16 20] [--repeat 5]
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from groverkit.kernels import BACKENDS

KERNELS = [
    ("hadamard q=0", lambda k, a, n: k.hadamard(a, 0)),
    ("hadamard q=n-1", lambda k, a, n: k.hadamard(a, n - 1)),
    ("pauli_x q=n//2", lambda k, a, n: k.pauli_x(a, n // 2)),
    ("phase_flip full", lambda k, a, n: k.phase_flip_masked(a, (1 << n) - 1, 5)),
    ("phase_flip subset", lambda k, a, n: k.phase_flip_masked(a, (1 << n) - 2, 6)),
    ("add_const", lambda k, a, n: k.add_const(a, 12345 % (1 << n), 0, n)),
    ("reflect_about_mean", lambda k, a, n: k.reflect_about_mean(a)),
]


def bench_kernels(sizes, repeat):
    names = sorted(BACKENDS)
    print(f"{'kernel':<20} {'n':>3} " + " ".join(f"{b + ' ms':>12}" for b in names) + f" {'speedup':>8}")
    for n in sizes:
        rng = np.random.default_rng(0)
        base = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
        base /= np.linalg.norm(base)
        for label, fn in KERNELS:
            times = {}
            for name in names:
                amps = base.copy()
                t = min(timeit.repeat(lambda: fn(BACKENDS[name], amps, n), number=1, repeat=repeat))
                times[name] = t * 1e3
            ratio = times["python"] / times["cython"] if "cython" in times else float("nan")
            print(f"{label:<20} {n:>3} " + " ".join(f"{times[b]:12.3f}" for b in names) + f" {ratio:8.2f}x")


def bench_search(bits):
    code = (
        "import time, groverkit as g\n"
        f"o = g.build_equation_oracle(g.EquationProblem({bits}, 12345 % (1 << {bits}), 7))\n"
        "t = time.perf_counter()\n"
        f"r = g.run_grover({bits}, o, record='ends')\n"
        "print(g.BACKEND, r.iterations, r.argmax_label, f'{time.perf_counter() - t:.3f}')\n"
    )
    print(f"\nfull search, {bits} qubits (record='ends')")
    for pure in ("0", "1"):
        env = dict(os.environ, GROVERKIT_PURE=pure)
        out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True)
        backend, iters, label, secs = out.stdout.split()
        print(f"  {backend:<7} {iters} iterations -> X = {label}  {secs} s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[12, 16, 20])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--search-bits", type=int, default=16)
    args = parser.parse_args()
    if "cython" not in BACKENDS:
        print("compiled kernels not built; only the numpy fallback will be timed")
    bench_kernels(args.sizes, args.repeat)
    bench_search(args.search_bits)


if __name__ == "__main__":
    main()
