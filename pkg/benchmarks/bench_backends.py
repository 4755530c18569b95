"""Backend benchmark: compiled extension vs pure NumPy fallback.

Two layers are timed.  The kernel microbenchmarks call both backend
modules in-process on identical arrays, so they isolate the raw cost
of the scaled Bessel K evaluation and the fused beta integrand.  The
end-to-end rows launch subprocesses (the backend is chosen at import
time, so switching requires a fresh interpreter) and time a nested
Mellin verification, the heaviest realistic workload.

Usage:
    python3 benchmarks/bench_backends.py [--repeat N] [--size M]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from exwhit._core import pure

try:
    from exwhit._core import _fast
except ImportError:
    _fast = None


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(repeat: int, size: int) -> None:
    # two regimes: `size` measures raw throughput, the small batch is
    # what one adaptive quadrature level actually hands the backend,
    # where call overhead rather than arithmetic dominates
    for nodes, loops in ((size, 1), (200, 500)):
        rng = np.random.default_rng(0)
        x = np.concatenate([rng.uniform(1e-4, 2.0, nodes // 2),
                            rng.uniform(2.0, 80.0, nodes - nodes // 2)])
        t = rng.uniform(1e-8, 1.0 - 1e-8, nodes)
        tc = 1.0 - t

        rows = []
        for label, mod in (("pure", pure),) + (
                (("compiled", _fast),) if _fast is not None else ()):
            def kv_once(m=mod):
                for _ in range(loops):
                    m.kv_scaled_array(1.5, x)

            def fused_once(m=mod):
                for _ in range(loops):
                    m.beta_kernel_values(
                        t, tc, 0.4, 1.3, 0.8, 1.7, 0.6,
                        pure.KERNEL_BESSEL, 0.9, 0.0, 1.5)

            rows.append((label, _best_of(kv_once, repeat),
                         _best_of(fused_once, repeat)))

        print(f"kernel microbenchmarks ({nodes} nodes x {loops} calls, "
              f"best of {repeat}):")
        print(f"  {'backend':10s} {'kv_scaled':>12s} {'fused integrand':>16s}")
        for label, kv, fused in rows:
            print(f"  {label:10s} {kv * 1e3:9.3f} ms {fused * 1e3:13.3f} ms")
        if len(rows) == 2:
            print(f"  speedup    {rows[0][1] / rows[1][1]:9.1f} x "
                  f"{rows[0][2] / rows[1][2]:12.1f} x")
        print()


def bench_end_to_end(repeat: int) -> None:
    code = (
        "from exwhit.harness import run_suite\n"
        "rep = run_suite('mellin-theorem', n_samples=3, seed=1)\n"
        "assert rep.passed\n"
    )

    def run(extra_env):
        env = dict(os.environ, **extra_env)
        subprocess.run([sys.executable, "-c", code], check=True, env=env)

    rows = [("pure", _best_of(lambda: run({"EXWHIT_PURE": "1"}), repeat))]
    if _fast is not None:
        rows.append(("compiled", _best_of(lambda: run({}), repeat)))

    print(f"end-to-end nested Mellin check (3 queries, best of {repeat}, "
          f"includes interpreter start-up):")
    for label, dt in rows:
        print(f"  {label:10s} {dt:8.2f} s")
    if len(rows) == 2:
        print(f"  speedup    {rows[0][1] / rows[1][1]:8.1f} x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best is kept (default 3)")
    parser.add_argument("--size", type=int, default=200000,
                        help="array length for kernel benchmarks")
    args = parser.parse_args()

    if _fast is None:
        print("compiled extension not available; timing pure backend only\n")
    bench_kernels(args.repeat, args.size)
    bench_end_to_end(args.repeat)


if __name__ == "__main__":
    main()
