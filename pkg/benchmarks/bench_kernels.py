"""Compare the compiled and pure-Python term kernels.

Micro: sparse products of random Laurent term maps, both kernels in-process.
End to end: exact power-fundamental checks in fresh interpreters, one per
backend (the backend is chosen at import time).

    python benchmarks/bench_kernels.py [--repeat 3] [--skip-e2e]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from typec_power import _pykernels

try:
    from typec_power import _ckernels
except ImportError:
    _ckernels = None


def random_terms(rng, arity, size, span=12):
    out = {}
    while len(out) < size:
        e = tuple(rng.randint(-span, span) for _ in range(arity))
        out[e] = rng.randint(-(10**12), 10**12) or 1
    return out


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


E2E_SNIPPET = (
    "import time; from typec_power import kernels, powerpoly as p; t = time.perf_counter(); "
    "assert all(p.verify_power_fundamental(n, N) for n, N in {cases}); "
    "print(kernels.IMPLEMENTATION, time.perf_counter() - t)"
)


def end_to_end(cases, pure):
    env = dict(os.environ)
    env.pop("TYPEC_POWER_PURE_PYTHON", None)
    if pure:
        env["TYPEC_POWER_PURE_PYTHON"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", E2E_SNIPPET.format(cases=cases)], env=env, capture_output=True, text=True, check=True
    ).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-e2e", action="store_true")
    args = ap.parse_args()

    rng = random.Random(0)
    print(f"{'workload':<34}{'python':>10}{'cython':>10}{'speedup':>9}")
    for arity, size in [(2, 200), (4, 400), (6, 800)]:
        a, b = random_terms(rng, arity, size), random_terms(rng, arity, size)
        py = best_of(lambda: _pykernels.mul_terms(a, b), args.repeat)
        if _ckernels is None:
            print(f"{f'mul {size}x{size} terms, {arity} vars':<34}{py:>10.4f}{'n/a':>10}")
            continue
        assert _ckernels.mul_terms(a, b) == _pykernels.mul_terms(a, b)
        cy = best_of(lambda: _ckernels.mul_terms(a, b), args.repeat)
        print(f"{f'mul {size}x{size} terms, {arity} vars':<34}{py:>10.4f}{cy:>10.4f}{py / cy:>8.1f}x")

    if args.skip_e2e:
        return
    for label, cases in [("verify Q, n<=3, N<=5", [(n, N) for n in (1, 2, 3) for N in range(1, 6)]),
                         ("verify Q, n=4, N=6", [(4, 6)])]:
        _, py = end_to_end(cases, pure=True)
        impl, cy = end_to_end(cases, pure=False)
        if impl != "cython":
            print(f"{label:<34}{py:>10.3f}{'n/a':>10}")
        else:
            print(f"{label:<34}{py:>10.3f}{cy:>10.3f}{py / cy:>8.1f}x")


if __name__ == "__main__":
    main()
