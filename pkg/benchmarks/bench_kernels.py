"""Compare the compiled and pure-Python quadrature kernels.

Integrates the j-fold moments used by the uncertainty reports for every
well geometry and quantum numbers 0..N-1, checks both backends agree, and
prints the wall time per backend.

    python benchmarks/bench_kernels.py --levels 6 --repeat 5
"""

import argparse
import time

from ngqm.kernels import available_backends, expsum_product_integral
from ngqm.states import WellConfig, bound_state


def workload(levels):
    jobs = []
    for j in (2, 3, 4):
        for n in range(levels):
            phi = bound_state(WellConfig(1.0, order=j), n).spatial
            for xpow in range(j + 1):
                jobs.append((phi, j - 1, phi, xpow))
            for d in range(1, j + 1):
                jobs.append((phi, j - 1, phi.derivative(d), 0))
    return jobs


def run(backend, jobs):
    return [expsum_product_integral(f, p, g, x, 0.0, 1.0, 1e-14, 1e-11, 2000,
                                    backend=backend)[0]
            for f, p, g, x in jobs]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--levels", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    jobs = workload(args.levels)
    backends = available_backends()
    results, timings = {}, {}
    for name in backends:
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            results[name] = run(name, jobs)
            best = min(best, time.perf_counter() - t0)
        timings[name] = best

    print(f"{len(jobs)} integrals, best of {args.repeat}")
    for name in backends:
        print(f"  {name:<9} {timings[name] * 1e3:9.2f} ms")
    if len(backends) > 1:
        a, b = (results[name] for name in backends)
        pairs = list(zip(a, b))
        rel = max(abs(x - y) / abs(x) for x, y in pairs if abs(x) > 1e-8)
        zeros = max((abs(x - y) for x, y in pairs if abs(x) <= 1e-8), default=0.0)
        print(f"  speedup   {timings['python'] / timings['compiled']:9.1f}x")
        print(f"  max relative disagreement {rel:.2e}")
        print(f"  max absolute disagreement on vanishing integrals {zeros:.2e}")
    else:
        print("  compiled kernel not built; only the fallback ran")


if __name__ == "__main__":
    main()
