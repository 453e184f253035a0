#!/usr/bin/env python3
"""Compare the compiled and pure refinement kernels.

Two kinds of cases: raw kernel calls (equitable refinement only, where the
backends differ most) and end-to-end automorphism searches (where chain
building and certification dilute the kernel's share). The reported figure
is the best of --repeat runs. If the compiled extension is not built, only
the pure rows appear; install with `pip install -e . --no-build-isolation`
to build it.
"""

import argparse
import time

from tokenaut import automorphism_group, cycle_graph, hypercube, token_graph
from tokenaut.refinement import available_backends, make_kernel


def timed(fn, repeat):
    best = None
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - started
        if best is None or elapsed < best:
            best = elapsed
    return best


def kernel_case(g, cells):
    def run(backend):
        kernel = make_kernel(g.n, g.adj, backend)
        kernel.refine([list(c) for c in cells], list(range(len(cells))))
    return run


def search_case(g):
    return lambda backend: automorphism_group(g, backend=backend)


def build_cases():
    f2q4 = token_graph(hypercube(4), 2).graph
    f2q5 = token_graph(hypercube(5), 2).graph
    long_cycle = cycle_graph(499)
    return [
        ("refine F2(Q5), 496 vertices, unit partition",
         kernel_case(f2q5, [list(range(f2q5.n))])),
        ("refine C499, individualized vertex",
         kernel_case(long_cycle, [[0], list(range(1, long_cycle.n))])),
        ("aut search F2(Q4), 120 vertices, order 3072",
         search_case(f2q4)),
        ("aut search F2(Q5), 496 vertices, refinement-heavy",
         search_case(f2q5)),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(
        description="benchmark the refinement backends")
    parser.add_argument("--repeat", type=int, default=5,
                        help="runs per case; the minimum is reported")
    parser.add_argument("--skip-large", action="store_true",
                        help="skip the 496-vertex search case")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")
    cases = build_cases()
    if args.skip_large:
        cases = [c for c in cases if "496 vertices, refinement-heavy" not in c[0]]
    width = max(len(name) for name, _ in cases)
    for name, run in cases:
        times = {}
        for backend in backends:
            times[backend] = timed(lambda b=backend: run(b), args.repeat)
        row = f"{name:<{width}}"
        for backend in backends:
            row += f"  {backend} {times[backend] * 1000:9.2f} ms"
        if "compiled" in times and "pure" in times:
            row += f"  speedup x{times['pure'] / times['compiled']:.1f}"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
