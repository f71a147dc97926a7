"""Time the compiled and pure-Python subset kernels on the same inputs.

    python benchmarks/bench_kernels.py [--n 16] [--repeat 3]
"""

import argparse
import random
import time

from hyperzfr import kernels, polynomial
from hyperzfr.construct import h_construction
from hyperzfr.hypergraph import Hypergraph, remove_vertex


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases(n):
    rng = random.Random(1)
    edges = {tuple(sorted(rng.sample(range(n), rng.randint(2, 4)))) for _ in range(3 * n)}
    yield f"random n={n}", Hypergraph(n, sorted(edges))
    H, _ = h_construction(3, 5)
    yield "H_{3,5} minus a vertex (n=14)", remove_vertex(H, 14)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = kernels.backends()
    print(f"backends: {', '.join(sorted(impls))} (active: {kernels.BACKEND})")
    for label, G in cases(args.n):
        ptr, idx = polynomial._incidence_csr(G)
        row = {}
        ref = None
        for name, mod in sorted(impls.items()):
            t, h = best_of(lambda: mod.gray_histogram(G.n, ptr, idx, G.num_edges), args.repeat)
            row[name] = t
            if ref is None:
                ref = h
            assert (h == ref).all(), "backends disagree"
        line = "  ".join(f"{k} {v * 1e3:9.2f} ms" for k, v in row.items())
        if len(row) == 2:
            line += f"  speedup x{row['python'] / row['cython']:.0f}"
        print(f"gray_histogram  {label:32s} {line}")

        row = {}
        for name, mod in sorted(impls.items()):
            saved = kernels.independent_counts
            kernels.independent_counts = mod.independent_counts
            try:
                row[name], _ = best_of(lambda: polynomial.independence_poly_bruteforce(G), args.repeat)
            finally:
                kernels.independent_counts = saved
        line = "  ".join(f"{k} {v * 1e3:9.2f} ms" for k, v in row.items())
        if len(row) == 2:
            line += f"  speedup x{row['python'] / row['cython']:.0f}"
        print(f"independent_counts {label:29s} {line}")


if __name__ == "__main__":
    main()
