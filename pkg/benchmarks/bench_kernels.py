"""Compare the numba and numpy enumeration kernels.

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --q 4 --family complete --n 5 --repeat 3

Each backend scans the same projective message set; the script checks that
histograms and minima agree before printing timings.
"""

import argparse
import time

import numpy as np

from edgecode import _kernels
from edgecode.field import build_field
from edgecode.hypergraph import family
from edgecode.metrics import scan
from edgecode.torus import generator_matrix

CASES = [
    (3, "complete", 5),
    (4, "cycle", 5),
    (4, "complete", 5),
    (5, "path", 6),
]


def bench(code, backend, repeat, workers):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = scan(code, backend=backend, workers=workers, max_messages=10**10)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int)
    ap.add_argument("--family", default="complete")
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    cases = [(args.q, args.family, args.n)] if args.q else CASES
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if _kernels.HAVE_NUMBA:
        warm = generator_matrix(family("path", n=3), build_field(3))
        scan(warm, backend="numba")  # compile or load the cache outside the timings

    print(f"{'case':<22}{'messages':>12}" + "".join(f"{b + ' s':>12}" for b in backends) + f"{'speedup':>10}")
    for q, name, n in cases:
        code = generator_matrix(family(name, n=n), build_field(q))
        times, results = {}, {}
        for b in backends:
            times[b], results[b] = bench(code, b, args.repeat, args.workers)
        ref = results["numpy"]
        for b in backends:
            w, m, hist, _ = results[b]
            assert (w, m) == ref[:2] and np.array_equal(hist, ref[2]), f"{b} disagrees on {name}"
        label = f"{name}({n}) q={q}"
        row = f"{label:<22}{ref[3]:>12}" + "".join(f"{times[b]:>12.3f}" for b in backends)
        speed = times["numpy"] / times["numba"] if "numba" in times else float("nan")
        print(row + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
