"""Compiled versus pure-Python kernels.

Each kernel is timed on the same inputs through both backends, then one
whole sweep is timed end to end in a subprocess with and without
``HEAPALG_PURE=1``.

    python benchmarks/bench_kernels.py [--repeat 3] [--bound 6]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from heapalg import _pykernels as py
from heapalg import build_complex, build_graph, enumerate_heaps

try:
    from heapalg import _ckernels as cy
except ImportError:
    cy = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(bound):
    square = build_graph("aff-a:3")
    heaps = list(enumerate_heaps(square, bound))
    words = [list(h.word) for h in heaps]
    conc, n = square.conc_bytes, len(square)
    rng = random.Random(0)
    seeds = [rng.getrandbits(63) for _ in words]
    cols = [(list(cx.columns), len(cx.heap)) for cx in map(build_complex, heaps) if cx.columns]

    def orders(k):
        return lambda: [k.order_masks(w, conc, n) for w in words]

    def reduction(k):
        return lambda: [k.reduce_word(w, conc, n, s) for w, s in zip(words, seeds)]

    def rank_q(k):
        return lambda: [k.rank_bits_q(c, r) for c, r in cols]

    def rank_2(k):
        return lambda: [k.rank_bits_mod(c, r, 2) for c, r in cols]

    label = f"{len(heaps)} heaps on the square, <= {bound} elements"
    return label, [
        ("order_masks", orders),
        ("reduce_word (random)", reduction),
        ("rank over Q", rank_q),
        ("rank over GF(2)", rank_2),
    ]


def end_to_end(pure, bound):
    env = dict(os.environ)
    if pure:
        env["HEAPALG_PURE"] = "1"
    cmd = [sys.executable, "-m", "heapalg", "verify", "confluence-3.2.2",
           "--graph", "aff-a:3", "--max-size", str(bound), "--strategies", "20"]
    t0 = time.perf_counter()
    subprocess.run(cmd, env=env, check=False, capture_output=True)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--bound", type=int, default=6)
    args = ap.parse_args()
    if cy is None:
        sys.exit("compiled kernels are not built; run: pip install -e . --no-build-isolation")

    label, jobs = workloads(args.bound)
    print(label)
    print(f"{'kernel':<24}{'cython s':>10}{'python s':>10}{'speedup':>9}")
    for name, make in jobs:
        tc = best_of(make(cy), args.repeat)
        tp = best_of(make(py), args.repeat)
        print(f"{name:<24}{tc:>10.4f}{tp:>10.4f}{tp / tc:>8.1f}x")
    tc, tp = end_to_end(False, args.bound), end_to_end(True, args.bound)
    print(f"{'verify confluence':<24}{tc:>10.2f}{tp:>10.2f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
