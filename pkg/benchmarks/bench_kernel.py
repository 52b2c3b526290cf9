#!/usr/bin/env python3
"""Compare the compiled and pure sequence kernels.

Run from the repository root after an editable install:

    python benchmarks/bench_kernel.py [--repeat N]

Covers the per-vertex paths (normalize of a raw degree list) and the
run-granular paths (graphicality, decomposition) on three input families:
generated unigraphs with few components, threshold-like sequences with one
strip per vertex class, and a raw million-degree list.
"""

import argparse
import random
import time

from unigraph._kernel import _pykernel

try:
    from unigraph._kernel import _ckernel
except ImportError:
    _ckernel = None

from unigraph.degseq import DegreeSequence
from unigraph.gen import GenSpec, compose_types, generate


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _unigraph_runs(n, k, seed=1):
    comps = generate(GenSpec(n=n, k=k, seed=seed))
    seq = compose_types(comps)
    return seq.values_mults()


def _threshold_runs(n, seed=2):
    # alternate dominant/isolated insertions: n strips, ~n/2 runs
    rng = random.Random(seed)
    seq = DegreeSequence(())
    heads = []
    from unigraph.decomp import K1, S1, compose_all

    for _ in range(n - 1):
        heads.append(K1 if rng.random() < 0.5 else S1)
    seq = compose_all(heads, DegreeSequence(((0, 1),)))
    return seq.values_mults()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    impls = [("python", _pykernel)]
    if _ckernel is not None:
        impls.append(("c", _ckernel))
    else:
        print("compiled kernel not built; showing pure timings only")

    rng = random.Random(0)
    raw = [rng.randint(0, 999_999) for _ in range(1_000_000)]
    uni5 = _unigraph_runs(100_000, 40)
    uni6 = _unigraph_runs(1_000_000, 40)
    thr = _threshold_runs(20_000)

    cases = [
        ("normalize 1e6 raw degrees", lambda k: k.normalize_runs(raw)),
        ("eg_graphical unigraph n=1e6", lambda k: k.eg_graphical(*uni6)),
        ("decompose unigraph n=1e5 (k=40)", lambda k: k.decompose_runs(*uni5)),
        ("decompose unigraph n=1e6 (k=40)", lambda k: k.decompose_runs(*uni6)),
        ("decompose threshold n=2e4", lambda k: k.decompose_runs(*thr)),
    ]
    width = max(len(name) for name, _ in cases)
    header = f"{'case':<{width}}  " + "  ".join(f"{n:>10}" for n, _ in impls)
    print(header)
    print("-" * len(header))
    for name, fn in cases:
        times = [_time(lambda k=kern: fn(k), args.repeat) for _, kern in impls]
        row = f"{name:<{width}}  " + "  ".join(f"{t * 1e3:9.2f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"  ({times[0] / times[1]:4.1f}x)"
        print(row)


if __name__ == "__main__":
    main()
