#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python reference.

Runs each hot kernel on identical inputs through both implementations and
prints the per-call timings plus speedup.  Usage:

    python3 benchmarks/bench_kernels.py [repeats]
"""

import random
import sys
import time

from wordrep import _kernels_py
from wordrep.core import Graph
from wordrep.search import _refined_classes

try:
    from wordrep import _ext
except ImportError:
    _ext = None


def _random_graph(rng, n, p=0.4):
    labels = tuple(str(i) for i in range(n))
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(labels, edges)


def _random_dag_succ(rng, n, p=0.4):
    succ = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                succ[i] |= 1 << j
    return succ


def _time(fn, inputs, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for args in inputs:
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best / len(inputs)


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    rng = random.Random(0)

    cases = []

    words = [([rng.randrange(12) for _ in range(60)], 12) for _ in range(200)]
    cases.append(("word_pair_counts (12 letters x60)", "word_pair_counts", words))

    dags = [(14, _random_dag_succ(rng, 14)) for _ in range(200)]
    cases.append(("descendants (n=14)", "descendants", dags))
    cases.append(("is_dag (n=14)", "is_dag", dags))

    shortcut_inputs = []
    for _ in range(200):
        G = _random_graph(rng, 12)
        succ = _random_dag_succ(rng, 12, p=0.25)
        succ = [s & G.adj[i] for i, s in enumerate(succ)]
        shortcut_inputs.append((12, succ, list(G.adj)))
    cases.append(("forced_shortcut_pair (n=12)", "forced_shortcut_pair", shortcut_inputs))

    canon_inputs = []
    for _ in range(50):
        G = _random_graph(rng, 8)
        canon_inputs.append((8, list(G.adj), _refined_classes(G)))
    cases.append(("canonical_min_bits (n=8)", "canonical_min_bits", canon_inputs))

    print(f"{'kernel':<36} {'pure (us)':>10} {'ext (us)':>10} {'speedup':>8}")
    for label, name, inputs in cases:
        t_py = _time(getattr(_kernels_py, name), inputs, repeats)
        if _ext is None:
            print(f"{label:<36} {t_py * 1e6:>10.2f} {'n/a':>10} {'n/a':>8}")
            continue
        t_c = _time(getattr(_ext, name), inputs, repeats)
        print(f"{label:<36} {t_py * 1e6:>10.2f} {t_c * 1e6:>10.2f} {t_py / t_c:>7.1f}x")
    if _ext is None:
        print("\ncompiled extension not built; only the pure-Python timings above")


if __name__ == "__main__":
    main()
