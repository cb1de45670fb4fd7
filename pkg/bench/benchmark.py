"""Benchmark the compiled kernels against the pure-Python fallback.

Run: python bench/benchmark.py [--quick]
"""

import argparse
import random
import time

from qgc import _pure

try:
    from qgc import _core
except ImportError:
    _core = None


def random_adj(rng, n, p=0.45):
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def timed(fn, reps=1):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps


def bench_canon(backend, graphs):
    return timed(lambda: [backend.canon_graph(len(a), a) for a in graphs]) / len(graphs)


def bench_distance(backend, rows_sets):
    return timed(
        lambda: [backend.graph_code_distance(len(r), r) for r in rows_sets]
    ) / len(rows_sets)


def bench_mis(backend, graphs):
    return timed(
        lambda: [backend.max_independent_set(len(a), a) for a in graphs]
    ) / len(graphs)


def bench_orbit_workload(backend):
    """End-to-end flavour: the full n=6 classification using the backend."""
    import qgc.kernels as kernels

    saved = (
        kernels.canon_graph,
        kernels.graph_code_distance,
        kernels.graph_code_weight_hist,
        kernels.max_independent_set,
    )
    kernels.canon_graph = backend.canon_graph
    kernels.graph_code_distance = backend.graph_code_distance
    kernels.graph_code_weight_hist = backend.graph_code_weight_hist
    kernels.max_independent_set = backend.max_independent_set
    try:
        from qgc import orbits

        orbits._classify_cache.clear()
        return timed(lambda: orbits.classify(6))
    finally:
        (
            kernels.canon_graph,
            kernels.graph_code_distance,
            kernels.graph_code_weight_hist,
            kernels.max_independent_set,
        ) = saved
        from qgc import orbits

        orbits._classify_cache.clear()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()

    rng = random.Random(1)
    count = 80 if args.quick else 400
    graphs9 = [random_adj(rng, 9) for _ in range(count)]
    graphs12 = [random_adj(rng, 12) for _ in range(count // 2)]
    rows16 = [random_adj(rng, 16) for _ in range(10 if args.quick else 40)]
    rows20 = [random_adj(rng, 20) for _ in range(4 if args.quick else 10)]

    backends = [("pure", _pure)]
    if _core is not None:
        backends.append(("compiled", _core))
    else:
        print("compiled core not built; showing pure only")

    rows = []
    for label, tag, work in [
        ("canonical labeling, n=9", "us", lambda b: bench_canon(b, graphs9) * 1e6),
        ("canonical labeling, n=12", "us", lambda b: bench_canon(b, graphs12) * 1e6),
        ("code distance, n=16", "ms", lambda b: bench_distance(b, rows16) * 1e3),
        ("code distance, n=20", "ms", lambda b: bench_distance(b, rows20) * 1e3),
        ("max independent set, n=12", "us", lambda b: bench_mis(b, graphs12) * 1e6),
        ("classify n=6 end-to-end", "ms", lambda b: bench_orbit_workload(b) * 1e3),
    ]:
        vals = {name: work(backend) for name, backend in backends}
        rows.append((label, tag, vals))

    width = max(len(r[0]) for r in rows) + 2
    header = f"{'benchmark':<{width}}" + "".join(f"{name:>14}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, tag, vals in rows:
        line = f"{label:<{width}}"
        for name, _ in backends:
            line += f"{vals[name]:>11.1f} {tag}"
        if len(backends) == 2:
            line += f"{vals['pure'] / vals['compiled']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
