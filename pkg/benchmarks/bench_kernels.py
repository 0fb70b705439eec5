"""Time the compiled and pure-Python kernels on the same workloads.

    python3 benchmarks/bench_kernels.py --repeat 3
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from segalfib import kernels
from segalfib.category import corpus_category, corpus_presheaves
from segalfib.grothendieck import grothendieck
from segalfib.kan import sections
from segalfib.simplicial import all_maps, product, standard_simplex


def _sections_poset():
    C = corpus_category("poset2x2")
    F = corpus_presheaves(C)[-1]
    X = grothendieck(F, 3)
    return lambda: sections(X)


def _maps_into_product():
    S = standard_simplex(3, 4)
    P = product(standard_simplex(3, 4), standard_simplex(3, 4))
    return lambda: all_maps(S, P)


def _components_random_graph():
    rng = np.random.default_rng(0)
    n = 200_000
    src = rng.integers(0, n, n // 2, dtype=np.int64)
    tgt = rng.integers(0, n, n // 2, dtype=np.int64)
    return lambda: kernels.components(n, src, tgt)


WORKLOADS = {
    "sections G(F) over poset2x2": _sections_poset,
    "maps Delta[3] -> Delta[3]xDelta[3]": _maps_into_product,
    "components of a random graph": _components_random_graph,
}


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    print(f"{'workload':40s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, build in WORKLOADS.items():
        fn = build()
        row = {}
        for b in backends:
            with kernels.use_backend(b):
                row[b] = best_of(fn, args.repeat)
        line = f"{name:40s}" + "".join(f"{row[b]:12.4f}" for b in backends)
        if "compiled" in row:
            line += f"{row['python'] / row['compiled']:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
