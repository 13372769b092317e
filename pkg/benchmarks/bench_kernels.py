"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--works N] [--repeat R]
"""
import argparse
import time

import numpy as np

from biblionet import Mode, NodeSet, SparseNetwork, _pykernels
from biblionet._backend import compiled_kernels
from biblionet.algebra import binarize, transpose
from biblionet.cores import undirected


def synthetic_wa(rng, n_works, n_authors):
    k = 1 + rng.poisson(2, n_works)
    rows = np.repeat(np.arange(n_works), k)
    key = np.unique(rows * n_authors + rng.integers(0, n_authors, rows.size))
    return SparseNetwork.from_coo(NodeSet.numbered(n_works, Mode.WORKS), NodeSet.numbered(n_authors, Mode.AUTHORS),
                                  key // n_authors, key % n_authors)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--works", type=int, default=20_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(1)
    wa = synthetic_wa(rng, args.works, args.works // 2)
    aw = transpose(wa)
    a = (aw.indptr, aw.indices, aw.data, wa.indptr, wa.indices, wa.data, aw.row_set.size, wa.col_set.size)
    fastest = compiled_kernels or _pykernels
    co = SparseNetwork(aw.row_set, wa.col_set, *fastest.spgemm(*a))
    g = undirected(co)
    b = binarize(g)
    t = float(np.median(np.bincount(g.row_ids, weights=g.data, minlength=g.row_set.size)))

    cases = {
        f"spgemm AW*WA ({wa.n_arcs} arcs -> {co.n_arcs})": lambda k: k.spgemm(*a),
        f"peel t={t:g} ({g.n_arcs} arcs)": lambda k: k.peel(g.indptr, g.indices, g.data, t),
        f"core_numbers ({b.n_arcs} arcs)": lambda k: k.core_numbers(b.indptr, b.indices),
    }
    print(f"{'kernel':<44}{'compiled':>12}{'python':>12}{'speedup':>10}")
    for name, run in cases.items():
        py = best_of(lambda: run(_pykernels), args.repeat)
        if compiled_kernels is None:
            print(f"{name:<44}{'n/a':>12}{py:>11.3f}s{'':>10}")
            continue
        c = best_of(lambda: run(compiled_kernels), args.repeat)
        print(f"{name:<44}{c:>11.4f}s{py:>11.3f}s{py / c:>9.0f}x")


if __name__ == "__main__":
    main()
