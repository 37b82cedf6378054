"""Time the compiled and pure-Python diffusion kernels on random graphs.

    python benchmarks/bench_spread.py [--nodes 2000 5000] [--degree 4] [--steps 10]
"""

import argparse
import random
import time

import numpy as np

from dilated import Graph, Iri, Triple
from dilated import _kernel_py
from dilated.activation import _Topology

try:
    from dilated._ext import kernel as _kernel_c
except ImportError:
    _kernel_c = None


def random_graph(n, degree, rng):
    nodes = [Iri(f"http://ex.org/n{i}") for i in range(n)]
    p = Iri("http://ex.org/p")
    return Graph(Triple(rng.choice(nodes), p, rng.choice(nodes)) for _ in range(n * degree)), nodes


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, nargs="+", default=[500, 2000, 10000])
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--steps", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(0)
    print(f"{'nodes':>8} {'edges':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}  identical")
    for n in args.nodes:
        g, nodes = random_graph(n, args.degree, rng)
        topo = _Topology(g, "undirected")
        e0 = topo.vector({s: 1.0 / 10 for s in rng.sample(nodes, 10)})
        call = lambda k: k.run(topo.indptr, topo.indices, e0, 0.85, args.steps, 0.0)
        t_py, (acc_py, _) = best_of(lambda: call(_kernel_py), args.repeat)
        if _kernel_c is None:
            print(f"{len(topo.nodes):>8} {len(g):>8} {t_py:>10.4f} {'n/a':>10} {'n/a':>8}  n/a")
            continue
        t_c, (acc_c, _) = best_of(lambda: call(_kernel_c), args.repeat)
        same = np.array_equal(np.asarray(acc_py), acc_c)
        print(f"{len(topo.nodes):>8} {len(g):>8} {t_py:>10.4f} {t_c:>10.5f} {t_py / t_c:>7.0f}x  {same}")


if __name__ == "__main__":
    main()
