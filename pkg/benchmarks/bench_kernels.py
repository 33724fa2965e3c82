"""Compare the compiled and pure-Python search kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from properindex import available_backends
from properindex import generators as gen
from properindex.coloring import EdgeColoring, verify_3_proper
from properindex.oracle import px3_exact, px3_lower_bound_refute
from properindex.structure import hamiltonian_path


def verify_batch(backend):
    rng = random.Random(0)
    for _ in range(40):
        g = gen.random_connected(10, rng, p=0.45)
        verify_3_proper(EdgeColoring(g, [rng.randint(1, 3) for _ in range(g.m)]), backend)


def refute_cliques(backend):
    r = px3_lower_bound_refute(gen.shared_vertex_cliques(3, [4, 4, 4]), 2, backend=backend)
    assert r.proved_ge


def exact_trees(backend):
    for t in gen.nonisomorphic_trees(8):
        px3_exact(t, backend=backend)


def ham_paths(backend):
    rng = random.Random(1)
    for _ in range(5):
        g = gen.random_two_connected_nontraceable(14, rng)
        assert hamiltonian_path(g, backend=backend) is None


CASES = [("verify 40 random 3-colorings, n=10", verify_batch),
         ("refute t=2 on shared cliques (2^17)", refute_cliques),
         ("px3 of the 23 trees on 8 vertices", exact_trees),
         ("Hamiltonian path, 5 non-traceable n=14", ham_paths)]


def best_of(fn, backend, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':42} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, fn in CASES:
        secs = [best_of(fn, b, args.repeat) for b in backends]
        ratio = f"{secs[0] / secs[-1]:8.1f}x" if len(secs) > 1 else "       -"
        print(f"{name:42} " + " ".join(f"{s:9.3f}s" for s in secs) + f"  {ratio}")


if __name__ == "__main__":
    main()
