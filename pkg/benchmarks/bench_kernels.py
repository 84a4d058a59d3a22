"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--ops 2000] [--repeat 5]

Each kernel runs on the dense arrays of one large generated sphere, so the
numbers isolate the inner loops from the dict-based bookkeeping around them.
"""

import argparse
import sys
import timeit

from combcomplex.generators import random_sphere
from combcomplex.kernels import backends


def kernel_calls(mod, d):
    nv, ne = len(d.vertex_ids), len(d.edge_ids)
    return {
        "edge_occurrences": lambda: mod.edge_occurrences(ne, d.walks),
        "link_components": lambda: mod.link_components(nv, d.dart_tail, d.walks, d.offsets),
        "orient_faces": lambda: mod.orient_faces(ne, d.walks, d.offsets),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ops", type=int, default=2000, help="generator moves")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    c = random_sphere(args.seed, args.ops)[0].complex
    d = c.dense
    print(f"sphere: V={c.n_vertices} E={c.n_edges} F={c.n_faces}")
    found = backends()
    if "cython" not in found:
        print("compiled extension not built; only the Python backend is timed")
    results = {}
    for name, mod in found.items():
        for kernel, call in kernel_calls(mod, d).items():
            loops, _ = timeit.Timer(call).autorange()
            best = min(timeit.repeat(call, number=loops, repeat=args.repeat)) / loops
            results[kernel, name] = best
    print(f"{'kernel':<18}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for kernel in ("edge_occurrences", "link_components", "orient_faces"):
        py = results[kernel, "python"]
        cy = results.get((kernel, "cython"))
        tail = f"{cy * 1e3:12.3f}{py / cy:9.1f}x" if cy else f"{'-':>12}{'-':>10}"
        print(f"{kernel:<18}{py * 1e3:12.3f}{tail}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
