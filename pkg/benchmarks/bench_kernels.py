"""Compiled kernels against the pure-Python fallback on the three hot paths.

    python benchmarks/bench_kernels.py [--seed S] [--graphs N]

Both modules are called directly with identical arguments, and their results
are compared before any timing is reported.
"""

import argparse
import random
import time

from transitivity import _pykernels
from transitivity.atoms import generate_catalog
from transitivity.exact import _search_setup
from transitivity.generators import gnp, random_chain_graph
from transitivity.isomorphism import search_order

try:
    from transitivity import _ckernels
except ImportError:
    _ckernels = None


def search_workload(rng, count):
    """Descending exact-transitivity searches on random graphs of 9 to 11 vertices."""
    calls = []
    for _ in range(count):
        g = gnp(rng.randint(9, 11), rng.choice([0.3, 0.5, 0.7]), rng)
        order, caps, twins = _search_setup(g)
        top = min(g.max_degree() + 1, g.n)
        for k in range(top, 0, -1):
            calls.append(("transitive_search", (list(g.masks), k, order, caps, twins, False)))
    return calls


def embed_workload(rng, count):
    """Every 4-atom against sparse random hosts of 12 to 16 vertices."""
    atoms = generate_catalog(4).atoms
    calls = []
    for _ in range(count):
        h = gnp(rng.randint(12, 16), rng.choice([0.15, 0.2]), rng)
        for a in atoms:
            cand0 = [(1 << h.n) - 1] * a.graph.n
            args = (list(a.graph.masks), search_order(a.graph), cand0, list(h.masks), False)
            calls.append(("monomorphism", args))
    return calls


def validate_workload(rng, count):
    """Violation scans over sparse chain graphs with 20k vertices and random block labels."""
    calls = []
    for _ in range(count):
        g = random_chain_graph(10_000, 10_000, rng, max_degree=10)
        blk = [rng.randint(1, 3) for _ in range(g.n)]
        calls.append(("first_violation", (g.adj, blk)))
    return calls


def run(module, calls):
    start = time.perf_counter()
    out = [getattr(module, name)(*args) for name, args in calls]
    return time.perf_counter() - start, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--graphs", type=int, default=20, help="instances per workload")
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled kernels not built; run: pip install -e . --no-build-isolation")

    workloads = [
        ("transitive_search", search_workload),
        ("monomorphism", embed_workload),
        ("first_violation", validate_workload),
    ]
    print(f"{'kernel':<20}{'calls':>8}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for label, make in workloads:
        calls = make(random.Random(args.seed), args.graphs)
        t_py, out_py = run(_pykernels, calls)
        t_c, out_c = run(_ckernels, calls)
        if out_py != out_c:
            raise SystemExit(f"{label}: backends disagree")
        print(f"{label:<20}{len(calls):>8}{t_py:>12.3f}{t_c:>12.3f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
