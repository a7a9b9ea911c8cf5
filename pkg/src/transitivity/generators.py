"""Graph families for tests and benchmarks, including the census of small graphs."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .graph import Graph
from .isomorphism import canonical_form


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with X = ``0..a-1`` and Y = ``a..a+b-1``."""
    return Graph(a + b, [(x, a + y) for x in range(a) for y in range(b)])


def biclique_minus_edge(t: int) -> Graph:
    """``K_{t,t}`` without the edge between the last X and last Y vertex."""
    return Graph(2 * t, [(x, t + y) for x in range(t) for y in range(t) if (x, y) != (t - 1, t - 1)])


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree via a random Prüfer sequence."""
    if n <= 1:
        return Graph(n)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def chain_graph(degrees_x, ny: int, perm=None) -> Graph:
    """Chain graph whose i-th X vertex is adjacent to the first ``degrees_x[i]`` Y vertices.

    ``degrees_x`` need not be sorted. X vertices come first, then Y; ``perm``
    optionally renames vertex ``v`` to ``perm[v]``.
    """
    nx = len(degrees_x)
    edges = [(x, nx + y) for x, d in enumerate(degrees_x) for y in range(d)]
    if perm is not None:
        edges = [(perm[u], perm[v]) for u, v in edges]
    return Graph(nx + ny, edges)


def random_chain_graph(nx: int, ny: int, rng: random.Random, max_degree: int | None = None, shuffle: bool = True) -> Graph:
    top = ny if max_degree is None else min(ny, max_degree)
    degs = [rng.randint(0, top) for _ in range(nx)]
    perm = None
    if shuffle:
        perm = list(range(nx + ny))
        rng.shuffle(perm)
    return chain_graph(degs, ny, perm)


def all_chain_graphs(max_x: int, max_y: int):
    """Every chain graph with ``|X| <= max_x`` and ``|Y| <= max_y``, once per nested degree sequence.

    Yields ``(degrees_x, ny, graph)``; non-increasing ``degrees_x`` fixes the
    nested neighborhoods ``N(x_i) = {y_1..y_d}``.
    """
    for nx in range(max_x + 1):
        for ny in range(max_y + 1):
            if nx + ny == 0:
                continue
            for degs in itertools.combinations_with_replacement(range(ny, -1, -1), nx):
                yield list(degs), ny, chain_graph(degs, ny)


@lru_cache(maxsize=None)
def census(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices up to isomorphism.

    Built by adding a vertex with every possible neighborhood to each graph
    on ``n - 1`` vertices and deduplicating canonical forms.
    """
    if n == 0:
        return (Graph(0),)
    seen: dict[bytes, Graph] = {}
    for h in census(n - 1):
        base = h.edges()
        for r in range(n):
            for nb in itertools.combinations(range(n - 1), r):
                g = Graph(n, base + [(v, n - 1) for v in nb])
                seen.setdefault(canonical_form(g, bound=max(n, 12)), g)
    return tuple(seen[c] for c in sorted(seen))


def census_upto(n: int) -> list[Graph]:
    return [g for i in range(1, n + 1) for g in census(i)]
