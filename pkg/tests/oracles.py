"""Brute-force reference implementations.

These use none of the library's search code: only ``Graph`` for adjacency
and plain enumeration. They are slow and meant for graphs of at most ten
vertices or so.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def _adj_masks(g):
    masks = [0] * g.n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _submasks(s):
    d = s
    while d:
        yield d
        d = (d - 1) & s


def _partition_dp(g, independent):
    """Max k over transitive partitions, by recursion on the lowest block.

    ``best(S)`` is the largest transitive partition of ``G[S]``. Block ``V_1``
    is any nonempty ``D`` that dominates ``S - D``; the rest is a transitive
    partition of ``S - D``.
    """
    masks = _adj_masks(g)
    nbr_of = {}

    def dominated(d):
        if d not in nbr_of:
            out = 0
            for v in range(g.n):
                if d >> v & 1:
                    out |= masks[v]
            nbr_of[d] = out
        return nbr_of[d]

    def is_independent(d):
        return not (dominated(d) & d)

    @lru_cache(maxsize=None)
    def best(s):
        if s == 0:
            return 0
        top = 0
        for d in _submasks(s):
            rest = s & ~d
            if rest & ~dominated(d):
                continue
            if independent and not is_independent(d):
                continue
            top = max(top, 1 + best(rest))
        return top

    return best((1 << g.n) - 1)


def transitivity_dp(g) -> int:
    return _partition_dp(g, independent=False)


def grundy_dp(g) -> int:
    return _partition_dp(g, independent=True)


def grundy_by_orderings(g) -> int:
    """Grundy number as the worst first-fit coloring over all vertex orders."""
    best = 0
    for order in itertools.permutations(range(g.n)):
        color = {}
        for v in order:
            used = {color[u] for u in g.adj[v] if u in color}
            c = 1
            while c in used:
                c += 1
            color[v] = c
        best = max(best, max(color.values(), default=0))
    return best


def is_transitive(g, blocks) -> bool:
    """Literal check: every vertex of V_j has a neighbor in V_i for all i < j."""
    seen = sorted(v for b in blocks for v in b)
    if seen != list(range(g.n)) or any(not b for b in blocks):
        return False
    for j in range(len(blocks)):
        for i in range(j):
            for v in blocks[j]:
                if not any(g.has_edge(v, u) for u in blocks[i]):
                    return False
    return True


def has_monomorphism(pattern, host, induced=False) -> bool:
    pe = pattern.edges()
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pe):
            if not induced or sum(
                host.has_edge(image[u], image[v]) for u, v in itertools.combinations(range(pattern.n), 2)
            ) == len(pe):
                return True
    return False


def are_isomorphic(a, b) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(map(len, a.adj)) != sorted(map(len, b.adj)):
        return False
    eb = set(b.edges())
    for perm in itertools.permutations(range(a.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in eb for u, v in a.edges()):
            return True
    return False


def three_colorings(g):
    """Every proper coloring with colors 1..3."""
    for col in itertools.product((1, 2, 3), repeat=g.n):
        if all(col[u] != col[v] for u, v in g.edges()):
            yield list(col)


def first_three_coloring(g):
    return next(three_colorings(g), None)


def induces_biclique(g, a, b) -> bool:
    """``G[A | B]`` is exactly the complete bipartite graph between A and B."""
    for u, v in itertools.combinations(list(a) + list(b), 2):
        across = (u in a) != (v in a)
        if g.has_edge(u, v) != across:
            return False
    return True


def is_chain_graph_bruteforce(g) -> bool:
    """Bipartite (by 2-coloring every labeling) with pairwise comparable neighborhoods on each side."""
    for sides in itertools.product((0, 1), repeat=g.n):
        if any(sides[u] == sides[v] for u, v in g.edges()):
            continue
        ok = True
        for s in (0, 1):
            part = [v for v in range(g.n) if sides[v] == s]
            for u, v in itertools.combinations(part, 2):
                nu, nv = set(g.adj[u]), set(g.adj[v])
                if not (nu <= nv or nv <= nu):
                    ok = False
        if ok:
            return True
    return False
