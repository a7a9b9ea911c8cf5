"""Subgraph monomorphism search and canonical forms for small graphs."""

from __future__ import annotations

from . import kernels
from .graph import Graph

CANONICAL_BOUND = 12


def search_order(pattern: Graph) -> list[int]:
    """Pattern vertex order: highest degree first, then vertices with most already-placed neighbors."""
    n = pattern.n
    deg = [len(a) for a in pattern.adj]
    placed = [False] * n
    links = [0] * n
    order: list[int] = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if placed[v]:
                continue
            if best < 0 or (links[v], deg[v]) > (links[best], deg[best]):
                best = v
        placed[best] = True
        order.append(best)
        for w in pattern.adj[best]:
            links[w] += 1
    return order


def find_subgraph(pattern: Graph, host: Graph, induced: bool = False) -> tuple[int, ...] | None:
    """Return an embedding ``emb`` (``emb[p]`` is the host image of pattern vertex ``p``) or ``None``.

    Non-induced (monomorphism) unless ``induced`` is set. Deterministic for
    fixed vertex numberings.
    """
    if pattern.n > host.n or pattern.m > host.m:
        return None
    if pattern.n == 0:
        return ()
    hdeg = [len(a) for a in host.adj]
    cand0 = []
    for p in range(pattern.n):
        d = len(pattern.adj[p])
        c = 0
        for h in range(host.n):
            if hdeg[h] >= d:
                c |= 1 << h
        cand0.append(c)
    mapping = kernels.monomorphism(
        list(pattern.masks), search_order(pattern), cand0, list(host.masks), induced
    )
    return None if mapping is None else tuple(mapping)


def is_embedding(pattern: Graph, host: Graph, emb, induced: bool = False) -> bool:
    if len(emb) != pattern.n or len(set(emb)) != len(emb):
        return False
    if any(not (0 <= h < host.n) for h in emb):
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if pattern.has_edge(a, b):
                if not host.has_edge(emb[a], emb[b]):
                    return False
            elif induced and host.has_edge(emb[a], emb[b]):
                return False
    return True


def _refine(adj, colors: list[int]) -> list[int]:
    # colour refinement; new colours are ranks of (colour, neighbour-colour multiset)
    ncls = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncls:
            return new
        colors, ncls = new, len(rank)


def _encode(g: Graph, pos: list[int]) -> bytes:
    n = g.n
    inv = [0] * n
    for v, p in enumerate(pos):
        inv[p] = v
    bits = 0
    nbits = 0
    for i in range(n):
        row = g.masks[inv[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | (row >> inv[j] & 1)
            nbits += 1
    return n.to_bytes(2, "big") + bits.to_bytes((nbits + 7) // 8, "big")


def canonical_labeling(g: Graph, bound: int = CANONICAL_BOUND) -> tuple[bytes, list[int]]:
    """Canonical code and a labeling ``pos`` (vertex ``v`` goes to position ``pos[v]``) realizing it.

    Colour refinement, then exhaustive individualization over the first
    smallest non-singleton cell, keeping the least code. Only one vertex per
    twin class of a cell is branched on.
    """
    if g.n > bound:
        raise ValueError(f"canonical form limited to {bound} vertices, graph has {g.n}")
    adj = g.adj
    masks = g.masks
    best: list = [None, None]

    def visit(colors):
        colors = _refine(adj, colors)
        n = len(colors)
        if len(set(colors)) == n:
            code = _encode(g, colors)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, colors
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        cell = [v for v in range(n) if colors[v] == target]
        seen = set()
        for v in cell:
            # twins are swapped by an automorphism fixing the current colouring
            keys = (("open", masks[v]), ("closed", masks[v] | 1 << v))
            if keys[0] in seen or keys[1] in seen:
                continue
            seen.update(keys)
            nxt = [2 * c + 1 for c in colors]
            nxt[v] = 2 * colors[v]
            visit(nxt)

    visit([0] * g.n)
    return best[0], best[1]


def canonical_form(g: Graph, bound: int = CANONICAL_BOUND) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    if g.n == 0:
        return (0).to_bytes(2, "big")
    return canonical_labeling(g, bound)[0]


def canonical_graph(g: Graph, bound: int = CANONICAL_BOUND) -> tuple[Graph, list[int]]:
    """Relabel ``g`` into canonical position order; returns the graph and ``pos``."""
    if g.n == 0:
        return g, []
    _, pos = canonical_labeling(g, bound)
    return g.relabel(pos), pos
