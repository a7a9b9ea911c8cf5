"""Immutable simple graphs with edge-list I/O and bipartite/chain recognition."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input or invalid edge sets."""


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Adjacency is stored as a tuple of sorted neighbor tuples. Instances are
    immutable and hashable; there is no mutation API.
    """

    __slots__ = ("n", "adj", "m", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        nbrs: list[list[int]] = [[] for _ in range(n)]
        m = 0
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            nbrs[u].append(v)
            nbrs[v].append(u)
            m += 1
        adj = []
        for v, lst in enumerate(nbrs):
            lst.sort()
            for a, b in zip(lst, lst[1:]):
                if a == b:
                    raise GraphFormatError(f"duplicate edge ({min(v, a)}, {max(v, a)})")
            adj.append(tuple(lst))
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(adj)
        self.m = m
        self._masks: tuple[int, ...] | None = None

    @classmethod
    def _from_adj(cls, adj: Sequence[Sequence[int]]) -> "Graph":
        # trusted constructor: adj must already be sorted and symmetric, without loops
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(tuple(a) for a in adj)
        g.m = sum(len(a) for a in g.adj) // 2
        g._masks = None
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency rows as integer bitmasks (bit ``w`` set iff ``w`` is a neighbor)."""
        if self._masks is None:
            rows = []
            for a in self.adj:
                r = 0
                for w in a:
                    r |= 1 << w
                rows.append(r)
            self._masks = tuple(rows)
        return self._masks

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(H, old_ids)``; vertex ``i`` of ``H`` is ``old_ids[i]`` here."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        adj = [[new[w] for w in self.adj[v] if w in new] for v in old]
        return Graph._from_adj(adj), old

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def check(self) -> None:
        """Assert the structural invariants (symmetry, no loops, edge count)."""
        total = 0
        for v, a in enumerate(self.adj):
            assert list(a) == sorted(set(a)), f"adjacency of {v} not sorted/unique"
            assert v not in a, f"self-loop at {v}"
            for w in a:
                assert self.has_edge(w, v), f"asymmetric edge {v}-{w}"
            total += len(a)
        assert total == 2 * self.m


def load_graph(text: str) -> Graph:
    """Parse an edge-list document: header ``n m`` then ``m`` lines ``u v``."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty document")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"malformed header line: {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"malformed header line: {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"negative count in header: {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)} lines")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line: {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"malformed edge line: {ln!r}") from None
    return Graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


def dump_graph(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dump_graph(g))


@dataclass(frozen=True)
class Bipartition:
    side_x: frozenset[int]
    side_y: frozenset[int]

    def is_valid_for(self, g: Graph) -> bool:
        if self.side_x & self.side_y or len(self.side_x) + len(self.side_y) != g.n:
            return False
        if any(not (0 <= v < g.n) for v in self.side_x | self.side_y):
            return False
        return all((u in self.side_x) != (v in self.side_x) for u, v in g.edges())


@dataclass(frozen=True)
class OddCycle:
    """Refusal from :func:`recognize_bipartite`: vertices of an odd cycle."""

    vertices: tuple[int, ...]


def recognize_bipartite(g: Graph) -> Bipartition | OddCycle:
    """2-color ``g`` by BFS layering; each component's least vertex goes to X."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return OddCycle(_odd_cycle(parent, u, w))
    xs = frozenset(v for v in range(g.n) if color[v] == 0)
    return Bipartition(xs, frozenset(range(g.n)) - xs)


def _odd_cycle(parent: list[int], u: int, w: int) -> tuple[int, ...]:
    # tree paths from both endpoints up to their lowest common ancestor
    pu = [u]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    pw = [w]
    while parent[pw[-1]] != -1:
        pw.append(parent[pw[-1]])
    on_pu = set(pu)
    lca_idx_w = next(i for i, v in enumerate(pw) if v in on_pu)
    lca = pw[lca_idx_w]
    cyc = pu[: pu.index(lca) + 1] + pw[:lca_idx_w]
    return tuple(sorted(cyc))


@dataclass(frozen=True)
class ChainOrdering:
    order_x: tuple[int, ...]
    order_y: tuple[int, ...]


@dataclass(frozen=True)
class NotChain:
    """Refusal from :func:`recognize_chain`: two same-side vertices with incomparable neighborhoods."""

    side: str
    u: int
    v: int


def recognize_chain(g: Graph, b: Bipartition) -> ChainOrdering | NotChain:
    """Order each side by non-increasing degree (ties by id), then verify nesting in one pass.

    Linear time: the ordering is a bucket sort on degrees.
    """
    if not b.is_valid_for(g):
        raise ValueError("bipartition is not valid for this graph")
    return chain_ordering_unchecked(g, b)


def chain_ordering_unchecked(g: Graph, b: Bipartition) -> ChainOrdering | NotChain:
    """:func:`recognize_chain` without re-validating ``b``."""
    adj = g.adj
    top = g.max_degree()
    bx: list[list[int]] = [[] for _ in range(top + 1)]
    by: list[list[int]] = [[] for _ in range(top + 1)]
    side_x = b.side_x
    for v in range(g.n):
        (bx if v in side_x else by)[len(adj[v])].append(v)
    ox = tuple(v for d in range(top, -1, -1) for v in bx[d])
    oy = tuple(v for d in range(top, -1, -1) for v in by[d])
    mark = [-1] * g.n
    for side, order in (("X", ox), ("Y", oy)):
        for i in range(len(order) - 1):
            a, c = order[i], order[i + 1]
            for w in adj[a]:
                mark[w] = a
            for w in adj[c]:
                if mark[w] != a:
                    return NotChain(side, a, c)
    return ChainOrdering(ox, oy)


def is_chain_ordering(g: Graph, c: ChainOrdering) -> bool:
    """Literal check of ``N(s[i+1]) <= N(s[i])`` on both sides."""
    for order in (c.order_x, c.order_y):
        for a, b in zip(order, order[1:]):
            if not set(g.adj[b]) <= set(g.adj[a]):
                return False
    return True
