"""Reduction from proper 3-coloring to transitivity on bipartite graphs.

For a source graph with ``n`` vertices and ``m`` edges the target graph has
``10m + 8n + 26`` vertices and ``m^2 + 14m + 6n + 25`` edges, and it admits
a transitive ``(m+5)``-partition iff the source is 3-colorable.

Every gadget is a path ``x - w - v - z`` with pendant ends ``x`` and ``z``.
Label names: ``v3``/``vp3`` for a vertex gadget and its primed copy,
``ve2``/``vpe2`` for edge gadget 2, ``va``/``vb``/``ve`` for the three
fixed gadgets, ``e2``/``ep2`` for the biclique vertices of edge 2 and
``e``/``ep`` for the extra biclique pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .exact import OrderedPartition, validate_transitive
from .graph import Graph

# block of (x, w, z) for each block of the path's v vertex
COMPANION_BLOCKS = {
    1: (1, 2, 2),
    2: (2, 1, 1),
    3: (1, 2, 1),
}


class ReductionError(ValueError):
    pass


class SoundnessError(AssertionError):
    """The extracted coloring is improper although the partition validated."""


@dataclass(frozen=True)
class ReductionInstance:
    source: Graph
    source_edges: tuple[tuple[int, int], ...]
    g_prime: Graph
    k: int
    labels: Mapping[str, int]
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    gadgets: tuple[str, ...]

    def vid(self, name: str) -> int:
        return self.labels[name]

    def names(self) -> list[str]:
        """Labels ordered by vertex id."""
        inv = [""] * self.g_prime.n
        for name, v in self.labels.items():
            inv[v] = name
        return inv


def _gadget_names(n: int, m: int) -> list[str]:
    tags = [str(i) for i in range(1, n + 1)] + [f"e{j}" for j in range(1, m + 1)] + ["a", "b", "e"]
    out = []
    for tag in tags:
        out.append(tag)
        out.append("p" + tag)
    return out


def build_reduction(g: Graph) -> ReductionInstance:
    """Construct the target graph; source edges are numbered in lexicographic order."""
    src_edges = tuple(g.edges())
    n, m = g.n, len(src_edges)
    labels: dict[str, int] = {}
    edges: list[tuple[int, int]] = []

    def add(name: str) -> int:
        labels[name] = len(labels)
        return labels[name]

    gadgets = _gadget_names(n, m)
    for tag in gadgets:
        x, w, v, z = (add(c + tag) for c in "xwvz")
        edges += [(x, w), (w, v), (v, z)]
    a_ids = [add(f"e{j}") for j in range(1, m + 1)] + [add("e")]
    b_ids = [add(f"ep{j}") for j in range(1, m + 1)] + [add("ep")]
    edges += [(a, b) for a in a_ids for b in b_ids]
    for j, (vi, vj) in enumerate(src_edges, start=1):
        ej, epj = labels[f"e{j}"], labels[f"ep{j}"]
        edges += [(labels[f"v{vi + 1}"], ej), (labels[f"v{vj + 1}"], ej), (labels[f"ve{j}"], ej)]
        edges += [(labels[f"vp{vi + 1}"], epj), (labels[f"vp{vj + 1}"], epj), (labels[f"vpe{j}"], epj)]
    e, ep = labels["e"], labels["ep"]
    edges += [(labels["va"], e), (labels["vb"], e), (labels["ve"], e)]
    edges += [(labels["vpa"], ep), (labels["vpb"], ep), (labels["vpe"], ep)]
    gp = Graph(len(labels), edges)
    return ReductionInstance(g, src_edges, gp, m + 5, labels, tuple(a_ids), tuple(b_ids), tuple(gadgets))


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.n and all(c in (1, 2, 3) for c in coloring) and all(
        coloring[u] != coloring[v] for u, v in g.edges()
    )


def coloring_to_partition(inst: ReductionInstance, coloring: Sequence[int]) -> OrderedPartition:
    """Transitive ``(m+5)``-partition of the target graph from a proper 3-coloring."""
    g = inst.source
    coloring = list(coloring)
    if not is_proper_coloring(g, coloring):
        raise ReductionError("coloring is not a proper 3-coloring of the source graph")
    lab = inst.labels
    blk = [0] * inst.g_prime.n
    v_block = {str(i + 1): coloring[i] for i in range(g.n)}
    for j, (vi, vj) in enumerate(inst.source_edges, start=1):
        (v_block[f"e{j}"],) = {1, 2, 3} - {coloring[vi], coloring[vj]}
    v_block.update(a=1, b=2, e=3)
    for tag, q in v_block.items():
        for t in (tag, "p" + tag):
            bx, bw, bz = COMPANION_BLOCKS[q]
            blk[lab["v" + t]] = q
            blk[lab["x" + t]] = bx
            blk[lab["w" + t]] = bw
            blk[lab["z" + t]] = bz
    m = len(inst.source_edges)
    for j in range(1, m + 1):
        blk[lab[f"e{j}"]] = 3 + j
        blk[lab[f"ep{j}"]] = 3 + j
    blk[lab["e"]] = m + 4
    blk[lab["ep"]] = m + 5
    p = OrderedPartition.from_assignment(blk)
    verdict = validate_transitive(inst.g_prime, p)
    if not verdict or p.k != inst.k:
        raise SoundnessError(f"forward partition rejected at {verdict.violation}")
    return p


def partition_to_coloring(inst: ReductionInstance, p: OrderedPartition) -> list[int]:
    """Read a proper 3-coloring of the source off a transitive partition of the target.

    Partitions with more than ``m+5`` blocks are first merged down from the
    bottom. Each source vertex gets the index of the block holding its
    gadget's ``v`` vertex.
    """
    verdict = validate_transitive(inst.g_prime, p)
    if not verdict:
        raise ReductionError(f"partition is not transitive: violation {verdict.violation}")
    if p.k < inst.k:
        raise ReductionError(f"partition has {p.k} blocks, need at least {inst.k}")
    while p.k > inst.k:
        p = p.merge_lowest()
    blk = p.assignment(inst.g_prime.n)
    coloring = []
    for i in range(1, inst.source.n + 1):
        c = blk[inst.labels[f"v{i}"]]
        if c > 3:
            raise ReductionError(f"v{i} lies in block {c} > 3; re-validate the input partition")
        coloring.append(c)
    if not is_proper_coloring(inst.source, coloring):
        raise SoundnessError(f"extracted coloring {coloring} is not proper")
    return coloring


def is_bisimplicial(g: Graph, edge: tuple[int, int], alive: set[int] | None = None) -> bool:
    """Whether ``N(u) | N(v)`` induces a complete bipartite graph, within ``alive`` if given."""
    u, v = edge
    if not g.has_edge(u, v) or (alive is not None and (u not in alive or v not in alive)):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    nu = [w for w in g.adj[u] if alive is None or w in alive]
    nv = [w for w in g.adj[v] if alive is None or w in alive]
    if set(nu) & set(nv):
        return False
    for side in (nu, nv):
        for i, a in enumerate(side):
            if any(g.has_edge(a, b) for b in side[i + 1:]):
                return False
    return all(g.has_edge(a, b) for a in nu for b in nv)


@dataclass(frozen=True)
class EliminationVerdict:
    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_elimination(g: Graph, order: Sequence[tuple[int, int]]) -> EliminationVerdict:
    """Check a perfect edge elimination ordering; failing positions are 1-based.

    Edge ``i`` must be bisimplicial in the graph left after deleting the
    endpoints of edges ``1..i-1``; the graph left at the end must be edgeless.
    """
    alive = set(range(g.n))
    for i, (u, v) in enumerate(order, start=1):
        if u not in alive or v not in alive or not g.has_edge(u, v):
            return EliminationVerdict(False, i, "not an edge of the remaining graph")
        if not is_bisimplicial(g, (u, v), alive):
            return EliminationVerdict(False, i, "not bisimplicial")
        alive.discard(u)
        alive.discard(v)
    for a in alive:
        if any(b in alive for b in g.adj[a]):
            return EliminationVerdict(False, len(order) + 1, "edges remain")
    return EliminationVerdict(True)


def build_elimination_order(inst: ReductionInstance) -> list[tuple[int, int]]:
    """Pendant edges of every gadget, then a perfect matching of the biclique."""
    lab = inst.labels
    order = []
    for tag in inst.gadgets:
        order.append((lab["x" + tag], lab["w" + tag]))
        order.append((lab["z" + tag], lab["v" + tag]))
    order += list(zip(inst.a_set, inst.b_set))
    verdict = verify_elimination(inst.g_prime, order)
    if not verdict:
        raise SoundnessError(f"elimination order rejected at {verdict.index}: {verdict.reason}")
    return order


def dump_labels(inst: ReductionInstance) -> str:
    return "".join(f"{name} {v}\n" for name, v in sorted(inst.labels.items(), key=lambda kv: kv[1]))


def dump_edge_order(order: Sequence[tuple[int, int]]) -> str:
    return "".join(f"{u} {v}\n" for u, v in order)


def load_edge_order(text: str) -> list[tuple[int, int]]:
    out = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed order line: {ln!r}")
        out.append((int(parts[0]), int(parts[1])))
    return out
