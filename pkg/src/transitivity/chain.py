"""Linear-time transitivity of bipartite chain graphs."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .exact import OrderedPartition, TransitivityResult, validate_transitive
from .graph import (
    Bipartition,
    ChainOrdering,
    Graph,
    NotChain,
    OddCycle,
    chain_ordering_unchecked,
    recognize_bipartite,
)


class Kind(str, Enum):
    FULL = "FULL"
    MINUS_EDGE = "MINUS_EDGE"


class NotChainGraphError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class EdgelessGraphError(ValueError):
    """An edgeless graph has transitivity 1 and no biclique certificate."""


@dataclass(frozen=True)
class ChainCertificate:
    t: int
    kind: Kind
    x_block: tuple[int, ...]
    y_block: tuple[int, ...]

    @property
    def transitivity(self) -> int:
        return self.t + 1


def max_index(g: Graph, c: ChainOrdering) -> ChainCertificate:
    """Largest ``t`` such that the first ``t`` vertices of each side induce ``K_{t,t}`` or ``K_{t,t} - x_t y_t``.

    Walks the diagonal ``x_i y_i`` while it is an edge, then tests the two
    off-diagonal edges at the stopping index. Indices beyond either side
    count as absent edges.
    """
    if g.m == 0:
        raise EdgelessGraphError("edgeless graph has no biclique certificate")
    xs, ys = c.order_x, c.order_y

    def edge(i: int, j: int) -> bool:
        # 1-based positions in the chain ordering
        if i < 1 or j < 1 or i > len(xs) or j > len(ys):
            return False
        return g.has_edge(xs[i - 1], ys[j - 1])

    i = 1
    while edge(i, i):
        i += 1
    j = i
    if edge(j, j - 1) and edge(j - 1, j):
        t, kind = j, Kind.MINUS_EDGE
    else:
        t, kind = j - 1, Kind.FULL
    return ChainCertificate(t, kind, tuple(xs[:t]), tuple(ys[:t]))


def certificate_holds(g: Graph, cert: ChainCertificate) -> bool:
    """Edge-by-edge check that the blocks induce the claimed biclique."""
    t = cert.t
    if len(cert.x_block) != t or len(cert.y_block) != t:
        return False
    for a, x in enumerate(cert.x_block):
        for b, y in enumerate(cert.y_block):
            want = not (cert.kind is Kind.MINUS_EDGE and a == t - 1 and b == t - 1)
            if g.has_edge(x, y) != want:
                return False
    side = set(cert.x_block)
    other = set(cert.y_block)
    if any(g.has_edge(u, v) for u in side for v in side if u < v):
        return False
    return not any(g.has_edge(u, v) for u in other for v in other if u < v)


def build_witness(g: Graph, cert: ChainCertificate) -> OrderedPartition:
    """Transitive ``(t+1)``-partition from a certificate.

    ``V_{t+1} = {x_1}``, ``V_t = {y_1}`` and ``V_{t+1-i} = {x_i, y_i}`` for
    ``2 <= i <= t``; every other vertex joins ``V_1``. The only pair that may
    be missing, ``x_t y_t``, shares ``V_1`` and is never needed.
    """
    if not certificate_holds(g, cert):
        raise ValueError("certificate does not match the graph")
    t = cert.t
    xs, ys = cert.x_block, cert.y_block
    blocks: list[set[int]] = [set() for _ in range(t + 1)]
    blocks[t].add(xs[0])
    if t == 1:
        used = {xs[0]}
    else:
        blocks[t - 1].add(ys[0])
        for i in range(2, t + 1):
            blocks[t - i].update((xs[i - 1], ys[i - 1]))
        used = set(xs) | set(ys)
    blocks[0].update(v for v in range(g.n) if v not in used)
    return OrderedPartition.from_blocks(blocks)


def chain_transitivity(g: Graph, check: bool = True) -> TransitivityResult:
    """Transitivity of a bipartite chain graph with witness and certificate.

    Raises :class:`NotChainGraphError` when ``g`` is not bipartite or not a
    chain graph. The witness is validated unless ``check`` is false.
    """
    b = recognize_bipartite(g)
    if isinstance(b, OddCycle):
        raise NotChainGraphError(f"not bipartite: odd cycle through {list(b.vertices)}", b)
    c = chain_ordering_unchecked(g, b)
    if isinstance(c, NotChain):
        raise NotChainGraphError(
            f"not a chain graph: N({c.u}) and N({c.v}) are incomparable (side {c.side})", c
        )
    if g.m == 0:
        witness = OrderedPartition.from_blocks([range(g.n)]) if g.n else OrderedPartition(())
        return TransitivityResult(1 if g.n else 0, witness, None)
    cert = max_index(g, c)
    witness = build_witness(g, cert)
    if check:
        verdict = validate_transitive(g, witness)
        if not verdict:
            raise AssertionError(f"chain witness rejected at {verdict.violation}")
    return TransitivityResult(cert.transitivity, witness, cert)


def dump_certificate(cert: ChainCertificate) -> str:
    return (
        f"{cert.t} {cert.kind.value} {cert.transitivity}\n"
        + " ".join(map(str, cert.x_block)) + "\n"
        + " ".join(map(str, cert.y_block)) + "\n"
    )


__all__ = [
    "Bipartition",
    "ChainCertificate",
    "Kind",
    "NotChainGraphError",
    "EdgelessGraphError",
    "build_witness",
    "certificate_holds",
    "chain_transitivity",
    "dump_certificate",
    "max_index",
]
