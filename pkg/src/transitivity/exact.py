"""Validation of transitive partitions, plus exact search for Tr and the Grundy number."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .graph import Graph

SEARCH_BOUND = 16


class PartitionError(ValueError):
    """The blocks do not split the vertex set into non-empty parts."""


@dataclass(frozen=True)
class OrderedPartition:
    """Blocks ``V_1..V_k``; ``blocks[0]`` is ``V_1``. Ids are sorted within each block."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "OrderedPartition":
        return cls(tuple(tuple(sorted(b)) for b in blocks))

    @classmethod
    def from_assignment(cls, blk: Sequence[int]) -> "OrderedPartition":
        """Build from a 1-based block index per vertex."""
        k = max(blk, default=0)
        blocks: list[list[int]] = [[] for _ in range(k)]
        for v, b in enumerate(blk):
            blocks[b - 1].append(v)
        return cls(tuple(tuple(b) for b in blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def assignment(self, n: int) -> list[int]:
        """1-based block index per vertex; raises :class:`PartitionError` unless the blocks partition ``0..n-1``."""
        blk = [0] * n
        for i, block in enumerate(self.blocks, start=1):
            if not block:
                raise PartitionError(f"block {i} is empty")
            for v in block:
                if not 0 <= v < n:
                    raise PartitionError(f"vertex {v} out of range")
                if blk[v]:
                    raise PartitionError(f"vertex {v} in blocks {blk[v]} and {i}")
                blk[v] = i
        missing = [v for v in range(n) if not blk[v]]
        if missing:
            raise PartitionError(f"vertices not covered: {missing[:10]}")
        return blk

    def merge_lowest(self) -> "OrderedPartition":
        """Merge ``V_1`` into ``V_2``; keeps a transitive partition transitive."""
        if self.k < 2:
            raise ValueError("need at least two blocks")
        merged = tuple(sorted(self.blocks[0] + self.blocks[1]))
        return OrderedPartition((merged,) + self.blocks[2:])


def dump_partition(p: OrderedPartition) -> str:
    return "".join(" ".join(map(str, b)) + "\n" for b in p.blocks)


def load_partition(text: str) -> OrderedPartition:
    blocks = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        try:
            blocks.append([int(x) for x in ln.split()])
        except ValueError:
            raise PartitionError(f"malformed partition line: {ln!r}") from None
    return OrderedPartition.from_blocks(blocks)


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`validate_transitive`; ``violation`` is the least ``(i, j, v)``."""

    ok: bool
    violation: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_transitive(g: Graph, p: OrderedPartition) -> Verdict:
    """Accept iff every vertex of ``V_j`` has a neighbor in each ``V_i``, ``i < j``.

    On rejection the violation is the lexicographically least
    ``(i, j, vertex)``. Linear in the size of ``g``.
    """
    blk = p.assignment(g.n)
    bad = kernels.first_violation(g.adj, blk)
    return Verdict(True) if bad is None else Verdict(False, tuple(bad))


def is_independent_partition(g: Graph, p: OrderedPartition) -> bool:
    blk = p.assignment(g.n)
    return all(blk[u] != blk[v] for u, v in g.edges())


@dataclass(frozen=True)
class TransitivityResult:
    value: int
    witness: OrderedPartition
    certificate: object = None


def level_caps(g: Graph) -> list[int]:
    """Upper bound on the highest block each vertex can occupy.

    A vertex in block ``j`` needs ``j-1`` distinct neighbors able to sit in
    blocks ``1..j-1``. Starting from ``deg + 1`` this is iterated to a fixpoint.
    """
    caps = [len(a) + 1 for a in g.adj]
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            reach = 0
            for c in sorted(caps[w] for w in g.adj[v]):
                if c > reach:
                    reach += 1
            if reach + 1 < caps[v]:
                caps[v] = reach + 1
                changed = True
    return caps


def _twin_prev(g: Graph, order: Sequence[int]) -> list[int]:
    masks = g.masks
    last: dict[tuple[str, int], int] = {}
    prev = [-1] * g.n
    for v in order:
        for key in (("open", masks[v]), ("closed", masks[v] | 1 << v)):
            if key in last:
                prev[v] = last[key]
            last[key] = v
    return prev


def _search_setup(g: Graph):
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    return order, level_caps(g), _twin_prev(g, order)


def _check_bound(g: Graph, bound: int) -> None:
    if g.n > bound:
        raise ValueError(f"exact search limited to {bound} vertices, graph has {g.n}")


def find_transitive_partition(
    g: Graph, k: int, independent: bool = False, bound: int = SEARCH_BOUND
) -> OrderedPartition | None:
    """A transitive ``k``-partition of ``g`` with non-empty blocks, or ``None``."""
    _check_bound(g, bound)
    if k < 1 or k > g.n:
        return None
    order, caps, twins = _search_setup(g)
    blk = kernels.transitive_search(list(g.masks), k, order, caps, twins, independent)
    return None if blk is None else OrderedPartition.from_assignment(blk)


def _descending_search(g: Graph, limit, independent: bool, bound: int) -> TransitivityResult:
    _check_bound(g, bound)
    if g.n == 0:
        return TransitivityResult(0, OrderedPartition(()))
    top = min(g.max_degree() + 1, g.n)
    if limit is not None:
        top = min(top, limit)
    order, caps, twins = _search_setup(g)
    masks = list(g.masks)
    for k in range(top, 0, -1):
        blk = kernels.transitive_search(masks, k, order, caps, twins, independent)
        if blk is not None:
            return TransitivityResult(k, OrderedPartition.from_assignment(blk))
    raise AssertionError("a single block is always transitive")


def transitivity_exact(g: Graph, limit: int | None = None, bound: int = SEARCH_BOUND) -> TransitivityResult:
    """Exact ``Tr(g)`` (capped at ``limit``) with a witness partition.

    Tries ``k`` from ``min(Δ+1, limit)`` downward; the first feasible ``k`` is
    the answer because feasibility is closed under merging the lowest blocks.
    """
    return _descending_search(g, limit, False, bound)


def grundy_exact(g: Graph, bound: int = SEARCH_BOUND) -> TransitivityResult:
    """Exact Grundy number: largest transitive partition into independent sets."""
    return _descending_search(g, None, True, bound)
