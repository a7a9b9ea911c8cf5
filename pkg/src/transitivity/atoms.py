"""t-atom catalogs and the containment certificates they give for ``Tr(G) >= t``.

A t-atom is grown from a (t-1)-atom ``H`` by adding ``r`` independent new
vertices matched to an ``r``-subset ``W`` of ``V(H)``; each vertex outside
``W`` is then joined to exactly one new vertex. The new vertices dominate
``H`` and form the lowest block of a transitive t-partition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .exact import OrderedPartition, validate_transitive
from .graph import Graph
from .isomorphism import canonical_labeling, find_subgraph

ATOM_BOUND = 5


@dataclass(frozen=True)
class Atom:
    """``levels[0]`` is the newest independent set (block ``V_1``); ``levels[-1]`` is the root."""

    graph: Graph
    levels: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.levels)

    def partition(self) -> OrderedPartition:
        return OrderedPartition.from_blocks(self.levels)

    def peel(self) -> "Atom":
        """Drop the newest level, giving the parent (t-1)-atom."""
        keep = sorted(v for lv in self.levels[1:] for v in lv)
        sub, old = self.graph.induced_subgraph(keep)
        new = {v: i for i, v in enumerate(old)}
        return Atom(sub, tuple(tuple(sorted(new[v] for v in lv)) for lv in self.levels[1:]))


K1_ATOM = Atom(Graph(1), ((0,),))


@dataclass(frozen=True)
class AtomCatalog:
    t: int
    atoms: tuple[Atom, ...]

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)


def _atom_bound(t: int) -> int:
    return max(1, 2 ** (t - 1))


def expand_atom(h: Atom, r: int) -> list[Atom]:
    """All t-atoms grown from ``h`` with ``r`` new vertices (raw, not deduplicated).

    New vertex ``n + i`` is matched to the i-th vertex of ``W``; other
    matchings between the interchangeable new vertices are isomorphic and
    skipped.
    """
    n = h.graph.n
    if not 1 <= r <= n:
        raise ValueError(f"r must lie in 1..{n}, got {r}")
    base = h.graph.edges()
    new = tuple(range(n, n + r))
    levels = (new,) + h.levels
    out = []
    for w in itertools.combinations(range(n), r):
        matched = [(v, n + i) for i, v in enumerate(w)]
        wset = set(w)
        rest = [v for v in range(n) if v not in wset]
        for attach in itertools.product(range(r), repeat=len(rest)):
            extra = [(v, n + a) for v, a in zip(rest, attach)]
            out.append(Atom(Graph(n + r, base + matched + extra), levels))
    return out


def _relabel(a: Atom, pos) -> Atom:
    return Atom(a.graph.relabel(pos), tuple(tuple(sorted(pos[v] for v in lv)) for lv in a.levels))


def _sort_key(entry):
    code, atom = entry
    return (atom.graph.n, code)


@lru_cache(maxsize=None)
def _catalog_entries(t: int) -> tuple[tuple[bytes, Atom], ...]:
    if t == 1:
        return ((canonical_labeling(K1_ATOM.graph, 1)[0], K1_ATOM),)
    bound = _atom_bound(t)
    seen: dict[bytes, Atom] = {}
    for _, parent in _catalog_entries(t - 1):
        for r in range(1, parent.graph.n + 1):
            for raw in expand_atom(parent, r):
                code, pos = canonical_labeling(raw.graph, bound)
                if code not in seen:
                    seen[code] = _relabel(raw, pos)
    return tuple(sorted(seen.items(), key=_sort_key))


def generate_catalog(t: int, bound: int = ATOM_BOUND) -> AtomCatalog:
    """Every t-atom up to isomorphism, sorted by (vertex count, canonical form)."""
    if not 1 <= t <= bound:
        raise ValueError(f"t must lie in 1..{bound}, got {t}")
    return AtomCatalog(t, tuple(a for _, a in _catalog_entries(t)))


def catalog_codes(t: int, bound: int = ATOM_BOUND) -> dict[bytes, Atom]:
    generate_catalog(t, bound)
    return dict(_catalog_entries(t))


def _degree_profile(g: Graph) -> list[int]:
    return sorted((len(a) for a in g.adj), reverse=True)


def _may_embed(small: list[int], big: list[int]) -> bool:
    # a monomorphism needs the i-th largest degree of the pattern to fit under the host's
    return len(small) <= len(big) and all(s <= b for s, b in zip(small, big))


@lru_cache(maxsize=None)
def _min_atoms(cat: AtomCatalog) -> tuple[Atom, ...]:
    # Atoms are connected, so a proper subgraph atom has strictly fewer edges.
    # Containment is transitive, hence testing against kept atoms suffices.
    kept: list[tuple[Atom, list[int]]] = []
    for a in sorted(cat.atoms, key=lambda x: x.graph.m):
        prof = _degree_profile(a.graph)
        if not any(
            b.graph.m < a.graph.m and _may_embed(bp, prof) and find_subgraph(b.graph, a.graph) is not None
            for b, bp in kept
        ):
            kept.append((a, prof))
    keep = {id(a) for a, _ in kept}
    return tuple(a for a in cat.atoms if id(a) in keep)


def min_catalog(cat: AtomCatalog) -> AtomCatalog:
    """Drop every atom that contains another catalog atom as a subgraph."""
    return AtomCatalog(cat.t, _min_atoms(cat))


@dataclass(frozen=True)
class LowerBoundCertificate:
    atom: Atom
    embedding: tuple[int, ...]
    partition: OrderedPartition


def partition_from_embedding(g: Graph, atom: Atom, emb) -> OrderedPartition:
    """Atom levels mapped into ``g``; vertices outside the image join ``V_1``."""
    blocks = [set(emb[v] for v in lv) for lv in atom.levels]
    image = set(emb)
    blocks[0].update(v for v in range(g.n) if v not in image)
    return OrderedPartition.from_blocks(blocks)


def certify_lower_bound(g: Graph, t: int, bound: int = ATOM_BOUND) -> LowerBoundCertificate | None:
    """Embed some minimal t-atom into ``g`` and derive a transitive t-partition, or ``None``."""
    if t > g.n:
        return None
    atoms = sorted(min_catalog(generate_catalog(t, bound)).atoms, key=lambda a: (a.graph.n, a.graph.m))
    for atom in atoms:
        emb = find_subgraph(atom.graph, g)
        if emb is None:
            continue
        part = partition_from_embedding(g, atom, emb)
        verdict = validate_transitive(g, part)
        if not verdict:
            raise AssertionError(f"atom partition rejected at {verdict.violation}")
        return LowerBoundCertificate(atom, emb, part)
    return None


def atom_from_partition(g: Graph, p: OrderedPartition) -> tuple[Atom, tuple[int, ...]]:
    """Extract a ``k``-atom subgraph from a transitive ``k``-partition of ``g``.

    Starting from one vertex of the top block, each lower block contributes a
    minimal set ``B`` dominating the atom built so far. Minimality gives every
    vertex of ``B`` a private neighbor, so ``B`` matches into the atom; the
    remaining atom vertices each keep one edge into ``B``.

    Returns the atom (vertices numbered in order of addition) and its
    embedding into ``g``.
    """
    if not validate_transitive(g, p):
        raise ValueError("partition is not transitive")
    blocks = p.blocks
    root = blocks[-1][0]
    verts = [root]
    edges: list[tuple[int, int]] = []
    levels = [[root]]
    for block in reversed(blocks[:-1]):
        inside = set(verts)
        b_set = [b for b in block if any(w in inside for w in g.adj[b])]
        for b in list(b_set):
            trial = [x for x in b_set if x != b]
            if all(any(g.has_edge(h, x) for x in trial) for h in verts):
                b_set = trial
        matched = set()
        for b in b_set:
            private = min(
                h for h in verts
                if g.has_edge(h, b) and not any(g.has_edge(h, x) for x in b_set if x != b)
            )
            edges.append((private, b))
            matched.add(private)
        for h in verts:
            if h not in matched:
                edges.append((h, min(x for x in b_set if g.has_edge(h, x))))
        verts.extend(b_set)
        levels.insert(0, b_set)
    index = {v: i for i, v in enumerate(verts)}
    atom = Atom(
        Graph(len(verts), [(index[u], index[v]) for u, v in edges]),
        tuple(tuple(sorted(index[v] for v in lv)) for lv in levels),
    )
    return atom, tuple(verts)


def is_atom_shaped(atom: Atom) -> bool:
    """Check the recursive construction rule level by level."""
    a = atom
    while a.t > 1:
        new = set(a.levels[0])
        old = [v for lv in a.levels[1:] for v in lv]
        g = a.graph
        if any(g.has_edge(u, v) for u in new for v in new if u < v):
            return False
        # each new vertex has exactly one private matched partner; others attach once
        nbr_new = {v: [u for u in g.adj[v] if u in new] for v in old}
        if any(len(x) != 1 for x in nbr_new.values()):
            return False
        for u in new:
            if not any(nbr_new[v] == [u] for v in old):
                return False
        a = a.peel()
    return a.graph.n == 1


TRIANGLE = Graph(3, [(0, 1), (1, 2), (0, 2)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def classify_tr3(g: Graph, induced: bool = False) -> str:
    """``"Tr<3"``, ``"Tr=3"`` or ``"Tr>=4"`` from subgraph containment.

    ``Tr >= 3`` iff ``K_3`` or ``P_4`` is a subgraph; with ``induced`` the
    equivalent induced test on ``K_3``, ``P_4``, ``C_4`` is used instead.
    ``Tr >= 4`` iff a member of the minimal 4-atom catalog is a subgraph.
    """
    if induced:
        ge3 = any(find_subgraph(h, g, induced=True) is not None for h in (TRIANGLE, P4, C4))
    else:
        ge3 = any(find_subgraph(h, g) is not None for h in (TRIANGLE, P4))
    if not ge3:
        return "Tr<3"
    ge4 = any(find_subgraph(a.graph, g) is not None for a in min_catalog(generate_catalog(4)).atoms)
    return "Tr>=4" if ge4 else "Tr=3"


def dump_catalog(cat: AtomCatalog) -> str:
    out = [f"{cat.t} {len(cat)}"]
    for a in cat.atoms:
        out.append(f"{a.graph.n} {a.graph.m}")
        out.extend(f"{u} {v}" for u, v in a.graph.edges())
        level_of = [0] * a.graph.n
        for i, lv in enumerate(a.levels, start=1):
            for v in lv:
                level_of[v] = i
        out.append("levels " + " ".join(map(str, level_of)))
    return "\n".join(out) + "\n"


def load_catalog(text: str) -> AtomCatalog:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    t, count = map(int, lines[0])
    pos = 1
    atoms = []
    for _ in range(count):
        n, m = map(int, lines[pos])
        edges = [tuple(map(int, ln)) for ln in lines[pos + 1: pos + 1 + m]]
        lv_line = lines[pos + 1 + m]
        if lv_line[0] != "levels":
            raise ValueError("expected a levels line")
        level_of = list(map(int, lv_line[1:]))
        levels = tuple(tuple(v for v in range(n) if level_of[v] == i) for i in range(1, t + 1))
        atoms.append(Atom(Graph(n, edges), levels))
        pos += m + 2
    return AtomCatalog(t, tuple(atoms))
