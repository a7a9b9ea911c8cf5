import random

import pytest
from hypothesis import given, strategies as st

from oracles import first_three_coloring, induces_biclique, is_transitive, three_colorings
from strategies import graphs
from transitivity.exact import OrderedPartition, validate_transitive
from transitivity.generators import complete, cycle, gnp, path
from transitivity.graph import Graph
from transitivity.reduction import (
    COMPANION_BLOCKS,
    ReductionError,
    build_elimination_order,
    build_reduction,
    coloring_to_partition,
    dump_edge_order,
    dump_labels,
    is_bisimplicial,
    load_edge_order,
    partition_to_coloring,
    verify_elimination,
)


def _sizes(g):
    n, m = g.n, g.m
    return 10 * m + 8 * n + 26, m * m + 14 * m + 6 * n + 25


@pytest.mark.parametrize(
    "g, nv, ne, k",
    [(complete(3), 80, 94, 8), (complete(2), 52, 52, 6), (Graph(1), 34, 31, 5)],
)
def test_sizes_examples(g, nv, ne, k):
    inst = build_reduction(g)
    assert (inst.g_prime.n, inst.g_prime.m, inst.k) == (nv, ne, k)


@given(graphs(max_n=7))
def test_sizes_formula(g):
    inst = build_reduction(g)
    assert (inst.g_prime.n, inst.g_prime.m) == _sizes(g)
    assert induces_biclique(inst.g_prime, set(inst.a_set), set(inst.b_set))


def test_labels():
    inst = build_reduction(cycle(3))
    names = inst.names()
    assert len(set(names)) == inst.g_prime.n and "" not in names
    for name in ("v3", "vp3", "xe2", "vpe2", "va", "vb", "ve", "e", "ep", "e1", "ep3"):
        assert name in inst.labels
    lines = dump_labels(inst).splitlines()
    assert lines[0] == "x1 0" and len(lines) == inst.g_prime.n


def test_gadget_paths():
    inst = build_reduction(path(3))
    gp, lab = inst.g_prime, inst.labels
    for tag in inst.gadgets:
        x, w, v, z = (lab[c + tag] for c in "xwvz")
        assert gp.adj[x] == (w,) and gp.adj[z] == (v,)
        assert sorted(gp.adj[w]) == sorted((x, v))


def test_edge_attachments():
    inst = build_reduction(path(3))
    gp, lab = inst.g_prime, inst.labels
    # source edge 1 is (0, 1), i.e. v1 v2
    assert set(gp.adj[lab["e1"]]) >= {lab["v1"], lab["v2"], lab["ve1"]}
    assert set(gp.adj[lab["ep1"]]) >= {lab["vp1"], lab["vp2"], lab["vpe1"]}
    assert set(gp.adj[lab["e"]]) >= {lab["va"], lab["vb"], lab["ve"]}


def test_companion_table_forms_transitive_path():
    # each path x-w-v-z on its own, with v at level q and x, w, z per the table
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    for q, (bx, bw, bz) in COMPANION_BLOCKS.items():
        blk = [bx, bw, q, bz]
        blocks = [[v for v in range(4) if blk[v] == i] for i in range(1, max(blk) + 1)]
        assert is_transitive(g, blocks)


@pytest.mark.parametrize(
    "g, coloring, k",
    [(complete(2), [1, 2], 6), (complete(3), [1, 2, 3], 8), (path(3), [1, 2, 1], 7)],
)
def test_forward_examples(g, coloring, k):
    inst = build_reduction(g)
    p = coloring_to_partition(inst, coloring)
    assert p.k == k and validate_transitive(inst.g_prime, p)
    assert is_transitive(inst.g_prime, p.blocks)


def test_round_trip_k2_exact():
    inst = build_reduction(complete(2))
    assert partition_to_coloring(inst, coloring_to_partition(inst, [1, 2])) == [1, 2]


def test_round_trip_c5():
    inst = build_reduction(cycle(5))
    out = partition_to_coloring(inst, coloring_to_partition(inst, [1, 2, 1, 2, 3]))
    assert out == [1, 2, 1, 2, 3]


def test_forward_rejects_improper():
    with pytest.raises(ReductionError):
        coloring_to_partition(build_reduction(complete(2)), [1, 1])
    with pytest.raises(ReductionError):
        coloring_to_partition(build_reduction(complete(2)), [1, 4])


def test_backward_rejects_single_block():
    inst = build_reduction(complete(2))
    with pytest.raises(ReductionError):
        partition_to_coloring(inst, OrderedPartition.from_blocks([range(inst.g_prime.n)]))


def test_backward_rejects_invalid_partition():
    inst = build_reduction(complete(2))
    p = coloring_to_partition(inst, [1, 2])
    blocks = [list(b) for b in p.blocks]
    blocks[0], blocks[-1] = blocks[-1], blocks[0]
    with pytest.raises(ReductionError):
        partition_to_coloring(inst, OrderedPartition.from_blocks(blocks))


def test_backward_on_perturbed_partition():
    # moving pendant x vertices into block 1 keeps the partition transitive
    inst = build_reduction(complete(3))
    p = coloring_to_partition(inst, [3, 1, 2])
    blk = p.assignment(inst.g_prime.n)
    for tag in inst.gadgets:
        blk[inst.labels["x" + tag]] = 1
    q = OrderedPartition.from_assignment(blk)
    assert validate_transitive(inst.g_prime, q)
    assert partition_to_coloring(inst, q) == [3, 1, 2]


def test_round_trip_edgeless_source():
    inst = build_reduction(Graph(1))
    p = coloring_to_partition(inst, [2])
    assert partition_to_coloring(inst, p) == [2]


def test_all_colorings_round_trip_small_graphs():
    rng = random.Random(4)
    for _ in range(10):
        g = gnp(rng.randint(2, 5), 0.5, rng)
        inst = build_reduction(g)
        for col in three_colorings(g):
            p = coloring_to_partition(inst, col)
            assert p.k == inst.k
            assert partition_to_coloring(inst, p) == col


@given(graphs(max_n=6))
def test_forward_whenever_colorable(g):
    col = first_three_coloring(g)
    inst = build_reduction(g)
    if col is None:
        return
    p = coloring_to_partition(inst, col)
    assert validate_transitive(inst.g_prime, p) and p.k == g.m + 5


def test_bisimplicial_examples():
    inst = build_reduction(complete(2))
    lab = inst.labels
    assert is_bisimplicial(inst.g_prime, (lab["x1"], lab["w1"]))
    assert not is_bisimplicial(cycle(6), (0, 1))
    k22 = cycle(4)
    assert all(is_bisimplicial(k22, e) for e in k22.edges())
    with pytest.raises(ValueError):
        is_bisimplicial(cycle(6), (0, 2))


def test_elimination_examples():
    p4 = path(4)
    v = verify_elimination(p4, [(1, 2)])
    assert not v and v.index == 1
    assert verify_elimination(p4, [(0, 1), (2, 3)])
    assert verify_elimination(complete(2), [(0, 1)])
    v = verify_elimination(p4, [(0, 1)])
    assert not v and v.reason == "edges remain"


@pytest.mark.parametrize("g", [complete(2), complete(3), Graph(1), cycle(5), path(4)])
def test_elimination_order_for_instances(g):
    inst = build_reduction(g)
    order = build_elimination_order(inst)
    n_gadgets = 2 * g.n + 2 * g.m + 6
    assert len(order) == 2 * n_gadgets + g.m + 1
    assert verify_elimination(inst.g_prime, order)
    bad = order[-(g.m + 1):] + order[:-(g.m + 1)]
    v = verify_elimination(inst.g_prime, bad)
    assert not v and v.index == 1


def test_edge_order_text_roundtrip():
    order = [(0, 1), (4, 2)]
    assert load_edge_order(dump_edge_order(order)) == order
    with pytest.raises(ValueError):
        load_edge_order("1 2 3\n")


@given(graphs(max_n=5), st.integers(0, 10**6))
def test_random_orders_agree_with_greedy_check(g, seed):
    # a shuffled order is accepted only if it satisfies the stepwise definition
    order = list(g.edges())
    random.Random(seed).shuffle(order)
    alive = set(range(g.n))
    ok = True
    for u, v in order:
        if u not in alive or v not in alive:
            ok = False
            break
        nu = {w for w in g.adj[u] if w in alive}
        nv = {w for w in g.adj[v] if w in alive}
        if nu & nv or any(g.has_edge(a, b) for a in nu for b in nu if a < b) or any(
            g.has_edge(a, b) for a in nv for b in nv if a < b
        ) or not all(g.has_edge(a, b) for a in nu for b in nv):
            ok = False
            break
        alive -= {u, v}
    else:
        ok = not any(g.has_edge(a, b) for a in alive for b in alive if a < b)
    assert bool(verify_elimination(g, order)) == ok
