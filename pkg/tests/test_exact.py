import random

import pytest
from hypothesis import given

from oracles import grundy_by_orderings, grundy_dp, is_transitive, transitivity_dp
from strategies import graphs
from transitivity.exact import (
    OrderedPartition,
    PartitionError,
    dump_partition,
    find_transitive_partition,
    grundy_exact,
    is_independent_partition,
    level_caps,
    load_partition,
    transitivity_exact,
    validate_transitive,
)
from transitivity.generators import (
    biclique_minus_edge,
    census,
    census_upto,
    complete,
    complete_bipartite,
    cycle,
    empty,
    gnp,
    path,
    random_tree,
    star,
)
from transitivity.graph import Graph


def test_census_sizes():
    # unlabeled graphs on n vertices: OEIS A000088
    assert [len(census(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_validate_c4_example():
    # x1=0, y1=1, x2=2, y2=3
    g = Graph(4, [(0, 1), (0, 3), (2, 1), (2, 3)])
    assert validate_transitive(g, OrderedPartition.from_blocks([[2, 3], [1], [0]]))


def test_validate_k2():
    assert validate_transitive(complete(2), OrderedPartition.from_blocks([[0], [1]]))


def test_validate_isolated_vertex_rejected():
    g = Graph(3, [(0, 1)])
    v = validate_transitive(g, OrderedPartition.from_blocks([[0], [1, 2]]))
    assert not v and v.violation == (1, 2, 2)


def test_validate_reports_least_violation():
    g = path(4)
    v = validate_transitive(g, OrderedPartition.from_blocks([[3], [0], [1], [2]]))
    # (1,2,0): 0 has no neighbor in {3}; this is least among all failures
    assert v.violation == (1, 2, 0)


@pytest.mark.parametrize(
    "blocks",
    [
        [[0, 1], [1, 2]],  # overlap
        [[0], [1]],  # vertex 2 missing
        [[0, 1, 2], []],  # empty block
        [[0, 1, 2, 3]],  # out of range
    ],
)
def test_validate_malformed(blocks):
    with pytest.raises(PartitionError):
        validate_transitive(path(3), OrderedPartition(tuple(tuple(b) for b in blocks)))


@given(graphs(max_n=7))
def test_validate_matches_literal_definition(g):
    rng = random.Random(g.m * 31 + g.n)
    for _ in range(5):
        k = rng.randint(1, max(1, g.n))
        blk = [rng.randint(1, k) for _ in range(g.n)]
        if sorted(set(blk)) != list(range(1, k + 1)):
            continue
        p = OrderedPartition.from_assignment(blk)
        assert bool(validate_transitive(g, p)) == is_transitive(g, p.blocks)


def test_partition_text_roundtrip():
    p = OrderedPartition.from_blocks([[3, 0], [2], [1]])
    assert dump_partition(p) == "0 3\n2\n1\n"
    assert load_partition(dump_partition(p)) == p
    with pytest.raises(PartitionError):
        load_partition("0 x\n")


def test_merge_lowest_keeps_transitive():
    g = complete(4)
    p = OrderedPartition.from_blocks([[0], [1], [2], [3]])
    q = p.merge_lowest()
    assert q.blocks == ((0, 1), (2,), (3,))
    assert validate_transitive(g, q)


@pytest.mark.parametrize(
    "g, want",
    [
        (Graph(1), 1),
        (complete_bipartite(3, 3), 4),
        (path(4), 3),
        (empty(5), 1),
        (complete(5), 5),
        (cycle(4), 3),
        (star(3), 2),
        (biclique_minus_edge(4), 5),
        (Graph(0), 0),
    ],
)
def test_transitivity_examples(g, want):
    res = transitivity_exact(g)
    assert res.value == want
    assert res.witness.k == want
    if g.n:
        assert validate_transitive(g, res.witness)


@pytest.mark.parametrize("g, want", [(complete(3), 3), (path(4), 3), (cycle(4), 2)])
def test_grundy_examples(g, want):
    assert grundy_by_orderings(g) == want
    res = grundy_exact(g)
    assert res.value == want
    assert validate_transitive(g, res.witness) and is_independent_partition(g, res.witness)


def test_exact_matches_dp_on_census():
    for g in census_upto(7):
        res = transitivity_exact(g)
        assert res.value == transitivity_dp(g), g.edges()
        assert validate_transitive(g, res.witness)


def test_grundy_matches_orderings_on_census():
    for g in census_upto(6):
        assert grundy_exact(g).value == grundy_by_orderings(g) == grundy_dp(g)


def test_exact_matches_dp_random():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randint(8, 10)
        g = gnp(n, rng.choice([0.2, 0.35, 0.5, 0.7]), rng)
        assert transitivity_exact(g).value == transitivity_dp(g)
        assert grundy_exact(g).value == grundy_dp(g)


@given(graphs(max_n=8))
def test_limit_caps_value(g):
    full = transitivity_exact(g).value
    for lim in range(1, full + 2):
        res = transitivity_exact(g, limit=lim)
        assert res.value == min(lim, full)
        if g.n:
            assert validate_transitive(g, res.witness)


@given(graphs(max_n=8))
def test_feasibility_downward_closed(g):
    tr = transitivity_exact(g).value
    for k in range(1, g.n + 1):
        p = find_transitive_partition(g, k)
        assert (p is not None) == (k <= tr)
        if p is not None:
            assert p.k == k and validate_transitive(g, p)


@given(graphs(max_n=8))
def test_level_caps_are_upper_bounds(g):
    if not g.n:
        return
    caps = level_caps(g)
    assert all(c <= g.degree(v) + 1 for v, c in enumerate(caps))
    blk = transitivity_exact(g).witness.assignment(g.n)
    assert all(blk[v] <= caps[v] for v in range(g.n))


def test_trees_grundy_equals_transitivity():
    rng = random.Random(7)
    for _ in range(40):
        t = random_tree(rng.randint(1, 10), rng)
        assert transitivity_exact(t).value == grundy_exact(t).value


def test_bound_guard():
    with pytest.raises(ValueError):
        transitivity_exact(path(17))
    assert transitivity_exact(path(17), bound=17).value == 3
