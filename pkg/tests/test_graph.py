import pytest
from hypothesis import given

from oracles import is_chain_graph_bruteforce
from strategies import graphs, relabeled
from transitivity.generators import census_upto, complete, complete_bipartite, cycle, path
from transitivity.graph import (
    Bipartition,
    ChainOrdering,
    Graph,
    GraphFormatError,
    NotChain,
    OddCycle,
    dump_graph,
    is_chain_ordering,
    load_graph,
    read_graph,
    recognize_bipartite,
    recognize_chain,
    write_graph,
)


def test_parse_single_edge():
    g = load_graph("2 1\n0 1")
    assert g.n == 2 and g.edges() == [(0, 1)]


def test_parse_k1():
    g = load_graph("1 0")
    assert g.n == 1 and g.m == 0


def test_parse_c4():
    assert load_graph("4 4\n0 1\n1 2\n2 3\n3 0") == cycle(4)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3",
        "a b",
        "2 1\n0 2",
        "2 1\n1 1",
        "3 2\n0 1\n1 0",
        "3 2\n0 1",
        "3 1\n0 1 2",
        "3 1\n0 x",
        "-1 0",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(GraphFormatError):
        load_graph(text)


@given(graphs())
def test_dump_load_roundtrip(g):
    assert load_graph(dump_graph(g)) == g
    g.check()


def test_file_roundtrip(tmp_path):
    g = complete_bipartite(2, 3)
    write_graph(g, tmp_path / "g.el")
    assert read_graph(tmp_path / "g.el") == g
    assert (tmp_path / "g.el").read_bytes().startswith(b"5 6\n0 2\n")


def test_masks_and_degree():
    g = path(4)
    assert g.masks == (0b10, 0b101, 0b1010, 0b100)
    assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]
    assert g.max_degree() == 2 and Graph(0).max_degree() == 0


def test_induced_subgraph():
    h, old = cycle(5).induced_subgraph([4, 0, 1])
    assert old == [0, 1, 4]
    assert h.edges() == [(0, 1), (0, 2)]


@given(relabeled())
def test_relabel_preserves_degrees(case):
    g, h, perm = case
    assert sorted(map(len, g.adj)) == sorted(map(len, h.adj))
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_bipartite_c4():
    b = recognize_bipartite(cycle(4))
    assert b == Bipartition(frozenset({0, 2}), frozenset({1, 3}))


def test_bipartite_triangle_refused():
    r = recognize_bipartite(complete(3))
    assert isinstance(r, OddCycle) and r.vertices == (0, 1, 2)


def test_bipartite_edgeless_tiebreak():
    assert recognize_bipartite(Graph(3)) == Bipartition(frozenset({0, 1, 2}), frozenset())


@given(graphs(max_n=9))
def test_bipartite_verdict(g):
    r = recognize_bipartite(g)
    if isinstance(r, Bipartition):
        assert r.is_valid_for(g)
    else:
        cyc = r.vertices
        assert len(cyc) % 2 == 1
        # the witness set induces a subgraph containing an odd closed walk: every
        # vertex has at least two neighbors inside it
        inside = set(cyc)
        assert all(sum(w in inside for w in g.adj[v]) >= 2 for v in cyc)


def test_chain_k23():
    g = complete_bipartite(2, 3)
    c = recognize_chain(g, recognize_bipartite(g))
    assert c == ChainOrdering((0, 1), (2, 3, 4))


def test_chain_p4():
    # x1=0, x2=1, y1=2, y2=3 with edges x1y1, x1y2, x2y1
    g = Graph(4, [(0, 2), (0, 3), (1, 2)])
    c = recognize_chain(g, recognize_bipartite(g))
    assert c == ChainOrdering((0, 1), (2, 3))


def test_chain_c6_refused():
    g = cycle(6)
    assert isinstance(recognize_chain(g, recognize_bipartite(g)), NotChain)


def test_chain_rejects_invalid_bipartition():
    with pytest.raises(ValueError):
        recognize_chain(path(3), Bipartition(frozenset({0, 1}), frozenset({2})))


def test_chain_recognition_matches_bruteforce_on_census():
    for g in census_upto(6):
        b = recognize_bipartite(g)
        if isinstance(b, OddCycle):
            assert not is_chain_graph_bruteforce(g)
            continue
        c = recognize_chain(g, b)
        if isinstance(c, NotChain):
            assert not is_chain_graph_bruteforce(g)
            assert not (set(g.adj[c.u]) <= set(g.adj[c.v]) or set(g.adj[c.v]) <= set(g.adj[c.u]))
        else:
            assert is_chain_graph_bruteforce(g)
            assert is_chain_ordering(g, c)
