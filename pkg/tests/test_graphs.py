import pytest

from walkzeta.graphs import (
    ArcSet,
    Graph,
    GraphFormatError,
    adjacency_matrix,
    betti,
    build_arcs,
    degree_info,
    degree_matrix,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    validate,
)
from walkzeta.experiments import (
    builtin_corpus,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    triangle_with_doubled_edge,
)


def _edge_set(g):
    return {frozenset(e) for e in g.edges}


def test_graph_invariants():
    g = Graph(3, ((0, 1), (1, 2)))
    assert g.n == 3 and g.m == 2
    with pytest.raises(GraphFormatError):
        Graph(2, ((0, 0),))
    with pytest.raises(GraphFormatError):
        Graph(2, ((0, 2),))
    with pytest.raises(GraphFormatError):
        Graph(0, ())


def test_parse_edge_list_basic():
    g = parse_edge_list("0 1")
    assert g.n == 2 and g.edges == ((0, 1),)
    g = parse_edge_list("0 1\n1 2\n2 0")
    assert g.n == 3 and g.m == 3


def test_parse_edge_list_declared_count_and_comments():
    text = "# a triangle plus an isolated vertex\nn 4\n0 1\n1 2  # back\n\n2 0\n"
    g = parse_edge_list(text)
    assert g.n == 4 and g.m == 3
    assert degree_info(g).degrees == (2, 2, 2, 0)


def test_parse_edge_list_multigraph():
    g = parse_edge_list("0 1\n0 1")
    assert g.m == 2 and not validate(g).simple


def test_parse_edge_list_errors():
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 0")  # loop
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 a")
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 1 2")
    with pytest.raises(GraphFormatError):
        parse_edge_list("-1 2")
    with pytest.raises(GraphFormatError):
        parse_edge_list("")
    with pytest.raises(GraphFormatError):
        parse_edge_list("n 2\n0 5")
    with pytest.raises(GraphFormatError):
        parse_edge_list("n 0")


def test_parse_graph6_fixtures():
    k4 = parse_graph6("C~")
    assert k4.n == 4 and _edge_set(k4) == _edge_set(complete_graph(4))
    p3 = parse_graph6("Bg")
    assert p3.n == 3 and p3.edges == ((0, 1), (1, 2))
    k1 = parse_graph6("@")
    assert k1.n == 1 and k1.m == 0
    # optional format header is accepted
    assert parse_graph6(">>graph6<<C~").n == 4


def test_parse_graph6_errors():
    with pytest.raises(GraphFormatError):
        parse_graph6("")
    with pytest.raises(GraphFormatError):
        parse_graph6("C~~")  # extra byte
    with pytest.raises(GraphFormatError):
        parse_graph6("C")  # missing bit bytes
    with pytest.raises(GraphFormatError):
        parse_graph6("B" + chr(30))  # byte below the graph6 range
    with pytest.raises(GraphFormatError):
        parse_graph6("Bx")  # nonzero padding: triangle needs only 3 bits
    with pytest.raises(GraphFormatError):
        parse_graph6("?")  # zero-vertex graph


def test_parse_graph6_triangle():
    # triangle on 3 vertices: bits 111 + 000 padding -> 56 + 63
    g = parse_graph6("B" + chr(63 + 0b111000))
    assert _edge_set(g) == _edge_set(cycle_graph(3))


def test_encode_graph6_roundtrip():
    for entry in builtin_corpus():
        if not validate(entry.graph).simple:
            continue
        g = entry.graph
        back = parse_graph6(encode_graph6(g))
        assert back.n == g.n and _edge_set(back) == _edge_set(g), entry.name
    assert encode_graph6(complete_graph(2)) == "A_"
    assert encode_graph6(complete_graph(4)) == "C~"


def test_encode_graph6_matches_networkx():
    nx = pytest.importorskip("networkx")
    for g in (complete_graph(5), cycle_graph(7), petersen_graph()):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        expected = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert encode_graph6(g) == expected
        mine = parse_graph6(expected)
        assert _edge_set(mine) == _edge_set(g)


def test_encode_graph6_rejects_multigraph():
    with pytest.raises(ValueError):
        encode_graph6(triangle_with_doubled_edge())


def test_validate_fixtures():
    rep = validate(complete_graph(2))
    assert rep.connected and rep.simple and not rep.md2
    rep = validate(cycle_graph(3))
    assert rep.connected and rep.simple and rep.md2
    rep = validate(triangle_with_doubled_edge())
    assert rep.connected and not rep.simple and rep.md2
    disconnected = Graph(4, ((0, 1), (2, 3)))
    assert not validate(disconnected).connected


def test_build_arcs_fixtures():
    arcs = build_arcs(complete_graph(2))
    assert arcs.arcs == ((0, 1), (1, 0))
    assert arcs.inverse(0) == 1 and arcs.inverse(1) == 0
    arcs = build_arcs(cycle_graph(3))
    assert len(arcs) == 6
    assert all(arcs.inverse(i) == i + 3 for i in range(3))
    arcs = build_arcs(path_graph(3))
    assert [arcs.origin(a) for a in range(4)] == [0, 1, 1, 2]
    assert [arcs.terminus(a) for a in range(4)] == [1, 2, 0, 1]


def test_arc_involution_over_corpus():
    for entry in builtin_corpus()[:12]:
        arcs = build_arcs(entry.graph)
        assert len(arcs) == 2 * entry.graph.m
        for a in range(len(arcs)):
            inv = arcs.inverse(a)
            assert arcs.inverse(inv) == a
            assert arcs.origin(inv) == arcs.terminus(a)
            assert arcs.terminus(inv) == arcs.origin(a)


def test_vertex_matrices():
    k2 = complete_graph(2)
    assert adjacency_matrix(k2).data == [[0, 1], [1, 0]]
    assert degree_matrix(k2).data == [[1, 0], [0, 1]]
    assert betti(k2) == 0
    c3 = cycle_graph(3)
    assert adjacency_matrix(c3).data == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert degree_matrix(c3).data == [[2, 0, 0], [0, 2, 0], [0, 0, 2]]
    assert betti(c3) == 1
    assert betti(complete_graph(4)) == 3
    dt = triangle_with_doubled_edge()
    assert adjacency_matrix(dt)[0, 1] == 2
    assert degree_info(dt).degrees == (3, 3, 2)
    with pytest.raises(ValueError):
        betti(Graph(4, ((0, 1), (2, 3))))


def test_degree_info():
    info = degree_info(petersen_graph())
    assert info.regular_degree == 3 and info.min_degree == 3
    info = degree_info(path_graph(4))
    assert info.regular_degree is None and info.min_degree == 1
    # handshake: degree sum is twice the edge count
    for entry in builtin_corpus()[:20]:
        info = degree_info(entry.graph)
        assert sum(info.degrees) == 2 * entry.graph.m
