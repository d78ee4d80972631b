import pytest

from mostar import (
    MAX_VERTICES,
    MalformedRecord,
    OutOfRange,
    SelfLoop,
    build_graph,
    format_edge_list,
    parse_edge_list,
    path,
)


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.m == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_single_vertex():
    g = build_graph(1, [])
    assert g.n == 1
    assert g.m == 0


def test_duplicate_edges_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g == build_graph(3, [(0, 1), (1, 2)])
    assert g.m == 2


def test_edge_order_irrelevant():
    a = build_graph(4, [(0, 1), (2, 3), (1, 2)])
    b = build_graph(4, [(1, 2), (0, 1), (3, 2)])
    assert a == b
    assert hash(a) == hash(b)


def test_out_of_range_order():
    with pytest.raises(OutOfRange):
        build_graph(0, [])
    with pytest.raises(OutOfRange):
        build_graph(MAX_VERTICES + 1, [])


def test_bad_vertex_index():
    with pytest.raises(OutOfRange):
        build_graph(3, [(0, 3)])


def test_self_loop():
    with pytest.raises(SelfLoop):
        build_graph(3, [(1, 1)])


def test_degrees_and_neighbors():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert g.degrees() == (3, 1, 1, 1)
    assert sorted(g.neighbors(0)) == [1, 2, 3]
    assert g.has_edge(0, 2) and not g.has_edge(1, 2)


def test_relabel_roundtrip():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    perm = [3, 1, 0, 2]
    inv = [perm.index(i) for i in range(4)]
    assert g.relabel(perm).relabel(inv) == g


def test_relabel_rejects_non_permutation():
    with pytest.raises(OutOfRange):
        build_graph(2, [(0, 1)]).relabel([0, 0])


def test_is_connected():
    assert build_graph(3, [(0, 1), (1, 2)]).is_connected()
    assert not build_graph(3, [(0, 1)]).is_connected()
    assert build_graph(1, []).is_connected()


def test_edge_list_roundtrip():
    g = path(5)
    assert parse_edge_list(format_edge_list(g)) == [g]


def test_edge_list_multiple_records():
    text = "n 2\n0 1\nn 3\n0 1\n1 2\n"
    graphs = parse_edge_list(text)
    assert [g.n for g in graphs] == [2, 3]


def test_edge_list_malformed():
    with pytest.raises(MalformedRecord):
        parse_edge_list("0 1\n")  # edge before header
    with pytest.raises(MalformedRecord):
        parse_edge_list("n x\n")
    with pytest.raises(MalformedRecord):
        parse_edge_list("n 3\n0 1 2\n")
