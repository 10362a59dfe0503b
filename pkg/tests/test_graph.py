"""Edge-set container: strict updates, canonical keys, bounds."""

import pytest

from lfdyn.graph import (
    DuplicateInsert,
    Graph,
    GraphError,
    MissingDelete,
    edge_key,
)


def test_edge_key_canonicalizes():
    assert edge_key(4, 2) == (2, 4)
    assert edge_key(2, 4) == (2, 4)
    with pytest.raises(GraphError):
        edge_key(3, 3)


def test_insert_and_has_edge_are_orientation_free():
    g = Graph(5)
    assert g.insert(3, 1) == (1, 3)
    assert g.has_edge(1, 3) and g.has_edge(3, 1)
    assert g.m == 1
    assert g.degree(1) == g.degree(3) == 1
    assert g.neighbors(1) == {3}


def test_double_insert_rejected():
    g = Graph(4)
    g.insert(0, 1)
    with pytest.raises(DuplicateInsert):
        g.insert(1, 0)
    assert g.m == 1


def test_delete_missing_rejected():
    g = Graph(4)
    with pytest.raises(MissingDelete):
        g.delete(0, 1)
    g.insert(0, 1)
    assert g.delete(1, 0) == (0, 1)
    assert g.m == 0
    with pytest.raises(MissingDelete):
        g.delete(0, 1)


def test_vertex_bounds_checked():
    g = Graph(3)
    with pytest.raises(GraphError):
        g.insert(0, 3)
    with pytest.raises(GraphError):
        g.has_edge(-1, 1)
    with pytest.raises(GraphError):
        g.degree(7)


def test_negative_vertex_count_rejected():
    with pytest.raises(GraphError):
        Graph(-1)


def test_edges_iterates_canonical_forms():
    g = Graph(6, [(5, 0), (2, 1), (3, 4)])
    assert sorted(g.edges()) == [(0, 5), (1, 2), (3, 4)]


def test_copy_is_independent():
    g = Graph(4, [(0, 1)])
    h = g.copy()
    h.insert(2, 3)
    assert g.m == 1 and h.m == 2
    assert not g.has_edge(2, 3)


def test_empty_graph_edge_iteration():
    assert list(Graph(0).edges()) == []
    assert list(Graph(3).edges()) == []
