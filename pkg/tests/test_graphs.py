import pytest
from hypothesis import given
import hypothesis.strategies as st

from errors import RejectedInputError, ResourceCapError
from graphs.cayley import cayley_ball, finite_cayley_graph
from graphs.constructions import (complete_graph, cube_graph, cycle_graph, path_graph, power_graph,
                                  product_graph)
from graphs.export import from_adjacency_text, to_adjacency_text, to_dot
from graphs.graph import FiniteGraph
from groups import make_abelian, make_cyclic, make_free_product


def test_ball_in_the_integers_is_a_path(z_std):
    ball = cayley_ball(z_std, 2)
    assert sorted(x for (x,) in ball.elements) == [-2, -1, 0, 1, 2]
    assert ball.graph.edge_count == 4
    assert ball.graph.is_tree()
    assert ball.layers == (0, 1, 1, 2, 2)


def test_ball_in_the_plane_is_a_star(z2_std):
    ball = cayley_ball(z2_std, 1)
    assert len(ball) == 5
    assert ball.graph.edge_count == 4


def test_ball_with_chords():
    ball = cayley_ball(make_abelian(1, [], [[1], [2]]), 2)
    assert sorted(x for (x,) in ball.elements) == list(range(-4, 5))
    assert (2,) in ball and (5,) not in ball
    with pytest.raises(RejectedInputError, match="outside the ball"):
        ball.vertex_of((5,))


def test_ball_respects_the_vertex_cap(monkeypatch, f2):
    monkeypatch.setenv('LAMPLIGHTER_CAP', '50')
    with pytest.raises(ResourceCapError) as info:
        cayley_ball(f2, 4)
    assert info.value.cap == 50


def test_finite_cayley_graphs():
    assert finite_cayley_graph(make_cyclic(8, [1])).is_cycle()
    edge = finite_cayley_graph(make_cyclic(2, [1]))
    assert edge.edge_count == 1 and not edge.is_cycle()
    k4 = finite_cayley_graph(make_cyclic(4, [1, 2]))
    assert k4.edge_count == 6


def test_octagons_in_the_free_product(octagons):
    ball = cayley_ball(octagons, 4)
    graph = ball.graph
    assert graph.is_connected()
    assert graph.degree(ball.vertex_of(())) == 3


def test_power_graph():
    assert power_graph(path_graph(4), 3).edge_count == 6
    squared = power_graph(cycle_graph(8), 2)
    assert all(squared.degree(v) == 4 for v in range(8))
    assert power_graph(cycle_graph(5), 1).adjacency == cycle_graph(5).adjacency


def test_products_and_cubes():
    assert product_graph(path_graph(2), path_graph(2)).is_cycle()
    assert product_graph(path_graph(3), path_graph(3)).edge_count == 12
    assert cube_graph([2, 4]).edge_count == 10
    assert cube_graph([4, 3]).edge_count == 17
    assert cube_graph([2, 2]).is_cycle()
    assert cube_graph([5]).is_tree()
    assert cube_graph([4, 3]).label(0) == (1, 1)


def test_bipartition():
    assert cycle_graph(6).is_bipartite()
    assert not cycle_graph(5).is_bipartite()
    colour = cube_graph([3, 3]).bipartition()
    assert colour.count(0) == 5 and colour[0] == 0


def test_dot_export_is_deterministic():
    text = to_dot(cycle_graph(4), name='C4')
    assert text.splitlines()[0] == 'graph "C4" {'
    assert '  "0" -- "1";' in text
    assert text.count(' -- ') == 4
    assert text == to_dot(cycle_graph(4), name='C4')


def test_dot_export_names_group_elements(octagons):
    ball = cayley_ball(octagons, 1)
    text = to_dot(ball.graph, namer=octagons.format)
    assert '"e" -- "b"' in text


@st.composite
def graphs(draw, max_vertices=9):
    n = draw(st.integers(1, max_vertices))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3 * n))
    return FiniteGraph.from_edges(n, edges, labels=range(n))


@given(graphs())
def test_adjacency_text_parses_back(graph):
    parsed = from_adjacency_text(to_adjacency_text(graph))
    assert parsed.adjacency == graph.adjacency
    assert parsed.check()


@given(graphs())
def test_distances_are_symmetric(graph):
    dist = graph.distance_matrix
    assert (dist == dist.T).all()
    if graph.is_connected():
        for v in range(graph.vertex_count):
            path = graph.shortest_path(0, v)
            assert len(path) - 1 == dist[0, v]


def test_distances_in_a_disconnected_graph():
    graph = FiniteGraph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert not graph.is_connected()
    assert graph.bfs_distances(0) == [0, 1, 2, -1, -1]
    assert graph.bfs_parents(2) == [1, 2, 2, -1, -1]
    assert graph.distance_matrix[3, 4] == 1 and graph.distance_matrix[0, 4] == -1
    assert graph.shortest_path(0, 2) == [0, 1, 2]
    with pytest.raises(RejectedInputError, match="no path"):
        graph.shortest_path(0, 4)


def test_malformed_adjacency_text():
    with pytest.raises(RejectedInputError, match="line 1"):
        from_adjacency_text("0 1 2\n")
    with pytest.raises(RejectedInputError, match="numbered"):
        from_adjacency_text("0: 2\n2: 0\n")


def test_complete_graph():
    assert complete_graph(4).edge_count == 6
    assert make_free_product(make_cyclic(4, [1], 'b'), make_cyclic(4, [1], 'c')).name == 'Z/4*Z/4'
