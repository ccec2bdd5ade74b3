import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import is_isomorphic_nx
from trigraph.errors import InvalidGraph
from trigraph.generators import friendship, paley9, triangular_snake
from trigraph.graph import (
    Graph,
    are_isomorphic,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    format_edge_list,
    graph_from_edge_list,
    induced_subgraph,
    parse_edge_list,
    path_graph,
    relabel,
    to_dot,
    validate_certificate,
)
from trigraph.star import star_graph


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return graph_from_edge_list(n, chosen)


def test_k3_from_edge_list():
    g = graph_from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert g.m == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_duplicates_collapse():
    assert graph_from_edge_list(2, [(0, 1), (1, 0)]).m == 1


def test_paley9_pairs():
    g = paley9()
    assert (g.n, g.m) == (9, 18)
    assert set(g.degrees()) == {4}


@pytest.mark.parametrize("pairs", [[(0, 3)], [(-1, 0)], [(2, 2)]])
def test_bad_edges_rejected(pairs):
    with pytest.raises(InvalidGraph):
        graph_from_edge_list(3, pairs)


def test_isolated_vertices_representable():
    g = graph_from_edge_list(5, [(0, 1)])
    assert g.n == 5 and g.degree(4) == 0


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degrees()) == 2 * g.m


def test_induced_subgraph_k3():
    sub, labels = induced_subgraph(complete_graph(3), {0, 1})
    assert sub.edges == ((0, 1),) and labels == [0, 1]


def test_induced_subgraph_relabels():
    sub, labels = induced_subgraph(path_graph(5), [4, 2, 3])
    assert labels == [2, 3, 4]
    assert sub.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("v", range(9))
def test_paley9_neighborhoods_are_matchings(v):
    g = paley9()
    sub, _ = induced_subgraph(g, g.neighbors(v))
    assert sub.n == 4 and sub.m == 2 and set(sub.degrees()) == {1}


def test_friendship2_center_neighborhood():
    g = friendship(2)
    sub, _ = induced_subgraph(g, g.neighbors(0))
    assert sub.m == 2 and set(sub.degrees()) == {1}


def test_induced_subgraph_out_of_range():
    with pytest.raises(InvalidGraph):
        induced_subgraph(complete_graph(3), {5})


@given(graphs())
def test_induced_subgraph_whole_vertex_set(g):
    sub, labels = induced_subgraph(g, range(g.n))
    assert sub == g and labels == list(range(g.n))


def test_isomorphism_under_random_relabel():
    rng = random.Random(5)
    g = paley9()
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = relabel(g, perm)
    cert = are_isomorphic(g, h)
    assert cert is not None and validate_certificate(g, h, cert)


def test_star_of_paley9_is_k33():
    h = star_graph(paley9()).star
    cert = are_isomorphic(h, complete_bipartite(3, 3))
    assert cert is not None and validate_certificate(h, complete_bipartite(3, 3), cert)


def test_star_of_snake_is_p5():
    h = star_graph(triangular_snake(5)).star
    cert = are_isomorphic(h, path_graph(5))
    assert cert is not None and validate_certificate(h, path_graph(5), cert)


def test_non_isomorphic_same_degrees():
    # C6 and two triangles: 2-regular on 6 vertices
    two_triangles = graph_from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert are_isomorphic(cycle_graph(6), two_triangles) is None


def test_empty_graphs_isomorphic():
    assert are_isomorphic(empty_graph(0), empty_graph(0)) == {}
    assert are_isomorphic(empty_graph(3), empty_graph(3)) is not None


@settings(max_examples=300)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_agrees_with_networkx(g, h):
    cert = are_isomorphic(g, h)
    assert (cert is not None) == is_isomorphic_nx(g, h)
    if cert is not None:
        assert validate_certificate(g, h, cert)


@given(graphs(), st.randoms(use_true_random=False))
def test_isomorphism_reflexive_and_symmetric(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = relabel(g, perm)
    forward = are_isomorphic(g, h)
    backward = are_isomorphic(h, g)
    assert forward is not None and backward is not None
    assert validate_certificate(g, h, forward) and validate_certificate(h, g, backward)


def test_validate_certificate_rejects_bad_map():
    g = path_graph(3)
    assert not validate_certificate(g, g, {0: 1, 1: 0, 2: 2})


def test_edge_list_roundtrip():
    g = paley9()
    text = format_edge_list(g, ["paley"])
    assert text.startswith("# paley\n9 18\n")
    assert parse_edge_list(text) == g


def test_parse_comments_and_blank_lines():
    text = "# a triangle\n3 3\n0 1  # first\n\n1 2\n2 0\n"
    assert parse_edge_list(text) == complete_graph(3)


@pytest.mark.parametrize(
    "text",
    ["", "3 2\n0 1\n", "3 1\n0 x\n", "2 1\n0 5\n", "3 1\n1 1\n"],
)
def test_parse_errors(text):
    with pytest.raises(InvalidGraph):
        parse_edge_list(text)


def test_dot_export():
    assert to_dot(path_graph(3)) == "graph G {\n    0;\n    1;\n    2;\n    0 -- 1;\n    1 -- 2;\n}\n"


def test_graph_is_hashable_and_frozen():
    g = complete_graph(3)
    assert hash(g) == hash(complete_graph(3))
    with pytest.raises(AttributeError):
        g.n = 4  # type: ignore[misc]
    assert isinstance(g, Graph)
