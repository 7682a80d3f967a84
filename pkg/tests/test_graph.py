import gzip
import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from admissibility import Graph, ParseError, Partition, degeneracy, load_edge_list, read_edge_list, write_edge_list
from admissibility.generators import complete_graph, path_graph, petersen_graph, star_graph
from admissibility.reference import exact_adm


@st.composite
def small_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


def load(text):
    return load_edge_list(io.BytesIO(text.encode()))


def test_load_merges_duplicates():
    g = load("0 1\n1 2\n2 1\n")
    assert (g.n, g.m) == (3, 2)
    assert sorted(g.edges()) == [(0, 1), (1, 2)]


def test_load_comments_and_relabel():
    g = load("a b\n# c\nb c\n")
    assert (g.n, g.m) == (3, 2)
    assert g.labels == ["a", "b", "c"]


def test_load_drops_self_loop():
    g = load("5 5\n")
    assert (g.n, g.m) == (1, 0)
    assert g.labels == ["5"]


def test_load_percent_comment_and_extra_columns():
    g = load("% header\n1 2 0.5\n2 3 7 8\n\n")
    assert (g.n, g.m) == (3, 2)


def test_load_reports_line_number():
    with pytest.raises(ParseError) as err:
        load("0 1\n# fine\nlonely\n")
    assert err.value.line == 3


@pytest.mark.parametrize("text", ["", "# only a comment\n", "\n\n"])
def test_load_empty_input(text):
    with pytest.raises(ParseError):
        load(text)


def test_load_gzip(tmp_path):
    path = tmp_path / "g.txt.gz"
    path.write_bytes(gzip.compress(b"0 1\n1 2\n"))
    g = read_edge_list(path)
    assert (g.n, g.m) == (3, 2)


def test_graph_adjacency_sorted_and_symmetric():
    g = Graph(4, [(3, 0), (0, 1), (2, 0), (1, 0), (2, 2)])
    assert g.adj[0] == (1, 2, 3)
    assert g.m == 3
    assert all(u in g.adjset[v] for u in range(4) for v in g.adj[u])


def test_graph_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


@pytest.mark.parametrize(
    "g, d",
    [(complete_graph(5), 4), (path_graph(5), 1), (petersen_graph(), 3), (Graph(3), 0), (Graph(0), 0)],
)
def test_degeneracy_examples(g, d):
    assert degeneracy(g)[0] == d


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_degeneracy_ordering_witnesses_value(g):
    d, order = degeneracy(g)
    assert sorted(order) == list(range(g.n))
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        assert sum(pos[u] < pos[v] for u in g.adj[v]) <= d


@settings(max_examples=100, deadline=None)
@given(small_graphs())
def test_degeneracy_equals_one_admissibility(g):
    assert degeneracy(g)[0] == exact_adm(g, 1).value


def test_move_to_right_path():
    part = Partition(path_graph(5))
    part.move_to_right(2)
    assert part.nl[1] == {0} and part.nr[1] == {2}


def test_move_to_right_star_center():
    g = star_graph(4)
    part = Partition(g)
    part.move_to_right(0)
    assert all(part.nr[leaf] == {0} and not part.nl[leaf] for leaf in range(1, 5))


def test_move_all_of_k5():
    g = complete_graph(5)
    part = Partition(g)
    for v in range(5):
        part.move_to_right(v)
    assert all(not part.nl[v] for v in range(5))
    assert part.left() == []


def test_move_twice_is_an_error():
    part = Partition(path_graph(3))
    part.move_to_right(1)
    with pytest.raises(ValueError):
        part.move_to_right(1)


@settings(max_examples=100, deadline=None)
@given(small_graphs(), st.data())
def test_partition_neighbour_counts(g, data):
    part = Partition(g)
    for v in data.draw(st.permutations(range(g.n))):
        part.move_to_right(v)
        for w in range(g.n):
            assert len(part.nl[w]) + len(part.nr[w]) == g.degree(w)
            assert part.nl[w] | part.nr[w] == g.adjset[w]


@settings(max_examples=100, deadline=None)
@given(small_graphs())
def test_round_trip_is_identity(g):
    buf = io.StringIO()
    write_edge_list(g, buf)
    again = load(buf.getvalue())
    assert again == g
    buf2 = io.StringIO()
    write_edge_list(again, buf2)
    assert load(buf2.getvalue()) == again
