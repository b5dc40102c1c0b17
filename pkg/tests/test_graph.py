import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domgame import (
    Graph,
    ParseError,
    enumerate_labeled_graphs,
    gen_caterpillar,
    gen_cycle,
    gen_gnp_isolate_free,
    gen_path,
    gen_random_tree,
    gen_star,
    parse_edge_list,
    write_edge_list,
)
from oracles import is_connected, isolate_free_labeled_count


def degree_sequence(g):
    return tuple(g.degree(v) for v in range(g.n))


def test_parse_p2():
    g = parse_edge_list("2 1\n0 1")
    assert (g.n, g.edge_count) == (2, 1)
    assert g.edges == ((0, 1),)


def test_parse_p3():
    g = parse_edge_list("3 2\n0 1\n1 2")
    assert degree_sequence(g) == (1, 2, 1)


def test_parse_c4():
    g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0")
    assert degree_sequence(g) == (2, 2, 2, 2)


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("banana", 1),
    ("2 1", 2),                    # missing edge line
    ("3 2\n0 1\n0 3", 3),          # out of range
    ("3 1\n1 1", 2),               # self-loop
    ("3 2\n0 1\n1 0", 3),          # duplicate edge
    ("2 1\n0 1\nrest", 3),         # trailing garbage
])
def test_parse_errors_name_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line


def test_roundtrip_exact():
    for g in [gen_path(7), gen_cycle(9), gen_star(6), gen_caterpillar(3, [1, 0, 2])]:
        assert parse_edge_list(write_edge_list(g)) == g


@given(n=st.integers(2, 12), seed=st.integers(0, 2**31))
@settings(max_examples=40)
def test_roundtrip_random_trees(n, seed):
    g = gen_random_tree(n, seed)
    assert parse_edge_list(write_edge_list(g)) == g


def test_gen_path_degrees():
    assert degree_sequence(gen_path(5)) == (1, 2, 2, 2, 1)


def test_gen_cycle_degrees():
    g = gen_cycle(4)
    assert g.edge_count == 4
    assert all(g.degree(v) == 2 for v in range(4))


def test_gen_star():
    g = gen_star(4)
    assert g.degree(0) == 3
    assert sorted(degree_sequence(g)) == [1, 1, 1, 3]


@pytest.mark.parametrize("fn, arg", [(gen_path, 1), (gen_star, 1), (gen_cycle, 2)])
def test_generator_minimums(fn, arg):
    with pytest.raises(ValueError):
        fn(arg)


def test_caterpillar_star_is_p3():
    g = gen_caterpillar(1, [2])
    assert (g.n, g.edge_count) == (3, 2)
    assert sorted(degree_sequence(g)) == [1, 1, 2]


def test_caterpillar_bare_spine():
    assert gen_caterpillar(3, [0, 0, 0]) == gen_path(3)


def test_caterpillar_two_legs():
    g = gen_caterpillar(2, [1, 1])
    assert (g.n, g.edge_count) == (4, 3)
    assert sum(1 for v in range(g.n) if g.degree(v) == 1) == 2


def test_caterpillar_argument_errors():
    with pytest.raises(ValueError):
        gen_caterpillar(2, [1])
    with pytest.raises(ValueError):
        gen_caterpillar(1, [0])


def test_random_tree_small_shapes():
    assert gen_random_tree(2, 99) == gen_path(2)
    g = gen_random_tree(3, 5)
    assert sorted(degree_sequence(g)) == [1, 1, 2]


def test_random_tree_is_deterministic():
    assert gen_random_tree(8, 42) == gen_random_tree(8, 42)
    assert gen_random_tree(8, 42) != gen_random_tree(8, 43)


@given(n=st.integers(2, 14), seed=st.integers(0, 2**31))
@settings(max_examples=60)
def test_random_tree_properties(n, seed):
    g = gen_random_tree(n, seed)
    assert g.edge_count == n - 1
    assert is_connected(g)
    assert g.min_degree >= 1


def test_gnp_extremes():
    assert gen_gnp_isolate_free(2, 1.0, 3) == gen_path(2)
    k5 = gen_gnp_isolate_free(5, 1.0, 3)
    assert k5.edge_count == 10


@given(n=st.integers(2, 16), seed=st.integers(0, 2**31),
       p=st.floats(0.05, 1.0, allow_nan=False))
@settings(max_examples=60)
def test_gnp_isolate_free(n, seed, p):
    g = gen_gnp_isolate_free(n, p, seed)
    assert g.min_degree >= 1
    assert g == gen_gnp_isolate_free(n, p, seed)


def test_gnp_argument_errors():
    with pytest.raises(ValueError):
        gen_gnp_isolate_free(5, 0.0, 1)
    with pytest.raises(ValueError):
        gen_gnp_isolate_free(5, 0.5, -1)


def test_enumerate_n2():
    assert list(enumerate_labeled_graphs(2)) == [gen_path(2)]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumerate_counts_match_inclusion_exclusion(n):
    graphs = list(enumerate_labeled_graphs(n))
    assert len(graphs) == isolate_free_labeled_count(n)
    assert len(set(graphs)) == len(graphs)
    assert all(g.min_degree >= 1 for g in graphs)


def test_enumerate_range_check():
    with pytest.raises(ValueError):
        list(enumerate_labeled_graphs(1))
    with pytest.raises(ValueError):
        list(enumerate_labeled_graphs(7))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    assert not Graph.from_edges(3, [(0, 1)]).is_isolate_free()
