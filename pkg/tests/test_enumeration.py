import io

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs, to_nx
from oracles import labelled_graph_classes, tree_count
from idcodes.enumeration import (
    Graph6Error,
    GraphStream,
    canonical_form,
    canonical_key,
    enumerate_connected,
    enumerate_graphs,
    enumerate_trees,
    is_isomorphic,
    parse_edgelists,
    parse_graph6,
    read_graph6,
    write_edgelist,
    write_graph6,
)
from idcodes.families import a_k, complete, complete_join, cycle, path, star
from idcodes.graph import GraphError, build_graph, girth, is_connected, is_tree, relabel


def test_graph6_examples():
    assert parse_graph6("A_") == complete(2)
    assert parse_graph6("Bg") == path(3)
    assert write_graph6(path(3)) == "Bg"
    assert parse_graph6(">>graph6<<Bg\n") == path(3)
    assert parse_graph6("?").n == 0


def test_graph6_errors():
    for bad in ["", "B", "Bgg", "B\x7f", "B g"]:
        with pytest.raises(Graph6Error):
            parse_graph6(bad)


def test_graph6_long_size_field():
    G = path(70)
    text = write_graph6(G)
    assert text[0] == "~" and parse_graph6(text) == G


def test_graph6_matches_networkx():
    for G in enumerate_connected(5):
        expected = nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
        assert write_graph6(G) == expected


def test_edgelist_round_trip_and_comments():
    G = build_graph(5, [(0, 1), (2, 3)])
    assert parse_edgelists(write_edgelist(G)) == [G]
    text = "# two graphs\n0 1\n1 2  # path\n\n4\n0 1\n"
    first, second = parse_edgelists(text)
    assert first == path(3) and second.n == 4 and second.num_edges() == 1
    with pytest.raises(GraphError):
        parse_edgelists("0 1 2\n")
    with pytest.raises(GraphError):
        parse_edgelists("a b\n")


def test_read_graph6_stream():
    graphs_read = list(read_graph6(io.StringIO("Bg\n\nA_\n")))
    assert graphs_read == [path(3), complete(2)]


def test_canonical_examples():
    assert is_isomorphic(cycle(4), complete_join(a_k(1), a_k(1)))
    assert not is_isomorphic(path(4), star(4))
    assert is_isomorphic(a_k(2), path(4))
    with pytest.raises(GraphError):
        canonical_key(path(17))


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_canonical_key_invariant_under_relabelling(G, rng):
    key = canonical_key(G)
    for _ in range(5):
        perm = list(range(G.n))
        rng.shuffle(perm)
        assert canonical_key(relabel(G, perm)) == key


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_agrees_with_networkx(G, H):
    if G.n == H.n:
        assert is_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


def test_canonical_form_is_idempotent():
    for G in enumerate_connected(5):
        C = canonical_form(G)
        assert canonical_form(C) == C


def test_connected_counts_small_against_oracle():
    for n in range(1, 6):
        ours = enumerate_connected(n)
        assert len(ours) == len(labelled_graph_classes(n))
        assert all(is_connected(G) for G in ours)
        assert len({canonical_key(G) for G in ours}) == len(ours)


def test_connected_counts_known_sequence():
    assert [len(enumerate_connected(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    with pytest.raises(GraphError):
        enumerate_connected(8)


def test_all_graph_counts():
    assert [len(enumerate_graphs(n)) for n in range(0, 6)] == [1, 1, 2, 4, 11, 34]
    assert len(enumerate_graphs(5)) == len(labelled_graph_classes(5, connected=False))


def test_girth_filtered_enumeration():
    for n in range(1, 8):
        direct = [G for G in enumerate_connected(n) if (girth(G) or 99) >= 5]
        pruned = enumerate_connected(n, min_girth=5)
        assert sorted(map(canonical_key, direct)) == sorted(map(canonical_key, pruned))
    assert len(enumerate_connected(8, min_girth=5)) == 47


def test_tree_counts():
    expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
    for n in range(1, 13):
        trees = enumerate_trees(n)
        assert len(trees) == expected[n - 1]
        assert all(is_tree(T) for T in trees)
        assert len({canonical_key(T) for T in trees}) == len(trees)
    for n in range(1, 8):
        assert tree_count(n) == expected[n - 1]
    assert {canonical_key(T) for T in enumerate_trees(4)} == {canonical_key(path(4)), canonical_key(star(4))}
    with pytest.raises(GraphError):
        enumerate_trees(13)


def test_graph6_round_trip_on_enumerated():
    for n in range(1, 7):
        for G in enumerate_connected(n):
            assert parse_graph6(write_graph6(G)) == G


def test_stream_filters_and_scope(tmp_path):
    stream = GraphStream.connected(range(3, 6), twin_free=True)
    assert all(G.n >= 3 for G in stream)
    assert "twin_free=True" in stream.scope()
    path_file = tmp_path / "g.g6"
    path_file.write_text("Bg\nCF\nA_\n")
    from_file = list(GraphStream.from_graph6_file(path_file))
    assert [G.n for G in from_file] == [3, 4, 2]
    assert len(list(GraphStream.from_graph6_file(path_file, identifiable=True))) == 2
    edge_file = tmp_path / "g.txt"
    edge_file.write_text("0 1\n1 2\n\n0 1\n")
    assert len(list(GraphStream.from_edgelist_file(edge_file, trees_only=True))) == 2
    assert list(GraphStream.of([path(3)]).filtered(min_girth=5)) == [path(3)]
    assert list(GraphStream.of([cycle(4)]).filtered(min_girth=5)) == []
