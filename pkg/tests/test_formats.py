import pytest

from rankred.clique import build_clique_gadget, preprocess_clique_instance
from rankred.errors import ParseError
from rankred.formats import (
    digest,
    read_bipartite,
    read_clique_gadget,
    read_graph,
    read_index_set,
    read_partition,
    read_tedge_gadget,
    write_bipartite,
    write_certificate,
    write_clique_gadget,
    write_graph,
    write_partition,
    write_tedge_gadget,
)
from rankred.graphs import BipartiteGraph, Graph
from rankred.tedge import build_t_edge_gadget

from support import random_bipartite, random_graph


def test_graph_round_trip(rng):
    for _ in range(20):
        g = random_graph(rng, rng.randint(0, 8), 0.4)
        assert read_graph(write_graph(g)) == g


def test_graph_comments_and_blanks():
    text = "# triangle\n\np 3 3\n0 1  # first\n1 2\n\n0 2\n"
    assert read_graph(text) == Graph.complete(3)


def test_bipartite_round_trip(rng):
    for _ in range(20):
        g = random_bipartite(rng, rng.randint(1, 5), rng.randint(1, 5), 0.5)
        assert read_bipartite(write_bipartite(g)) == g


def test_partition_round_trip(three_block_model):
    assert read_partition(write_partition(three_block_model)) == three_block_model


def test_certificate_round_trip():
    text = write_certificate({3, 1, 2}, coverage=5)
    assert text == "set 1 2 3\ncoverage 5\n"
    assert read_index_set("set 1 2 3\n") == {1, 2, 3}
    assert read_index_set("4 5\n6\n") == {4, 5, 6}


def test_tedge_gadget_round_trip():
    gad = build_t_edge_gadget(Graph.cycle(4), 2)
    back = read_tedge_gadget(write_tedge_gadget(gad))
    assert back.graph == gad.graph and back.t == 2 and back.source == gad.source


def test_tedge_gadget_tampered():
    text = write_tedge_gadget(build_t_edge_gadget(Graph.complete(3), 1))
    lines = text.splitlines()
    edge_line = next(i for i, l in enumerate(lines) if l and l[0].isdigit())
    lines[edge_line] = "0 13"
    with pytest.raises(ParseError):
        read_tedge_gadget("\n".join(lines) + "\n")


def test_clique_gadget_round_trip():
    h, _ = preprocess_clique_instance(Graph.complete(6), 6)
    gad = build_clique_gadget(h, 6)
    text = write_clique_gadget(gad)
    assert "k 42 ell 6" in text.splitlines()
    back = read_clique_gadget(text)
    assert back.g == gad.g and back.k == 42


def test_digest_stable():
    assert digest("abc") == digest(b"abc")
    assert len(digest("abc")) == 16


@pytest.mark.parametrize(
    "text, line",
    [
        ("q 3 1\n0 1\n", 1),
        ("p 3 1\n0 x\n", 2),
        ("p 3 1\n0 7\n", 2),
        ("p 3 1\n\n1 1\n", 3),
        ("p 3 2\n0 1\n", 2),
        ("p 3 2\n0 1\n1 0\n", 3),
        ("p 3 1\n0 1 2\n", 2),
    ],
)
def test_graph_parse_errors(text, line):
    with pytest.raises(ParseError, match=f"^line {line}: ") as info:
        read_graph(text)
    assert info.value.line == line


@pytest.mark.parametrize(
    "text, line",
    [
        ("blocks 2\n", 1),
        ("partition 1\n1 0 0\n", 2),
        ("partition 2\n1 0 1\n1 1 2\n", 3),
        ("partition 1\n3 0 1\n", 2),
        ("partition 2\n1 0\n", 2),
    ],
)
def test_partition_parse_errors(text, line):
    with pytest.raises(ParseError, match=f"^line {line}: "):
        read_partition(text)


def test_bipartite_edge_must_cross():
    with pytest.raises(ParseError, match="cross"):
        read_bipartite("p 4 1\nbip 2\n0 1\n")
