import itertools
import json
from math import comb

import pytest

from youngflip.errors import BudgetExceeded, ParseError, UnknownFormat
from youngflip.flipgraph import (
    build_flip_graph,
    catalan,
    count_faces,
    diagonals_of,
    embedding_check,
    export_graph,
    face_numbers,
    flip_graph_from_json,
    parse_adjacency_json,
    transpose_edge_defect,
)
from youngflip.triangulation import crosses, enumerate_triangulations, iter_flips, lambda_map


def test_pentagon():
    g = build_flip_graph(3)
    assert set(g.vertices) == {(), (1,), (2,), (1, 1), (2, 1)}
    assert len(g.edges) == 5
    assert set(g.degrees().values()) == {2}


def test_point_and_counts():
    g = build_flip_graph(1)
    assert g.vertices == ((),) and not g.edges
    g4 = build_flip_graph(4)
    assert (len(g4.vertices), len(g4.edges)) == (14, 21)


@pytest.mark.parametrize("n", range(1, 10))
def test_regular_connected(n):
    g = build_flip_graph(n)
    assert len(g.vertices) == catalan(n)
    assert all(d == n - 1 for d in g.degrees().values())
    assert len(g.edges) == (n - 1) * catalan(n) // 2
    assert g.is_connected()


def test_budget():
    with pytest.raises(BudgetExceeded):
        build_flip_graph(10)
    with pytest.raises(BudgetExceeded):
        count_faces(8, 0)


@pytest.mark.parametrize("n", range(2, 8))
def test_isomorphic_to_triangulation_flips(n):
    g = build_flip_graph(n)
    tri_edges = set()
    for t in enumerate_triangulations(n + 2):
        for _, s in iter_flips(t):
            p, q = sorted((lambda_map(t), lambda_map(s)))
            tri_edges.add((p, q))
    assert tri_edges == set(g.edges)


@pytest.mark.parametrize("n", range(1, 9))
def test_embedding(n):
    assert embedding_check(n)


def brute_faces(n, k):
    diags = diagonals_of(n + 3)
    return sum(
        1
        for sub in itertools.combinations(diags, n - k)
        if not any(crosses(a, b) for a, b in itertools.combinations(sub, 2))
    )


def kirkman_cayley(n, k):
    m, j = n + 3, n - k
    return comb(m - 3, j) * comb(m + j - 1, j) // (j + 1)


@pytest.mark.parametrize("n", range(0, 5))
def test_faces_brute_force(n):
    assert face_numbers(n) == [brute_faces(n, k) for k in range(n + 1)]


@pytest.mark.parametrize("n", range(0, 8))
def test_faces_closed_form(n):
    f = face_numbers(n)
    assert f == [kirkman_cayley(n, k) for k in range(n + 1)]
    assert f[0] == catalan(n + 1)
    assert f[n] == 1
    if n:
        assert f[n - 1] == (n + 3) * n // 2


def test_faces_pentagon():
    assert [count_faces(2, k) for k in range(3)] == [5, 5, 1]


def test_transpose_defect():
    assert transpose_edge_defect(2) == set()
    d3 = transpose_edge_defect(3)
    # transpose swaps [2] and [1,1]: [] -- [2] and [1] -- [1,1] are lost
    assert d3 == {((), (2,)), ((1,), (1, 1))}
    smallest = min(n for n in range(1, 8) if transpose_edge_defect(n))
    assert smallest == 3


def test_edge_list_format():
    text = export_graph(build_flip_graph(3), "edge-list").decode()
    lines = text.splitlines()
    assert lines[0] == "# flip_graph_n3 vertices=5 edges=5"
    assert lines[1:] == ["[] -- [1]", "[] -- [2]", "[1] -- [1,1]", "[1,1] -- [2,1]", "[2] -- [2,1]"]
    empty = export_graph(build_flip_graph(1), "edge-list").decode().splitlines()
    assert empty == ["# flip_graph_n1 vertices=1 edges=0"]


def test_dot_like():
    text = export_graph(build_flip_graph(2), "dot-like").decode()
    assert text == 'graph flip_graph_n2 {\n  "[]";\n  "[1]";\n  "[]" -- "[1]";\n}\n'


@pytest.mark.parametrize("n", [1, 3, 5])
def test_json_round_trip(n):
    g = build_flip_graph(n)
    data = export_graph(g, "adjacency-json")
    assert json.loads(data)["schema"] == "youngflip/graph@1"
    back = flip_graph_from_json(data)
    assert back.vertices == g.vertices and back.edges == g.edges
    assert export_graph(back, "adjacency-json") == data


def test_export_is_deterministic():
    g = build_flip_graph(5)
    for fmt in ("edge-list", "dot-like", "adjacency-json"):
        assert export_graph(g, fmt) == export_graph(build_flip_graph(5), fmt)


def test_export_errors():
    with pytest.raises(UnknownFormat):
        export_graph(build_flip_graph(2), "graphml")
    with pytest.raises(ParseError):
        parse_adjacency_json('{"schema": "other"}')
