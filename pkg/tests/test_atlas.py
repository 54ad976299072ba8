"""Named constructions and the vertex-splitting operation."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from detourlab import (
    VERTEX_CAP,
    Graph,
    are_isomorphic,
    canonical_cert,
    coxeter,
    coxeter_split,
    delete_vertex,
    detour_order,
    flower_snark,
    girth,
    graph6_encode,
    graph_from_edges,
    is_connected,
    j_split,
    petersen,
    pr,
    split_vertex,
)
from detourlab.errors import InvalidParameter, InvalidVertex, OrderCapExceeded

from conftest import graphs


# ---------------------------------------------------------------------------
# split_vertex


@given(graphs(min_n=1, max_n=8), st.data())
def test_split_vertex_invariants(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    k = g.degree(x)
    h = split_vertex(g, x)
    assert h.n == g.n - 1 + k
    assert h.size == g.size
    # the new vertices are leaves (or isolated never: exactly degree 1)
    for i in range(k):
        assert h.degree(g.n - 1 + i) == 1
    # degrees of untouched vertices are preserved
    old = sorted(g.degree(v) for v in range(g.n) if v != x)
    new = sorted(h.degree(v) for v in range(g.n - 1))
    assert old == new


def test_split_degree_zero_is_deletion():
    g = graph_from_edges(4, [(1, 2), (2, 3)])
    assert split_vertex(g, 0) == delete_vertex(g, 0)


def test_split_degree_one_is_relabeling():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    h = split_vertex(g, 0)
    assert h.n == g.n and h.size == g.size
    assert are_isomorphic(g, h)


def test_split_worked_example():
    # triangle with a pendant: split the degree-3 vertex
    g = graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    h = split_vertex(g, 0)
    # remaining 1,2,3 -> 0,1,2; new leaves 3,4,5 attached to 0,1,2
    assert h.n == 6 and h.size == 4
    assert sorted(h.edges()) == [(0, 1), (0, 3), (1, 4), (2, 5)]


def test_split_vertex_bounds():
    g = graph_from_edges(3, [(0, 1)])
    with pytest.raises(InvalidVertex):
        split_vertex(g, 3)
    # splitting must not push the order above the cap (33 - 1 + 32 = 64 is
    # still fine; one more leaf is not)
    star = graph_from_edges(33, [(0, i) for i in range(1, 33)])
    assert split_vertex(star, 0).n == VERTEX_CAP
    bigger = graph_from_edges(34, [(0, i) for i in range(1, 34)])
    with pytest.raises(OrderCapExceeded):
        split_vertex(bigger, 0)


# ---------------------------------------------------------------------------
# named graphs: structural facts


def test_petersen_structure():
    g = petersen().graph
    assert g.n == 10 and g.size == 15
    assert g.degree_sequence() == (3,) * 10
    assert girth(g).value == 5
    assert is_connected(g)


def test_pr_structure():
    named = pr()
    g = named.graph
    assert g.n == 12 and g.size == 15
    assert girth(g).value == 5
    assert detour_order(g).tau == 10
    assert named.provenance == {"base": "petersen", "split": 0}


def test_pr_split_choice_is_immaterial():
    want = canonical_cert(pr().graph)
    for x in range(10):
        assert canonical_cert(split_vertex(petersen().graph, x)) == want


@pytest.mark.parametrize("k,girth_value", [(3, 3), (5, 5), (7, 6), (9, 6)])
def test_flower_snark_structure(k, girth_value):
    g = flower_snark(k).graph
    assert g.n == 4 * k
    assert g.size == 6 * k
    assert g.degree_sequence() == (3,) * (4 * k)
    assert is_connected(g)
    assert girth(g).value == girth_value


def test_flower_snark_rejects_bad_k():
    with pytest.raises(InvalidParameter):
        flower_snark(4)
    with pytest.raises(InvalidParameter):
        flower_snark(2)
    with pytest.raises(InvalidParameter):
        flower_snark(-5)
    with pytest.raises(OrderCapExceeded):
        flower_snark(17)


def test_flower_snark_16_vertices_at_cap_boundary():
    # k=15 gives order 60, inside the cap; k=17 is checked above
    g = flower_snark(15).graph
    assert g.n == 60


def test_j_split_structure():
    named = j_split(7, 0)
    g = named.graph
    assert g.n == 30 and g.size == 42
    assert named.provenance["base"] == "flower-snark-7"
    with pytest.raises(InvalidParameter):
        j_split(3, 0)
    with pytest.raises(InvalidVertex):
        j_split(5, 20)


def test_coxeter_structure():
    g = coxeter().graph
    assert g.n == 28 and g.size == 42
    assert g.degree_sequence() == (3,) * 28
    assert is_connected(g)
    assert girth(g).value == 7


def test_coxeter_split_structure():
    named = coxeter_split(5)
    g = named.graph
    assert g.n == 30 and g.size == 42
    assert girth(g).value == 7
    assert named.provenance == {"base": "coxeter", "split": 5}
    with pytest.raises(InvalidVertex):
        coxeter_split(28)


def test_coxeter_splits_pairwise_isomorphic():
    """The base is vertex-transitive, so every split gives the same class."""
    certs = {canonical_cert(coxeter_split(x).graph).data for x in range(28)}
    assert len(certs) == 1


def test_constructions_are_deterministic():
    assert graph6_encode(petersen().graph) == graph6_encode(petersen().graph)
    assert flower_snark(7).graph == flower_snark(7).graph
    assert coxeter().graph == coxeter().graph
    assert pr().graph == pr().graph


def test_names_describe_parameters():
    assert petersen().name == "petersen"
    assert pr().name == "pr"
    assert flower_snark(9).name == "flower-snark-9"
    assert j_split(5, 3).name == "flower-snark-5-split-3"
    assert coxeter().name == "coxeter"
    assert coxeter_split(2).name == "coxeter-split-2"
