import math

import pytest
from hypothesis import given, settings, strategies as st

from graphchomp import (
    Complex, Graph, InvalidSpec, JohnsonParams, KneserParams,
    MultipartiteSpec, ThresholdSpec, TooLarge, clique_skeleton,
    complete_graph, johnson_graph, join_graph, kneser_graph, ksubsets_colex,
    multipartite_graph, parse_family_spec, subset_label, threshold_graph,
)
from graphchomp.families import colex_rank

import reference


def test_ksubsets_colex_order_and_count():
    subs = ksubsets_colex(5, 2)
    assert len(subs) == 10
    assert subs[0] == (0, 1)
    assert subs[-1] == (3, 4)
    # colex: ranked by largest differing element
    assert all(colex_rank(s) == i for i, s in enumerate(subs))


def test_subset_label_is_one_based():
    assert subset_label((0, 2)) == "{1,3}"
    assert subset_label((2, 0)) == "{1,3}"


def test_complete_graph():
    g = complete_graph(4)
    assert g.vertex_count == 4
    assert len(g.edges()) == 6
    assert g.vertex_labels == ("1", "2", "3", "4")
    assert complete_graph(0).vertex_count == 0
    with pytest.raises(InvalidSpec):
        complete_graph(-1)


def test_kneser_petersen_shape():
    g = kneser_graph(KneserParams(5, 2, 0))
    assert g.vertex_count == 10
    assert len(g.edges()) == 15
    degrees = [len(a) for a in g.adjacency()]
    assert degrees == [3] * 10


def test_kneser_degenerate_cases():
    assert kneser_graph(KneserParams(3, 5, 0)).vertex_count == 0
    # l = -1 prohibits every edge
    g = kneser_graph(KneserParams(4, 2, -1))
    assert g.vertex_count == 6 and not g.edges()
    # l >= k - but subsets distinct - gives the complete graph
    g = kneser_graph(KneserParams(4, 2, 1))
    assert len(g.edges()) == math.comb(6, 2)


def test_kneser_complement_isomorphism():
    # KG(5,3,1) and the Petersen graph KG(5,2,0) are complements of
    # each other's parameters; same graph up to relabeling
    a = kneser_graph(KneserParams(5, 2, 0))
    b = kneser_graph(KneserParams(5, 3, 1))
    assert reference.are_isomorphic(
        a.vertex_count, a.edges(), b.vertex_count, b.edges())


def test_johnson_shapes():
    g = johnson_graph(JohnsonParams(4, 2))
    assert g.vertex_count == 6
    # J(n,k) is k(n-k)-regular
    assert all(len(a) == 4 for a in g.adjacency())
    with pytest.raises(InvalidSpec):
        johnson_graph(JohnsonParams(2, 3))


def test_johnson_n1_is_complete():
    g = johnson_graph(JohnsonParams(4, 1))
    k4 = complete_graph(4)
    assert reference.are_isomorphic(
        g.vertex_count, g.edges(), k4.vertex_count, k4.edges())


def test_multipartite_edges():
    g = multipartite_graph(MultipartiteSpec((2, 3)))
    assert g.vertex_count == 5
    assert len(g.edges()) == 6
    assert g.vertex_labels[0] == "1.1"
    with pytest.raises(InvalidSpec):
        multipartite_graph(MultipartiteSpec((2, 0)))


def test_multipartite_all_ones_is_complete():
    g = multipartite_graph(MultipartiteSpec((1, 1, 1, 1)))
    k4 = complete_graph(4)
    assert reference.are_isomorphic(
        g.vertex_count, g.edges(), k4.vertex_count, k4.edges())


def test_threshold_graph_attachments():
    g = threshold_graph(ThresholdSpec(3, (2,)))
    assert g.vertex_count == 4
    assert g.vertex_labels == ("u1", "u2", "u3", "v1")
    assert g.has_edge(3, 0) and g.has_edge(3, 1) and not g.has_edge(3, 2)
    # attachment 0 is an isolated vertex
    g0 = threshold_graph(ThresholdSpec(2, (0,)))
    assert g0.adjacency()[2] == set()
    with pytest.raises(InvalidSpec):
        threshold_graph(ThresholdSpec(2, (3,)))


def test_join_graph():
    j = join_graph(complete_graph(2), complete_graph(1))
    k3 = complete_graph(3)
    assert reference.are_isomorphic(
        j.vertex_count, j.edges(), k3.vertex_count, k3.edges())
    # join of two edgeless pairs is C_4, not K_4
    e2 = Graph.from_edges(2, [])
    j = join_graph(e2, e2)
    assert len(j.edges()) == 4


def test_clique_skeleton_small_s():
    g = complete_graph(4)
    assert clique_skeleton(g, 2) is g
    assert clique_skeleton(g, 0).face_count == 0
    assert clique_skeleton(g, 1).face_count == 4


def test_clique_skeleton_full_complete_graph():
    # all cliques of K_4: every nonempty subset
    cx = clique_skeleton(complete_graph(4), 4)
    assert cx.face_count == 2 ** 4 - 1
    assert cx.has_face((0, 1, 2, 3))


def test_clique_skeleton_truncates():
    cx = clique_skeleton(complete_graph(4), 3)
    assert cx.face_count == 2 ** 4 - 1 - 1
    assert not cx.has_face((0, 1, 2, 3))
    assert cx.has_face((1, 2, 3))


def test_clique_skeleton_finds_only_cliques():
    # square plus a diagonal: exactly two triangles
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    cx = clique_skeleton(g, 4)
    triangles = [f for f in cx.faces if len(f) == 3]
    assert triangles == [(0, 1, 2), (0, 2, 3)]
    assert not [f for f in cx.faces if len(f) == 4]


def test_face_cap_applies_to_families():
    # C(40,3) vertices trip the cap before any edges are enumerated
    with pytest.raises(TooLarge):
        kneser_graph(KneserParams(40, 3, 0), face_cap=4096)
    with pytest.raises(TooLarge):
        clique_skeleton(complete_graph(13), 13)


def test_parse_family_spec_round_trips():
    for text in ["kneser:5,2,0", "kneser:5,2,-1", "johnson:6,3",
                 "multipartite:3+2+1", "threshold:4;2,3", "complete:6",
                 "skeleton(s=3):complete:4",
                 "skeleton(s=4):kneser:4,2,0"]:
        spec = parse_family_spec(text)
        assert spec.describe() == text
        spec.build()


def test_parse_family_spec_whitespace():
    spec = parse_family_spec("  kneser: 5 , 2 , 0 ")
    assert spec.describe() == "kneser:5,2,0"


def test_parse_family_spec_errors():
    for bad in ["petersen", "kneser:5,2", "kneser:a,b,c", "johnson:4",
                "multipartite:", "threshold:4", "threshold:4,1;2",
                "skeleton(s=-1):complete:3", "frobnicate:1,2"]:
        with pytest.raises(InvalidSpec):
            parse_family_spec(bad)


def test_skeleton_spec_builds_complex():
    cx = parse_family_spec("skeleton(s=3):complete:4").build()
    assert isinstance(cx, Complex)
    assert cx.face_count == 14


@given(st.integers(0, 6), st.integers(0, 6))
@settings(max_examples=30, deadline=None)
def test_ksubsets_count_property(n, k):
    assert len(ksubsets_colex(n, k)) == (math.comb(n, k) if k <= n else 0)
