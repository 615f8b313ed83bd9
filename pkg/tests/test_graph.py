import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tsr import errors
from tsr.graph import (
    PlainGraph,
    ThresholdGraph,
    classify,
    disjoint_union,
    fvs_to_tss,
    parse_graph,
    parse_seed_set,
    serialize_graph,
    serialize_seed_set,
    subdivide_edge,
    vc_to_tss,
)

P2 = "p tsr 2 1\nv 1 1\nv 2 1\ne 1 2\n"


def test_parse_smallest_instance():
    g = parse_graph(P2)
    assert g.n == 2 and g.m == 1
    assert g.adj[1] == (2,) and g.adj[2] == (1,)


def test_parse_fig2(fig2):
    assert fig2.n == 6 and fig2.m == 5
    assert fig2.tau[1:] == (2, 2, 2, 2, 1, 1)


def test_parse_comments_and_blank_lines():
    g = parse_graph("# hello\n\np tsr 2 1\nv 1 1\n# mid\nv 2 1\ne 1 2\n")
    assert g.n == 2


@pytest.mark.parametrize(
    "text,exc",
    [
        ("p tsr 2 1\nv 1 1\nv 2 3\ne 1 2\n", errors.ThresholdOutOfRange),
        ("p tsr 2 1\nv 1 0\nv 2 1\ne 1 2\n", errors.ThresholdOutOfRange),
        ("p tsr 2 2\nv 1 1\nv 2 1\ne 1 2\ne 2 1\n", errors.DuplicateEdge),
        ("p tsr 2 1\nv 1 1\nv 2 1\ne 1 1\n", errors.SelfLoop),
        ("p tsr 2 1\nv 1 1\nv 3 1\ne 1 2\n", errors.IdGap),
        ("p tsr 2 1\nv 1 1\nv 2 1\ne 1 5\n", errors.IdGap),
        ("p tsr 2 1\nv 1 1\ne 1 2\n", errors.MalformedLine),
        ("v 1 1\n", errors.MalformedLine),
        ("p tsr 2 1\nv 1 one\nv 2 1\ne 1 2\n", errors.MalformedLine),
        ("p tsr 3 1\nv 1 1\nv 2 1\nv 3 1\ne 1 2\n", errors.ThresholdOutOfRange),
    ],
)
def test_parse_rejects(text, exc):
    with pytest.raises(exc):
        parse_graph(text)


def test_isolated_vertex_rejected():
    # tau <= d forces every vertex to have a neighbor
    with pytest.raises(errors.ThresholdOutOfRange):
        ThresholdGraph.build(3, [(1, 2)], [1, 1, 1])


def test_degree2_threshold3_rejected():
    with pytest.raises(errors.ThresholdOutOfRange):
        ThresholdGraph.build(3, [(1, 2), (2, 3), (1, 3)], [2, 2, 3])


def test_serialize_parse_roundtrip(fig1):
    assert parse_graph(serialize_graph(fig1)) == fig1


def test_serialize_canonicalizes():
    a = parse_graph("p tsr 3 2\nv 3 1\nv 1 1\nv 2 2\ne 2 3\ne 1 2\n")
    b = parse_graph(serialize_graph(a))
    assert a == b
    assert serialize_graph(a) == serialize_graph(b)


def test_classify_star():
    g = ThresholdGraph.build(4, [(1, 2), (1, 3), (1, 4)], [1, 1, 1, 1])
    rep = classify(g)
    assert rep.is_tree and rep.is_bipartite
    assert rep.max_degree == 3
    assert rep.is_dt_graph({1, 3}, {1})


def test_classify_theta_bipartite(theta):
    rep = classify(theta)
    assert rep.is_bipartite
    assert not rep.is_tree
    assert rep.degree_set == frozenset({2, 3, 4})


def test_classify_odd_cycle_not_bipartite():
    g = ThresholdGraph.build(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)], [2] * 5)
    assert not classify(g).is_bipartite


def test_disjoint_union_two_edges():
    g1 = parse_graph(P2)
    g, shift = disjoint_union(g1, g1)
    assert g.n == 4 and g.m == 2
    assert shift == {1: 3, 2: 4}
    assert g.has_edge(3, 4)


def test_disjoint_union_fig2(fig2):
    c4 = ThresholdGraph.build(4, [(1, 2), (2, 3), (3, 4), (1, 4)], [2, 2, 2, 2])
    p2 = parse_graph(P2)
    g, _ = disjoint_union(c4, p2)
    assert g == fig2


def test_disjoint_union_bipartite_property(fig2, theta):
    g, _ = disjoint_union(fig2, theta)
    assert classify(g).is_bipartite == (
        classify(fig2).is_bipartite and classify(theta).is_bipartite
    )


def test_no_empty_operand():
    # empty graphs cannot be parsed, so disjoint_union never sees one
    with pytest.raises(errors.MalformedLine):
        parse_graph("p tsr 0 0\n")


def test_subdivide_p2():
    g, w = subdivide_edge(parse_graph(P2), (1, 2))
    assert g.n == 3 and g.m == 2 and w == 3
    assert g.tau[3] == 1
    assert g.adj[3] == (1, 2)


def test_subdivide_missing_edge():
    g = ThresholdGraph.build(3, [(1, 2), (2, 3)], [1, 2, 1])
    with pytest.raises(errors.EdgeNotFound):
        subdivide_edge(g, (1, 3))


def test_subdividing_every_edge_gives_bipartite(k4):
    g = k4
    for e in k4.edges:
        g, _ = subdivide_edge(g, e)
    assert classify(g).is_bipartite


def test_vc_to_tss_triangle():
    from tsr.activation import is_target_set

    tri = PlainGraph.build(3, [(1, 2), (2, 3), (1, 3)])
    g = vc_to_tss(tri)
    assert g.tau[1:] == (2, 2, 2)
    assert is_target_set(g, {1, 2})
    assert not is_target_set(g, {1})


def test_vc_target_sets_are_exactly_covers():
    from itertools import combinations

    from tsr.activation import is_target_set

    gp = PlainGraph.build(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])
    g = vc_to_tss(gp)
    for k in range(5):
        for combo in combinations(range(1, 5), k):
            s = set(combo)
            is_cover = all(u in s or v in s for u, v in gp.edges)
            assert is_target_set(g, s) == is_cover


def test_fvs_to_tss_cubic(k4):
    gp = PlainGraph.build(4, k4.edges)
    g = fvs_to_tss(gp)
    assert set(g.tau[1:]) == {2}


def test_fvs_degree_too_small():
    with pytest.raises(errors.DegreeTooSmall):
        fvs_to_tss(PlainGraph.build(2, [(1, 2)]))


def test_seed_set_roundtrip(fig1):
    s = parse_seed_set("s 3 1 6\n", fig1)
    assert s == {1, 3, 6}
    assert serialize_seed_set(s) == "s 1 3 6\n"
    with pytest.raises(errors.UnknownVertex):
        parse_seed_set("s 99\n", fig1)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    edges = {(draw(st.integers(1, v - 1)), v) for v in range(2, n + 1)}
    extra = draw(st.sets(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=8))
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    deg = [0] * (n + 1)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    tau = [draw(st.integers(1, deg[v])) for v in range(1, n + 1)]
    return ThresholdGraph.build(n, sorted(edges), tau)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_roundtrip_property(g):
    assert parse_graph(serialize_graph(g)) == g
