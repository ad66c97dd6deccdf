import itertools
from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from f1zeta import corpus
from f1zeta.loose_graph import (
    GraphError,
    GraphParseError,
    LooseGraph,
    NotATreeError,
    NotConnectedError,
)


@st.composite
def loose_graphs(draw):
    n = draw(st.integers(0, 5))
    names = [f"v{i}" for i in range(n)]
    pairs = list(itertools.combinations(names, 2))
    full = draw(
        st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
    ) if pairs else []
    loose = draw(st.lists(st.sampled_from(names), max_size=4)) if names else []
    free = draw(st.integers(0, 2))
    return LooseGraph(names, list(full) + [(v,) for v in loose] + [()] * free)


def triangle():
    return LooseGraph.parse("edge a b\nedge b c\nedge a c\n")


# -- parsing ----------------------------------------------------------------


def test_parse_triangle():
    g = triangle()
    assert g.vertices == frozenset("abc")
    assert len(g.full_edges) == 3
    assert g == LooseGraph("abc", [("a", "b"), ("b", "c"), ("a", "c")])


def test_parse_free_loose_edge():
    g = LooseGraph.parse("loose2\n")
    assert g.vertices == frozenset()
    assert len(g.free_edges) == 1


def test_parse_comments_blank_lines_and_vertex_lines():
    g = LooseGraph.parse("# a comment\n\nvertex z\nedge a b # inline\nloose a\n")
    assert g.vertices == frozenset({"a", "b", "z"})
    assert g.degree("a") == 2
    assert g.degree("z") == 0


def test_parse_loop_rejected():
    with pytest.raises(GraphError, match="loop"):
        LooseGraph.parse("edge a a\n")


def test_parse_duplicate_edge_rejected():
    with pytest.raises(GraphError, match="repeated"):
        LooseGraph.parse("edge a b\nedge b a\n")


def test_parse_malformed_line_reports_line_number():
    with pytest.raises(GraphParseError) as info:
        LooseGraph.parse("edge a b\nfrob x\n")
    assert info.value.line == 2
    with pytest.raises(GraphParseError):
        LooseGraph.parse("edge a\n")
    with pytest.raises(GraphParseError, match="invalid id"):
        LooseGraph.parse("edge a b!\n")


def test_construction_validates():
    with pytest.raises(GraphError):
        LooseGraph([], [("a", "a")])
    with pytest.raises(GraphError):
        LooseGraph([], [("a", "b"), ("b", "a")])
    with pytest.raises(GraphError):
        LooseGraph(["bad id"], [])
    # several loose edges at one vertex are allowed
    g = LooseGraph(["u"], [("u",), ("u",)])
    assert g.degree("u") == 2


def test_render_is_canonical_and_round_trips():
    g = LooseGraph(["b", "a"], [("b", "a"), ("a",), ()])
    text = g.render()
    assert text.splitlines() == ["vertex a", "vertex b", "edge a b", "loose a", "loose2"]
    assert LooseGraph.parse(text) == g


def test_round_trip_on_random_corpus():
    rng = Random(99)
    for _ in range(100):
        g = corpus.random_loose_graph(rng, max_ambient=7)
        assert LooseGraph.parse(g.render()) == g


# -- ambient completion -------------------------------------------------------


def test_ambient_of_loose_star_is_a_star():
    g = corpus.loose_star(3)
    amb = g.ambient_completion()
    assert len(amb.added_vertices) == 3
    assert amb.graph.degree("u") == 3
    for w in amb.added_vertices:
        assert amb.graph.degree(w) == 1
        assert amb.graph.neighbors(w) == frozenset({"u"})


def test_ambient_of_ordinary_graph_is_itself():
    g = corpus.complete_graph(4)
    amb = g.ambient_completion()
    assert amb.added_vertices == frozenset()
    assert amb.graph == g


def test_ambient_of_free_edge_is_an_edge_on_two_added_vertices():
    g = LooseGraph((), [()])
    amb = g.ambient_completion()
    assert len(amb.added_vertices) == 2
    a, b = sorted(amb.added_vertices)
    assert amb.graph.neighbors(a) == frozenset({b})


def test_ambient_vertex_count(corpus5):
    for g in corpus5[::7]:
        amb = g.ambient_completion()
        expected = len(g.loose_edges) + 2 * len(g.free_edges)
        assert len(amb.added_vertices) == expected
        assert amb.graph.reduce().restrict(g.vertices).full_edges == g.full_edges


def test_ambient_names_avoid_collisions():
    g = LooseGraph(["_e0"], [("_e0",)])
    amb = g.ambient_completion()
    assert "_e0" in amb.original_vertices
    assert len(amb.added_vertices) == 1


# -- resolution ---------------------------------------------------------------


def test_resolve_edge_on_edge_graph():
    g = LooseGraph(["a", "b"], [("a", "b")])
    r = g.resolve_edge(0)
    assert len(r.full_edges) == 0
    assert sorted(e.ends for e in r.loose_edges) == [("a",), ("b",)]


def test_resolve_preserves_degrees_and_adds_one_edge():
    g = corpus.diamond()
    r = g.resolve_edge(0)
    assert r.degrees() == g.degrees()
    assert len(r.edges) == len(g.edges) + 1
    assert len(r.full_edges) == len(g.full_edges) - 1


def test_resolve_diamond_keeps_neighbors_and_hangs_loose_edges():
    g = corpus.diamond()
    uv = next(e.tag for e in g.full_edges if e.ends == ("u", "v"))
    r = g.resolve_edge(uv)
    assert r.neighbors("u") == frozenset({"w1", "w2"})
    assert r.neighbors("v") == frozenset({"w1", "w2"})
    assert sorted(e.ends for e in r.loose_edges) == [("u",), ("v",)]
    # dropping the loose edges leaves the 4-cycle u, w1, v, w2
    cycle = LooseGraph(
        ["u", "v", "w1", "w2"],
        [("u", "w1"), ("w1", "v"), ("v", "w2"), ("w2", "u")],
    )
    assert r.reduce() == cycle


def test_resolve_errors():
    g = LooseGraph(["a"], [("a",)])
    with pytest.raises(GraphError, match="loose"):
        g.resolve_edge(0)
    with pytest.raises(GraphError, match="unknown"):
        g.resolve_edge(17)


# -- balls, restriction, reduction ---------------------------------------------


def test_ball_examples():
    t = triangle()
    assert t.ball("a", 1) == frozenset("abc")
    assert t.ball("a", 0) == frozenset("a")
    p = corpus.path_graph(3)
    assert p.ball("p0", 1) == frozenset({"p0", "p1"})
    d = corpus.diamond()
    assert d.ball("u", 1) == frozenset({"u", "v", "w1", "w2"})
    with pytest.raises(GraphError):
        t.ball("zz", 1)


def test_restrict_triangle_to_edge():
    g = triangle().restrict({"a", "b"})
    assert len(g.full_edges) == 1
    assert sorted(e.ends for e in g.loose_edges) == [("a",), ("b",)]
    assert g.degree("a") == 2


def test_restrict_to_everything_is_identity():
    g = corpus.diamond()
    assert g.restrict(g.vertices) == g


def test_restrict_star_center_keeps_degree():
    star = LooseGraph(
        ["c", "l1", "l2", "l3"], [("c", "l1"), ("c", "l2"), ("c", "l3")]
    )
    g = star.restrict({"c"})
    assert g.vertices == frozenset({"c"})
    assert len(g.loose_edges) == 3
    assert g.degree("c") == 3


def test_restrict_ball_preserves_degree(corpus5):
    for g in corpus5[::11]:
        for v in g.vertices:
            assert g.restrict(g.ball(v, 1)).degree(v) == g.degree(v)


def test_reduce():
    star = corpus.loose_star(4)
    assert star.reduce() == LooseGraph(["u"], [])
    g = corpus.diamond()
    assert g.reduce() == g
    assert g.restrict(g.vertices).reduce() == g.reduce()


# -- spanning trees and cliques ---------------------------------------------


def test_spanning_tree_of_triangle():
    tree = triangle().spanning_tree()
    assert len(tree) == 2


def test_spanning_tree_of_tree_is_everything():
    p = corpus.path_graph(5)
    assert p.spanning_tree() == frozenset(e.tag for e in p.edges)


def test_spanning_tree_breadth_first_from_smallest_vertex():
    k4 = corpus.complete_graph(4)
    tree = k4.spanning_tree()
    ends = sorted(k4.edge(t).ends for t in tree)
    assert ends == [("v0", "v1"), ("v0", "v2"), ("v0", "v3")]


def test_spanning_tree_requires_connectivity():
    g = LooseGraph(["a", "b"], [])
    with pytest.raises(NotConnectedError):
        g.spanning_tree()


def test_cliques_of_triangle():
    cliques = triangle().cliques()
    assert cliques == [
        ("a",), ("b",), ("c",),
        ("a", "b"), ("a", "c"), ("b", "c"),
        ("a", "b", "c"),
    ]


def test_cliques_of_path_and_free_edge():
    assert corpus.path_graph(3).cliques() == [
        ("p0",), ("p1",), ("p2",), ("p0", "p1"), ("p1", "p2"),
    ]
    assert LooseGraph((), [()]).cliques() == []


# -- tree statistics -----------------------------------------------------------


def test_tree_stats_path():
    stats = corpus.path_graph(3).tree_stats()
    assert stats.degree_counts == ((2, 1),)
    assert stats.interior_excess == 0
    assert stats.endpoints == 2


def test_tree_stats_single_edge():
    stats = LooseGraph(["a", "b"], [("a", "b")]).tree_stats()
    assert stats.degree_counts == ()
    assert stats.interior_excess == -1
    assert stats.endpoints == 2


def test_tree_stats_counts_loose_edges():
    stats = corpus.loose_star(3).tree_stats()
    assert stats.degree_counts == ((3, 1),)
    assert stats.interior_excess == 0
    assert stats.endpoints == 0


def test_tree_stats_rejects_cycles_and_disconnection():
    with pytest.raises(NotATreeError):
        triangle().tree_stats()
    with pytest.raises(NotATreeError):
        LooseGraph(["a", "b"], []).tree_stats()


def test_tree_stats_accounting(loose_trees100):
    for g in loose_trees100:
        stats = g.tree_stats()
        isolated = sum(1 for v in g.vertices if g.degree(v) == 0)
        assert sum(stats.counts) + stats.endpoints + isolated == len(g.vertices)


# -- components -----------------------------------------------------------------


def test_components_split_and_keep_loose_edges():
    g = LooseGraph(["a", "b", "c"], [("a", "b"), ("a",), ()])
    parts = g.components()
    assert len(parts) == 3
    ab = next(p for p in parts if "a" in p.vertices)
    assert len(ab.loose_edges) == 1
    free = [p for p in parts if not p.vertices]
    assert len(free) == 1 and len(free[0].free_edges) == 1


def test_disjoint_union():
    g = corpus.path_graph(2, prefix="a").disjoint_union(corpus.path_graph(2, prefix="b"))
    assert len(g.components()) == 2
    with pytest.raises(GraphError):
        g.disjoint_union(g)


# -- property tests ----------------------------------------------------------------


@given(loose_graphs())
def test_any_graph_round_trips_through_text(g):
    assert LooseGraph.parse(g.render()) == g


@given(loose_graphs())
def test_resolving_any_edge_preserves_degrees(g):
    for e in g.full_edges:
        resolved = g.resolve_edge(e.tag)
        assert resolved.degrees() == g.degrees()
        assert len(resolved.edges) == len(g.edges) + 1


@given(loose_graphs())
def test_restricting_to_any_ball_preserves_the_center_degree(g):
    for v in g.vertices:
        assert g.restrict(g.ball(v, 1)).degree(v) == g.degree(v)


@given(loose_graphs())
def test_reduce_commutes_with_full_restriction(g):
    assert g.restrict(g.vertices).reduce() == g.reduce()


@given(loose_graphs())
def test_components_partition_the_graph(g):
    parts = g.components()
    assert sum(len(p.vertices) for p in parts) == len(g.vertices)
    assert sum(len(p.edges) for p in parts) == len(g.edges)
