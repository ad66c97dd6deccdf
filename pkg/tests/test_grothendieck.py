from itertools import permutations
from random import Random

import pytest

from f1zeta import corpus
from f1zeta.grothendieck import (
    L,
    class_of,
    resolution_difference,
    surgery,
    surgery_class,
    tree_class,
)
from f1zeta.loose_graph import GraphError, LooseGraph, NotConnectedError
from f1zeta.poly import IntPolynomial


def poly(coeffs):
    return IntPolynomial(coeffs, var="L")


# -- class_of on the classical examples -----------------------------------------


@pytest.mark.parametrize("m", range(1, 6))
def test_complete_graph_class(m):
    expected = poly({k: 1 for k in range(m + 1)})
    assert class_of(corpus.complete_graph(m + 1)) == expected


def test_diamond_class():
    assert class_of(corpus.diamond()) == poly({3: 1, 2: 1, 0: 2})


def test_resolved_diamond_class():
    g = corpus.diamond()
    uv = next(e.tag for e in g.full_edges if e.ends == ("u", "v"))
    assert class_of(g.resolve_edge(uv)) == poly({3: 2, 2: 2, 1: -4, 0: 4})


@pytest.mark.parametrize("m", range(1, 6))
def test_loose_star_class_is_affine_space(m):
    assert class_of(corpus.loose_star(m)) == poly({m: 1})


def test_free_loose_edge_is_a_multiplicative_group():
    assert class_of(LooseGraph((), [()])) == L - 1


def test_path_class():
    # brute-force count over F_2 gives 6 = value at 2
    p = class_of(corpus.path_graph(3))
    assert p == poly({2: 1, 0: 2})
    assert p(2) == 6


def test_empty_and_point_classes():
    assert class_of(LooseGraph()) == poly(0)
    assert class_of(LooseGraph(["a"], [])) == poly(1)


def test_additivity_over_disjoint_union():
    a = corpus.complete_graph(3, prefix="a")
    b = corpus.loose_star(2, center="z")
    assert class_of(a.disjoint_union(b)) == class_of(a) + class_of(b)


def test_projective_completion_identity():
    # affine n-space plus a projective (n-1)-space make a projective n-space
    for n in range(1, 7):
        affine = class_of(corpus.loose_star(n))
        smaller = class_of(corpus.complete_graph(n))
        bigger = class_of(corpus.complete_graph(n + 1))
        assert affine + smaller == bigger


def test_vertex_count_and_degree(random200):
    for g in random200:
        p = class_of(g)
        assert p(1) == len(g.vertices)
        if g.vertices and any(g.degree(v) for v in g.vertices):
            assert p.degree == g.max_degree()


# -- tree formula ------------------------------------------------------------------


def test_tree_class_path():
    assert tree_class(corpus.path_graph(3)) == poly({2: 1, 0: 2})


def test_tree_class_single_edge():
    assert tree_class(LooseGraph(["a", "b"], [("a", "b")])) == L + 1


@pytest.mark.parametrize("m", range(1, 6))
def test_tree_class_loose_star(m):
    assert tree_class(corpus.loose_star(m)) == poly({m: 1})


def test_tree_class_degenerate_cases():
    assert tree_class(LooseGraph(["a"], [])) == poly(1)
    assert tree_class(LooseGraph()) == poly(0)
    assert tree_class(LooseGraph((), [()])) == L - 1


def test_tree_class_rejects_cycles():
    with pytest.raises(GraphError):
        tree_class(corpus.complete_graph(3))


def test_tree_class_matches_clique_route(loose_trees100):
    for g in loose_trees100:
        assert tree_class(g) == class_of(g)


# -- locality of resolution ---------------------------------------------------------


def test_resolution_difference_triangle():
    g = corpus.complete_graph(3)
    assert resolution_difference(g, 0) == poly({2: -2, 1: 3, 0: -1})


def test_resolution_difference_diamond():
    g = corpus.diamond()
    uv = next(e.tag for e in g.full_edges if e.ends == ("u", "v"))
    assert resolution_difference(g, uv) == poly({3: -1, 2: -1, 1: 4, 0: -2})


def test_resolution_difference_single_edge():
    g = LooseGraph(["a", "b"], [("a", "b")])
    assert resolution_difference(g, 0) == 1 - L


def test_resolution_difference_rejects_loose_edges():
    g = corpus.loose_star(1)
    with pytest.raises(GraphError):
        resolution_difference(g, 0)


def test_resolution_difference_equals_global_difference(random200):
    for g in random200[:60]:
        for e in g.full_edges:
            local = resolution_difference(g, e.tag)
            globl = class_of(g) - class_of(g.resolve_edge(e.tag))
            assert local == globl


# -- surgery ---------------------------------------------------------------------


def test_surgery_triangle():
    p, trace = surgery(corpus.complete_graph(3))
    assert p == poly({2: 1, 1: 1, 0: 1})
    assert len(trace.steps) == 1


def test_surgery_k4_and_diamond():
    assert surgery(corpus.complete_graph(4))[0] == poly({k: 1 for k in range(4)})
    assert surgery(corpus.diamond())[0] == poly({3: 1, 2: 1, 0: 2})


def test_surgery_trace_bookkeeping():
    g = corpus.complete_graph(4)
    p, trace = surgery(g)
    total = trace.final_tree_class
    for step in trace.steps:
        total = total + step.difference
    assert total == p
    assert trace.final_tree.is_loose_tree()
    assert trace.final_tree_class == tree_class(trace.final_tree)
    assert trace.spanning_tree == g.spanning_tree()


def test_surgery_handles_free_edge_component_alone():
    p, trace = surgery(LooseGraph((), [()]))
    assert p == L - 1
    assert trace.steps == ()


def test_surgery_rejects_disconnected_input():
    g = LooseGraph(["a", "b"], [])
    with pytest.raises(NotConnectedError):
        surgery(g)
    with pytest.raises(NotConnectedError):
        surgery(corpus.complete_graph(3).disjoint_union(LooseGraph((), [()])))


def test_surgery_class_sums_components():
    g = corpus.complete_graph(3, prefix="a").disjoint_union(LooseGraph((), [()]))
    assert surgery_class(g) == class_of(g)


def test_surgery_validates_tree_and_order():
    g = corpus.complete_graph(3)
    with pytest.raises(GraphError):
        surgery(g, tree={0, 1, 2})
    with pytest.raises(GraphError):
        surgery(g, tree={0})
    tree = g.spanning_tree()
    with pytest.raises(GraphError):
        surgery(g, tree=tree, order=[99])


def test_surgery_spanning_tree_and_order_independence():
    rng = Random(5)
    for _ in range(5):
        g = corpus.random_connected_graph(rng, min_extra_edges=1)
        expected = class_of(g)
        for tree in corpus.all_spanning_trees(g):
            extra = [e.tag for e in g.full_edges if e.tag not in tree]
            for order in permutations(extra):
                assert surgery(g, tree=tree, order=order)[0] == expected


def test_surgery_agrees_with_class(random200):
    for g in random200[:80]:
        assert surgery_class(g) == class_of(g)
