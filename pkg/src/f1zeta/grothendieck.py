"""Grothendieck classes of loose graphs in the polynomial ring Z[L].

``L`` denotes the class of the affine line, so evaluating a class at a prime
power q yields the number of F_q-rational points of the scheme a loose graph
encodes.  Three independent routes to the same polynomial live here:

* :func:`class_of` — inclusion-exclusion over the cliques of the graph.
  Every vertex v carries a cone of projective points, supported on the
  closed neighborhood of v in the ambient completion with a nonzero
  coordinate at v; cones intersect exactly along cliques, and a clique T
  with common closed neighborhood S contributes
  ``(L-1)^(|T|-1) * L^(|S|-|T|)`` with the alternating sign.  Free loose
  edges add ``L - 1`` each (a multiplicative group apiece).

* :func:`tree_class` — a closed formula for loose trees built only from
  degree statistics.

* :func:`surgery` — resolve all full edges outside a spanning tree one at a
  time, accumulating the purely local difference each resolution causes,
  until a loose tree remains; the result is the tree's class plus the
  accumulated differences, and is independent of the spanning tree and of
  the resolution order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .loose_graph import GraphError, LooseGraph, NotConnectedError, TreeStats
from .poly import IntPolynomial

LPolynomial = IntPolynomial

#: The class of the affine line.
L = IntPolynomial({1: 1}, var="L")

_ONE = IntPolynomial(1, var="L")
_ZERO = IntPolynomial(0, var="L")


def class_of(g: LooseGraph) -> IntPolynomial:
    """Class of ``g`` by clique inclusion-exclusion over the vertex cones."""
    ambient = g.ambient_completion()
    hood = {v: ambient.graph.closed_neighborhood(v) for v in g.vertices}
    total = _ZERO
    gm_powers = {0: _ONE}  # cache of (L-1)^k
    for clique in g.cliques():
        common = hood[clique[0]]
        for v in clique[1:]:
            common = common & hood[v]
        k = len(clique)
        if k - 1 not in gm_powers:
            gm_powers[k - 1] = gm_powers[k - 2] * (L - 1)
        term = gm_powers[k - 1] * IntPolynomial({len(common) - k: 1}, var="L")
        total = total + term if k % 2 else total - term
    return total + (L - 1) * len(g.free_edges)


def tree_class(g: LooseGraph) -> IntPolynomial:
    """Class of a loose tree from its degree statistics.

    For degree counts ``(d_i, n_i)`` over degrees above 1, interior excess I
    and endpoint count E the class is ``sum n_i L^d_i - I*L + I + E``.  A
    single vertex without edges contributes 1, and each free loose edge adds
    ``L - 1`` on top.
    """
    free = len(g.free_edges)
    if not g.vertices:
        if g.full_edges:
            raise GraphError("graph without vertices cannot have full edges")
        return (L - 1) * free
    if len(g.vertices) == 1 and g.degree(next(iter(g.vertices))) == 0:
        return _ONE + (L - 1) * free
    stats = g.tree_stats()
    return _from_stats(stats) + (L - 1) * free


def _from_stats(stats: TreeStats) -> IntPolynomial:
    poly = IntPolynomial(
        {d: n for d, n in stats.degree_counts}, var="L"
    )
    poly = poly + IntPolynomial({1: -stats.interior_excess}, var="L")
    return poly + (stats.interior_excess + stats.endpoints)


def resolution_difference(g: LooseGraph, tag: int) -> IntPolynomial:
    """Change of class caused by resolving the full edge ``tag``.

    Computed locally: both the graph and its resolution are restricted to
    the union of the radius-1 balls around the edge's endpoints before
    taking classes.  The result equals
    ``class_of(g) - class_of(g.resolve_edge(tag))``.
    """
    e = g.edge(tag)
    if not e.is_full:
        raise GraphError(f"edge {tag} is loose and cannot be resolved")
    x, y = e.ends
    ball = g.ball(x, 1) | g.ball(y, 1)
    before = class_of(g.restrict(ball))
    after = class_of(g.resolve_edge(tag).restrict(ball))
    return before - after


@dataclass(frozen=True)
class SurgeryStep:
    """One edge resolution: which edge, the ball it was computed in, and the
    class difference it caused."""

    tag: int
    ends: tuple
    ball: frozenset
    difference: IntPolynomial


@dataclass(frozen=True)
class SurgeryTrace:
    """Full record of a surgery run.

    The defining bookkeeping identity holds by construction:
    ``result = final_tree_class + sum(step.difference for step in steps)``.
    """

    spanning_tree: frozenset
    steps: tuple
    final_tree: LooseGraph
    final_stats: TreeStats | None
    final_tree_class: IntPolynomial

    @property
    def total(self) -> IntPolynomial:
        poly = self.final_tree_class
        for step in self.steps:
            poly = poly + step.difference
        return poly


def surgery(g: LooseGraph, tree=None, order=None):
    """Compute the class of a connected loose graph by edge resolution.

    Full edges outside the spanning ``tree`` are resolved one at a time (in
    ``order`` if given, else sorted by endpoints); each step contributes a
    local difference, and the loose tree that remains is evaluated by the
    closed formula.  Returns ``(polynomial, trace)``.

    Disconnected graphs are rejected; split them with
    :meth:`LooseGraph.components` and sum (see :func:`surgery_class`).
    """
    if len(g.components()) != 1:
        raise NotConnectedError("surgery needs a connected graph")

    if g.vertices:
        if tree is None:
            tree = g.spanning_tree()
        else:
            tree = frozenset(tree)
            _check_spanning_tree(g.reduce(), tree)
    else:
        tree = frozenset()  # a lone free loose edge

    extra = sorted(
        (e for e in g.full_edges if e.tag not in tree),
        key=lambda e: e.ends,
    )
    tags = [e.tag for e in extra]
    if order is not None:
        order = list(order)
        if sorted(order) != sorted(tags):
            raise GraphError("order must permute the non-tree full edges")
        tags = order

    current = g
    steps = []
    for tag in tags:
        e = current.edge(tag)
        x, y = e.ends
        ball = current.ball(x, 1) | current.ball(y, 1)
        before = class_of(current.restrict(ball))
        nxt = current.resolve_edge(tag)
        after = class_of(nxt.restrict(ball))
        steps.append(SurgeryStep(tag, e.ends, ball, before - after))
        current = nxt

    stats = None
    if current.vertices and not (
        len(current.vertices) == 1 and current.max_degree() == 0
    ):
        stats = current.tree_stats()
    final_poly = tree_class(current)
    trace = SurgeryTrace(
        spanning_tree=tree,
        steps=tuple(steps),
        final_tree=current,
        final_stats=stats,
        final_tree_class=final_poly,
    )
    return trace.total, trace


def surgery_class(g: LooseGraph) -> IntPolynomial:
    """Sum of per-component surgery results; classes add over disjoint
    unions."""
    total = _ZERO
    for component in g.components():
        poly, _ = surgery(component)
        total = total + poly
    return total


def _check_spanning_tree(reduced: LooseGraph, tree: frozenset):
    tags = {e.tag for e in reduced.full_edges}
    if not tree <= tags:
        raise GraphError("spanning tree contains unknown or loose edge tags")
    if len(tree) != len(reduced.vertices) - 1:
        raise GraphError("spanning tree has the wrong number of edges")
    parent = {v: v for v in reduced.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for tag in tree:
        u, v = reduced.edge(tag).ends
        ru, rv = find(u), find(v)
        if ru == rv:
            raise GraphError("spanning tree contains a cycle")
        parent[ru] = rv
    roots = {find(v) for v in reduced.vertices}
    if len(roots) > 1:
        raise NotConnectedError("edges do not span the graph")
