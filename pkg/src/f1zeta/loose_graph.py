"""Loose graphs: finite graphs whose edges may have 2, 1, or 0 endpoints.

An edge with one endpoint ("loose edge") sticks out of its vertex; an edge
with no endpoints ("free loose edge") floats on its own.  Loose graphs are
the combinatorial skeletons this package computes with: a vertex of degree m
(loose edges included) carries a local affine m-space, so the structural
operations here (ambient completion, edge resolution, balls, restriction,
spanning trees, cliques, tree statistics) are what every counting routine
consumes.

All values are immutable; every operation returns a new graph.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class GraphError(ValueError):
    """A loose-graph invariant or precondition was violated."""


class GraphParseError(GraphError):
    """Malformed graph text; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotConnectedError(GraphError):
    pass


class NotATreeError(GraphError):
    pass


@dataclass(frozen=True)
class Edge:
    """An edge record.  ``ends`` has length 2 (full), 1 (loose) or 0 (free)."""

    tag: int
    ends: tuple

    @property
    def is_full(self) -> bool:
        return len(self.ends) == 2

    @property
    def is_loose(self) -> bool:
        return len(self.ends) == 1

    @property
    def is_free(self) -> bool:
        return len(self.ends) == 0


@dataclass(frozen=True)
class TreeStats:
    """Degree statistics of a loose tree.

    ``degree_counts`` lists ``(degree, multiplicity)`` pairs for every vertex
    degree strictly greater than 1, ascending; degrees count incident loose
    edges as well as full edges.  ``interior_excess`` is (number of vertices
    of degree > 1) - 1, which may be -1.  ``endpoints`` counts the degree-1
    vertices.
    """

    degree_counts: tuple
    interior_excess: int
    endpoints: int

    @property
    def degrees(self) -> tuple:
        return tuple(d for d, _ in self.degree_counts)

    @property
    def counts(self) -> tuple:
        return tuple(n for _, n in self.degree_counts)


@dataclass(frozen=True)
class AmbientEmbedding:
    """An ordinary graph completing every loose edge of a source graph.

    Each loose edge gains one fresh endpoint; each free loose edge gains two
    fresh, mutually adjacent endpoints.  ``added_for`` maps each fresh vertex
    to the tag of the edge it completes.
    """

    graph: "LooseGraph"
    original_vertices: frozenset
    added_vertices: frozenset
    added_for: dict = field(compare=False)


class LooseGraph:
    """Immutable loose graph on string vertex ids.

    Edges are handed in either as endpoint tuples — ``("u", "v")`` for a full
    edge, ``("u",)`` for a loose edge at ``u``, ``()`` for a free loose
    edge — which receive consecutive integer tags, or as :class:`Edge`
    records with explicit tags.  Vertices mentioned by an edge are declared
    implicitly.

    No loops and no repeated full edge between the same vertex pair are
    allowed; several loose edges at one vertex are fine (that is how affine
    spaces are encoded).
    """

    __slots__ = ("vertices", "edges", "_adj", "_pair_tags")

    def __init__(self, vertices=(), edges=()):
        next_tag = 0
        for e in edges:
            if isinstance(e, Edge):
                next_tag = max(next_tag, e.tag + 1)
        normalized = []
        for e in edges:
            if isinstance(e, Edge):
                ends = tuple(e.ends)
                tag = e.tag
            else:
                ends = tuple(e)
                tag = next_tag
                next_tag += 1
            if len(ends) > 2:
                raise GraphError(f"edge {ends!r} has more than two endpoints")
            if len(ends) == 2:
                if ends[0] == ends[1]:
                    raise GraphError(f"loop edge at {ends[0]!r} is not allowed")
                ends = tuple(sorted(ends))
            normalized.append(Edge(tag, ends))

        vertex_set = set(vertices)
        for e in normalized:
            vertex_set.update(e.ends)
        for v in vertex_set:
            if not isinstance(v, str) or not _ID_RE.match(v):
                raise GraphError(f"invalid vertex id {v!r}")

        tags = [e.tag for e in normalized]
        if len(set(tags)) != len(tags):
            raise GraphError("duplicate edge tags")
        pairs = [e.ends for e in normalized if e.is_full]
        dupes = [p for p, c in Counter(pairs).items() if c > 1]
        if dupes:
            raise GraphError(f"repeated edge between {dupes[0][0]} and {dupes[0][1]}")

        normalized.sort(key=lambda e: e.tag)
        object.__setattr__(self, "vertices", frozenset(vertex_set))
        object.__setattr__(self, "edges", tuple(normalized))
        adj = {v: set() for v in vertex_set}
        pair_tags = {}
        for e in normalized:
            if e.is_full:
                u, v = e.ends
                adj[u].add(v)
                adj[v].add(u)
                pair_tags[frozenset(e.ends)] = e.tag
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})
        object.__setattr__(self, "_pair_tags", pair_tags)

    def __setattr__(self, name, value):
        raise AttributeError("LooseGraph is immutable")

    # -- basic views ----------------------------------------------------

    @property
    def full_edges(self) -> tuple:
        return tuple(e for e in self.edges if e.is_full)

    @property
    def loose_edges(self) -> tuple:
        return tuple(e for e in self.edges if e.is_loose)

    @property
    def free_edges(self) -> tuple:
        return tuple(e for e in self.edges if e.is_free)

    def edge(self, tag: int) -> Edge:
        for e in self.edges:
            if e.tag == tag:
                return e
        raise GraphError(f"unknown edge tag {tag!r}")

    def neighbors(self, v: str) -> frozenset:
        """Vertices joined to ``v`` by a full edge."""
        if v not in self.vertices:
            raise GraphError(f"unknown vertex {v!r}")
        return self._adj[v]

    def closed_neighborhood(self, v: str) -> frozenset:
        return self.neighbors(v) | {v}

    def degree(self, v: str) -> int:
        """Number of incident edges; loose edges at ``v`` count."""
        if v not in self.vertices:
            raise GraphError(f"unknown vertex {v!r}")
        return sum(1 for e in self.edges if v in e.ends)

    def degrees(self) -> dict:
        return {v: self.degree(v) for v in self.vertices}

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)

    # -- structural operations -------------------------------------------

    def ball(self, center: str, radius: int) -> frozenset:
        """All vertices within graph distance ``radius`` of ``center``.

        Distances run along full edges only.
        """
        if center not in self.vertices:
            raise GraphError(f"unknown vertex {center!r}")
        if radius < 0:
            raise GraphError("radius must be nonnegative")
        seen = {center}
        frontier = {center}
        for _ in range(radius):
            frontier = {w for v in frontier for w in self._adj[v]} - seen
            if not frontier:
                break
            seen |= frontier
        return frozenset(seen)

    def resolve_edge(self, tag: int) -> "LooseGraph":
        """Delete the full edge ``tag`` and hang a new loose edge at each of
        its two former endpoints.  Every vertex keeps its degree."""
        target = self.edge(tag)
        if not target.is_full:
            raise GraphError(f"edge {tag} is loose and cannot be resolved")
        u, v = target.ends
        fresh = max(e.tag for e in self.edges) + 1
        edges = [e for e in self.edges if e.tag != tag]
        edges.append(Edge(fresh, (u,)))
        edges.append(Edge(fresh + 1, (v,)))
        return LooseGraph(self.vertices, edges)

    def restrict(self, keep) -> "LooseGraph":
        """Induced loose graph on the vertex set ``keep``.

        A full edge with exactly one endpoint inside becomes a loose edge at
        that endpoint, so every kept vertex retains its degree.  Edges with
        no endpoint inside (including free loose edges) are dropped.
        """
        keep = frozenset(keep)
        unknown = keep - self.vertices
        if unknown:
            raise GraphError(f"unknown vertices {sorted(unknown)!r}")
        edges = []
        for e in self.edges:
            inside = tuple(v for v in e.ends if v in keep)
            if len(e.ends) > 0 and len(inside) > 0:
                edges.append(Edge(e.tag, inside if len(inside) < 2 else e.ends))
        return LooseGraph(keep, edges)

    def reduce(self) -> "LooseGraph":
        """Drop all loose and free edges, keeping every vertex."""
        return LooseGraph(self.vertices, self.full_edges)

    def spanning_tree(self) -> frozenset:
        """Tags of a deterministic spanning tree of the reduced graph.

        Grown breadth-first from the smallest vertex id, taking neighbors in
        sorted order, so the result is reproducible.
        """
        if not self.vertices:
            raise NotConnectedError("graph has no vertices")
        root = min(self.vertices)
        seen = {root}
        queue = [root]
        tree = set()
        while queue:
            v = queue.pop(0)
            for w in sorted(self._adj[v]):
                if w not in seen:
                    seen.add(w)
                    tree.add(self._pair_tags[frozenset((v, w))])
                    queue.append(w)
        if seen != self.vertices:
            raise NotConnectedError("reduced graph is not connected")
        return frozenset(tree)

    def cliques(self) -> list:
        """Every nonempty clique of the full-edge graph, each exactly once.

        Returned as sorted tuples, ordered by increasing size and then
        lexicographically.
        """
        out = []
        level = [(v,) for v in sorted(self.vertices)]
        while level:
            out.extend(level)
            grown = []
            for clique in level:
                common = self._adj[clique[0]]
                for v in clique[1:]:
                    common = common & self._adj[v]
                last = clique[-1]
                for w in sorted(common):
                    if w > last:
                        grown.append(clique + (w,))
            level = grown
        return out

    # -- trees -----------------------------------------------------------

    def is_loose_tree(self) -> bool:
        """True when the reduced graph is connected and acyclic.

        A graph without vertices counts only if it has no full edges (free
        loose edges are allowed; each stands alone).
        """
        if not self.vertices:
            return not self.full_edges
        if len(self.full_edges) != len(self.vertices) - 1:
            return False
        try:
            self.spanning_tree()
        except NotConnectedError:
            return False
        return True

    def tree_stats(self) -> TreeStats:
        """Degree statistics of a loose tree; raises for cyclic or
        disconnected input."""
        if not self.vertices:
            raise NotATreeError("graph has no vertices")
        if not self.is_loose_tree():
            raise NotATreeError("reduced graph is not a tree")
        degs = Counter()
        endpoints = 0
        for v in self.vertices:
            d = self.degree(v)
            if d == 1:
                endpoints += 1
            elif d > 1:
                degs[d] += 1
        counts = tuple(sorted(degs.items()))
        return TreeStats(
            degree_counts=counts,
            interior_excess=sum(degs.values()) - 1,
            endpoints=endpoints,
        )

    # -- ambient completion -----------------------------------------------

    def ambient_completion(self) -> AmbientEmbedding:
        """Smallest ordinary graph containing this loose graph.

        Fresh vertex names are derived from edge tags and never collide with
        existing ids.
        """
        taken = set(self.vertices)

        def fresh(base):
            name = base
            while name in taken:
                name = "_" + name
            taken.add(name)
            return name

        edges = list(self.full_edges)
        added = {}
        for e in self.edges:
            if e.is_loose:
                w = fresh(f"_e{e.tag}")
                added[w] = e.tag
                edges.append(Edge(e.tag, (e.ends[0], w)))
            elif e.is_free:
                a = fresh(f"_e{e.tag}a")
                b = fresh(f"_e{e.tag}b")
                added[a] = e.tag
                added[b] = e.tag
                edges.append(Edge(e.tag, (a, b)))
        ambient = LooseGraph(self.vertices | set(added), edges)
        return AmbientEmbedding(
            graph=ambient,
            original_vertices=self.vertices,
            added_vertices=frozenset(added),
            added_for=added,
        )

    # -- connectivity ------------------------------------------------------

    def components(self) -> tuple:
        """Connected components, as loose graphs.

        A loose edge travels with its vertex; every free loose edge is a
        component of its own.
        """
        out = []
        seen = set()
        for root in sorted(self.vertices):
            if root in seen:
                continue
            group = self.ball(root, len(self.vertices))
            seen |= group
            out.append(self.restrict(group))
        for e in self.free_edges:
            out.append(LooseGraph((), [e]))
        return tuple(out)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def disjoint_union(self, other: "LooseGraph") -> "LooseGraph":
        if self.vertices & other.vertices:
            raise GraphError("vertex sets overlap")
        specs = [e.ends for e in self.edges] + [e.ends for e in other.edges]
        return LooseGraph(self.vertices | other.vertices, specs)

    # -- text format --------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "LooseGraph":
        """Parse the line-oriented graph format.

        One directive per line: ``vertex <id>``, ``edge <id> <id>``,
        ``loose <id>``, ``loose2``; ``#`` starts a comment.  Edge tags follow
        file order.
        """
        vertices = set()
        specs = []

        def want_id(token, line):
            if not _ID_RE.match(token):
                raise GraphParseError(f"invalid id {token!r}", line)
            return token

        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            word, args = tokens[0], tokens[1:]
            if word == "vertex" and len(args) == 1:
                vertices.add(want_id(args[0], lineno))
            elif word == "edge" and len(args) == 2:
                u = want_id(args[0], lineno)
                v = want_id(args[1], lineno)
                if u == v:
                    raise GraphError(f"line {lineno}: loop edge at {u!r}")
                if (tuple(sorted((u, v)))) in {tuple(sorted(s)) for s in specs if len(s) == 2}:
                    raise GraphError(f"line {lineno}: repeated edge {u} {v}")
                specs.append((u, v))
            elif word == "loose" and len(args) == 1:
                specs.append((want_id(args[0], lineno),))
            elif word == "loose2" and not args:
                specs.append(())
            else:
                raise GraphParseError(f"malformed directive {line!r}", lineno)
        return cls(vertices, specs)

    def render(self) -> str:
        """Canonical text form: vertices sorted, then edges sorted."""
        lines = [f"vertex {v}" for v in sorted(self.vertices)]
        lines += [f"edge {e.ends[0]} {e.ends[1]}" for e in sorted(self.full_edges, key=lambda e: e.ends)]
        lines += [f"loose {e.ends[0]}" for e in sorted(self.loose_edges, key=lambda e: e.ends)]
        lines += ["loose2"] * len(self.free_edges)
        return "\n".join(lines) + ("\n" if lines else "")

    # -- equality is structural: tags do not matter --------------------------

    def _key(self):
        return (self.vertices, frozenset(Counter(e.ends for e in self.edges).items()))

    def __eq__(self, other):
        if not isinstance(other, LooseGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        ends = [e.ends for e in self.edges]
        return f"LooseGraph({sorted(self.vertices)!r}, {ends!r})"


def parse(text: str) -> LooseGraph:
    """Module-level alias for :meth:`LooseGraph.parse`."""
    return LooseGraph.parse(text)
