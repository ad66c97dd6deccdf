"""Ground truth by brute force: count points, interpolate, cross-check.

:func:`enumerate_points` counts the F_q-rational points of the scheme a
loose graph encodes without any inclusion-exclusion: it walks every
coordinate vector of the ambient projective space (canonicalized so the
first nonzero coordinate is 1) and keeps those lying in at least one vertex
cone.  Free loose edges contribute q - 1 points each and are counted
additively; embedding their ambient completion would wrongly contribute a
projective line.

Exact Lagrange interpolation over enough primes then reconstructs the
counting polynomial, and :func:`cross_check` compares every available
route — clique inclusion-exclusion, surgery, the tree formula, and the
interpolated oracle counts — on one graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .grothendieck import class_of, surgery, tree_class
from .loose_graph import LooseGraph
from .poly import IntPolynomial

#: Hard ceiling on ambient vertices (coordinates of the ambient space).
MAX_AMBIENT = 8
#: Ceiling on enumerated coordinate vectors per call.
MAX_TUPLES = 1 << 24

_CHUNK = 1 << 18


class OracleLimitError(ValueError):
    """The requested enumeration exceeds the size limits."""


class InterpolationError(ValueError):
    """Interpolation produced non-integer coefficients: some count or the
    counting model itself is wrong."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def first_primes(count: int) -> list:
    out = []
    n = 2
    while len(out) < count:
        if _is_prime(n):
            out.append(n)
        n += 1
    return out


def enumerate_points(
    g: LooseGraph, q: int, shards: int = 1, max_tuples: int = MAX_TUPLES
) -> int:
    """Count the F_q-points of the scheme of ``g`` by direct enumeration.

    ``shards`` splits the coordinate range into that many contiguous pieces
    whose counts are summed; the result never depends on the split.
    """
    if not _is_prime(q):
        raise OracleLimitError(f"q = {q} is not prime")
    if shards < 1:
        raise OracleLimitError("shards must be positive")

    ambient = g.ambient_completion()
    if len(ambient.graph.vertices) > MAX_AMBIENT:
        raise OracleLimitError(
            f"{len(ambient.graph.vertices)} ambient vertices exceed {MAX_AMBIENT}"
        )
    # Coordinates added for free loose edges can never satisfy a cone
    # condition, so they are skipped; the count does not change.
    free_added = {
        v for v, tag in ambient.added_for.items() if g.edge(tag).is_free
    }
    coords = sorted(ambient.graph.vertices - free_added)
    total = q ** len(coords)
    if total > max_tuples:
        raise OracleLimitError(f"{total} coordinate vectors exceed {max_tuples}")

    index = {v: i for i, v in enumerate(coords)}
    cones = []
    for v in sorted(g.vertices):
        hood = ambient.graph.closed_neighborhood(v)
        outside = np.array(
            [index[w] for w in coords if w not in hood], dtype=np.intp
        )
        cones.append((index[v], outside))

    count = 0
    powers = q ** np.arange(len(coords), dtype=np.int64)
    bounds = [total * s // shards for s in range(shards + 1)]
    for lo, hi in zip(bounds, bounds[1:]):
        for start in range(lo, hi, _CHUNK):
            vals = np.arange(start, min(start + _CHUNK, hi), dtype=np.int64)
            digits = (vals[:, None] // powers) % q
            count += _count_chunk(digits, cones)
    return count + (q - 1) * len(g.free_edges)


def _count_chunk(digits, cones) -> int:
    nonzero = digits != 0
    has_support = nonzero.any(axis=1)
    if digits.shape[1]:
        first = nonzero.argmax(axis=1)
        lead = np.take_along_axis(digits, first[:, None], axis=1)[:, 0]
        canonical = has_support & (lead == 1)
    else:
        canonical = has_support
    in_cone = np.zeros(len(digits), dtype=bool)
    for center, outside in cones:
        mask = nonzero[:, center]
        if outside.size:
            mask = mask & ~nonzero[:, outside].any(axis=1)
        in_cone |= mask
    return int((canonical & in_cone).sum())


@dataclass(frozen=True)
class CountTable:
    """Point counts of one graph over several prime fields."""

    graph_id: str
    samples: tuple

    def __post_init__(self):
        rows = tuple((int(q), int(c)) for q, c in self.samples)
        qs = [q for q, _ in rows]
        if len(set(qs)) != len(qs):
            raise ValueError("duplicate field sizes")
        if any(not _is_prime(q) for q in qs):
            raise ValueError("field sizes must be prime")
        if any(c < 0 for _, c in rows):
            raise ValueError("counts must be nonnegative")
        object.__setattr__(self, "samples", rows)

    def to_csv(self) -> str:
        lines = ["q,count"] + [f"{q},{c}" for q, c in self.samples]
        return "\n".join(lines) + "\n"


def count_table(g: LooseGraph, primes, graph_id: str = "graph", **kwargs) -> CountTable:
    samples = tuple((q, enumerate_points(g, q, **kwargs)) for q in primes)
    return CountTable(graph_id, samples)


def interpolate(table: CountTable) -> IntPolynomial:
    """The unique polynomial through the samples, by exact Lagrange
    interpolation; raises if any coefficient is non-integral."""
    xs = [q for q, _ in table.samples]
    ys = [c for _, c in table.samples]
    if not xs:
        raise InterpolationError("no samples to interpolate")
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        # numerator polynomial prod_{j != i} (X - x_j), ascending coefficients
        basis = [Fraction(1)]
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= basis[k + 1] * xs[j]
        denom = Fraction(1)
        for j in range(n):
            if j != i:
                denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k in range(len(basis)):
            coeffs[k] += basis[k] * scale
    if any(c.denominator != 1 for c in coeffs):
        raise InterpolationError(
            f"non-integer coefficients {coeffs} for {table.graph_id}: "
            "counting model violated"
        )
    return IntPolynomial({k: int(c) for k, c in enumerate(coeffs)}, var="L")


@dataclass(frozen=True)
class CrossCheckReport:
    """Every route to the counting polynomial of one graph, compared."""

    graph: LooseGraph
    class_polynomial: IntPolynomial
    surgery_polynomial: IntPolynomial
    tree_polynomial: IntPolynomial | None
    counts: CountTable
    counts_agree: bool
    interpolated: IntPolynomial | None
    interpolation_skipped: str | None
    all_equal: bool

    @property
    def ok(self) -> bool:
        return self.all_equal and self.counts_agree

    def summary(self) -> str:
        lines = [
            f"class polynomial : {self.class_polynomial.render('L')}",
            f"surgery          : {self.surgery_polynomial.render('L')}",
        ]
        if self.tree_polynomial is not None:
            lines.append(f"tree formula     : {self.tree_polynomial.render('L')}")
        for qv, c in self.counts.samples:
            lines.append(f"count over F_{qv} : {c}")
        if self.interpolated is not None:
            lines.append(f"interpolated     : {self.interpolated.render('L')}")
        elif self.interpolation_skipped:
            lines.append(f"interpolation    : skipped ({self.interpolation_skipped})")
        lines.append(f"verdict          : {'agree' if self.ok else 'DISAGREE'}")
        return "\n".join(lines)


def cross_check(
    g: LooseGraph,
    primes=None,
    graph_id: str = "graph",
    max_tuples: int = MAX_TUPLES,
) -> CrossCheckReport:
    """Compute the class of ``g`` by every available route and compare.

    Disconnected graphs are handled component-wise (all routes add over
    disjoint unions).  Counting uses ``primes`` if given, else the first
    deg+1 primes; primes whose enumeration would exceed the size limits are
    skipped, and interpolation is skipped unless deg+1 counts remain.
    """
    class_poly = class_of(g)
    surgery_poly = IntPolynomial(0, var="L")
    for component in g.components():
        poly, _ = surgery(component)
        surgery_poly = surgery_poly + poly

    tree_poly = None
    parts = g.components()
    if all(c.is_loose_tree() for c in parts):
        tree_poly = IntPolynomial(0, var="L")
        for component in parts:
            tree_poly = tree_poly + tree_class(component)

    degree = int(class_poly.degree) if class_poly else 0
    need = degree + 1
    wanted = list(primes) if primes is not None else first_primes(need)
    samples = []
    skipped = []
    for qv in wanted:
        try:
            samples.append((qv, enumerate_points(g, qv, max_tuples=max_tuples)))
        except OracleLimitError as exc:
            skipped.append(f"q={qv}: {exc}")
    table = CountTable(graph_id, tuple(samples))
    counts_agree = all(class_poly(qv) == c for qv, c in table.samples)

    interpolated = None
    skip_reason = "; ".join(skipped) if skipped else None
    if len(table.samples) >= need:
        interpolated = interpolate(
            CountTable(graph_id, table.samples[:need])
        )
    elif skip_reason is None:
        skip_reason = f"only {len(table.samples)} counts for degree {need - 1}"

    routes = [surgery_poly]
    if tree_poly is not None:
        routes.append(tree_poly)
    if interpolated is not None:
        routes.append(interpolated)
    all_equal = all(r == class_poly for r in routes)

    return CrossCheckReport(
        graph=g,
        class_polynomial=class_poly,
        surgery_polynomial=surgery_poly,
        tree_polynomial=tree_poly,
        counts=table,
        counts_agree=counts_agree,
        interpolated=interpolated,
        interpolation_skipped=skip_reason,
        all_equal=all_equal,
    )
