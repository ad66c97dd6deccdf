"""Zeta functions of loose graphs.

A counting polynomial N(q) = sum a_k q^k induces three zetas: the symbolic
arithmetic zeta  prod zeta(s-k)^(a_k), the local factor over F_p, and the
zeta over the one-element base,  prod (t-k)^(-a_k).  The local factor has
two power-series expansions that must agree exactly, and it converges to
the one-element zeta as p drops to 1.
"""

from f1zeta import (
    IntPolynomial,
    class_of,
    corpus,
    counting_series,
    limit_check,
    local_zeta_series,
    render_arithmetic_zeta,
    tree_class,
    zeta_from_polynomial,
)

print("=" * 72)
print("1. The classical spaces")
print("=" * 72)
for n in range(1, 4):
    affine = IntPolynomial({n: 1}, var="L")
    z = zeta_from_polynomial(affine)
    print(f"A^{n}: arithmetic {render_arithmetic_zeta(affine):24s} "
          f"one-element {z.render('s')}")
for n in range(1, 4):
    projective = IntPolynomial({k: 1 for k in range(n + 1)}, var="L")
    z = zeta_from_polynomial(projective)
    print(f"P^{n}: arithmetic {render_arithmetic_zeta(projective):24s} "
          f"one-element {z.render('s')}")
gm = IntPolynomial({1: 1, 0: -1}, var="L")
print(f"G_m: arithmetic {render_arithmetic_zeta(gm):24s} "
      f"one-element {zeta_from_polynomial(gm).render('s')}")

print()
print("=" * 72)
print("2. Zetas of graphs")
print("=" * 72)
diamond = corpus.diamond()
z = zeta_from_polynomial(class_of(diamond))
print(f"diamond: class {class_of(diamond).render('L')}")
print(f"  zeta {z.render('t')},  points over F_1: {z.euler_characteristic}")
tree = corpus.path_graph(5)
zt = zeta_from_polynomial(tree_class(tree))
stats = tree.tree_stats()
print(f"path on 5 vertices: zeta {zt.render('t')}")
print(f"  (read off the degree statistics: {stats.degree_counts}, "
      f"interior excess {stats.interior_excess}, endpoints {stats.endpoints})")

print()
print("=" * 72)
print("3. One local factor, two expansions")
print("=" * 72)
p = class_of(diamond)
for prime in (2, 3):
    euler = local_zeta_series(p, prime, order=6)
    counted = counting_series(p, prime, order=6)
    print(f"p = {prime}:")
    print(f"  Euler product   {[str(c) for c in euler.coefficients]}")
    print(f"  exp of counts   {[str(c) for c in counted.coefficients]}")
    print(f"  equal: {euler == counted}")

print()
print("=" * 72)
print("4. Letting p fall to 1")
print("=" * 72)
projective_line = zeta_from_polynomial(IntPolynomial({0: 1, 1: 1}))
target = projective_line.value(3.0)
print(f"P^1 at s = 3: limit target {target:.6f}")
for eps in (1e-2, 1e-3, 1e-4, 1e-5):
    approx = limit_check(projective_line, 3.0, 1 + eps)
    print(f"  p = 1 + {eps:<6g}: {approx:.6f}  (error {abs(approx - target):.2e})")
