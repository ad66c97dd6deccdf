"""Counting polynomials of loose graphs.

A loose graph is a finite graph whose edges may keep 2, 1, or 0 endpoints.
Each vertex of degree m carries an affine m-space, loose edges count toward
the degree, and a free-floating edge is a multiplicative group.  The class
of the whole graph lives in Z[L], where L is the class of the affine line:
evaluating at a prime power q counts the F_q-rational points.
"""

from f1zeta import LooseGraph, class_of, corpus

print("=" * 72)
print("1. Complete graphs are projective spaces")
print("=" * 72)
for m in range(1, 6):
    g = corpus.complete_graph(m + 1)
    print(f"K_{m + 1}: class = {class_of(g).render('L')}")
print()
print("The triangle is the projective plane with 1 point per line:")
triangle = LooseGraph.parse("edge a b\nedge b c\nedge a c\n")
p = class_of(triangle)
print(f"  class {p.render('L')}, points over F_2: {p(2)} = |P^2(F_2)|")

print()
print("=" * 72)
print("2. A vertex with m loose edges is an affine m-space")
print("=" * 72)
for m in range(1, 5):
    star = corpus.loose_star(m)
    print(f"1 vertex + {m} loose edges: class = {class_of(star).render('L')}")
print()
print("Projective completion, one dimension at a time:")
for n in range(1, 5):
    affine = class_of(corpus.loose_star(n))
    boundary = class_of(corpus.complete_graph(n))
    total = class_of(corpus.complete_graph(n + 1))
    print(f"  {affine.render('L'):>8} + {boundary.render('L'):>22} "
          f"= {total.render('L')}")

print()
print("=" * 72)
print("3. Loose edges change the geometry, not just the picture")
print("=" * 72)
diamond = corpus.diamond()
print("The diamond (two adjacent vertices with two common neighbors):")
print(f"  class = {class_of(diamond).render('L')}")
print("Counts:", {q: class_of(diamond)(q) for q in (2, 3, 5)})
print()
free = LooseGraph.parse("loose2\n")
print(f"A single free loose edge: class = {class_of(free).render('L')} "
      f"(the multiplicative group)")
print()
both = diamond.disjoint_union(free)
print("Classes add over disjoint unions:")
print(f"  diamond + free edge = {class_of(both).render('L')}")

print()
print("=" * 72)
print("4. Evaluating at q = 1 counts the vertices")
print("=" * 72)
for g, name in [(triangle, "triangle"), (diamond, "diamond"),
                (corpus.loose_star(3), "affine 3-space")]:
    print(f"  {name:15s}: class(1) = {class_of(g)(1)}, vertices = {len(g.vertices)}")
