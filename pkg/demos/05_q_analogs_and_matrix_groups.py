"""q-analogs and monomial matrix groups.

Gaussian binomials are the q-analogs of binomial coefficients: exact
polynomials in q that count linear subspaces over F_q and collapse to
ordinary binomials at q = 1.  Over the degree-n extension of the
one-element base, linear algebra has no addition, so invertible matrices
have exactly one nonzero entry per row and column; they form a wreath
product of order n^d * d!.
"""

from f1zeta import (
    F1nVectorSpace,
    MonomialMatrix,
    count_subspaces,
    f1_subspace_count,
    gauss_binomial,
    gl_order,
    monomial_matrices,
    q_factorial,
    q_integer,
    restrict_scalars,
    restrict_scalars_point,
)

print("=" * 72)
print("1. q-integers and Gaussian binomials")
print("=" * 72)
for n in range(1, 6):
    print(f"[{n}]_q  = {q_integer(n).render('q')}")
print(f"[4]_q! = {q_factorial(4).render('q')}")
print()
b42 = gauss_binomial(4, 2)
print(f"[4 choose 2]_q = {b42.render('q')}")
print(f"  at q = 2: {b42(2)}  (brute-force subspace count: {count_subspaces(4, 2, 2)})")
print(f"  at q = 1: {b42(1)}  (the ordinary binomial)")

print()
print("=" * 72)
print("2. Subspace counts over the one-element base")
print("=" * 72)
print("k-dimensional subspaces of the combinatorial projective n-space:")
for n in range(2, 5):
    row = [f1_subspace_count(n, k) for k in range(-1, n + 1)]
    print(f"  n = {n}: {row}   (a Pascal row: subsets of the vertex set)")

print()
print("=" * 72)
print("3. Monomial matrices")
print("=" * 72)
m = MonomialMatrix(3, 4, sigma=(1, 2, 0), weights=(1, 3, 2))
print("a 3x3 monomial matrix over the 4th roots of unity (entries = exponents):")
for row in m.entries():
    print("   ", ["." if e is None else f"a^{e}" for e in row])
print(f"its inverse composes to the identity: "
      f"{m * m.invert() == MonomialMatrix.identity(3, 4)}")
print()
for d, n in ((2, 2), (2, 3), (3, 2), (3, 1)):
    size = sum(1 for _ in monomial_matrices(d, n))
    note = " (just the permutation matrices)" if n == 1 else ""
    print(f"GL_{d} over the degree-{n} extension: order {size} = {gl_order(d, n)}{note}")

print()
print("=" * 72)
print("4. Restriction of scalars")
print("=" * 72)
space = F1nVectorSpace(1, 6)
print(f"a line over the degree-6 extension has {len(space.points)} nonzero points")
for m_ in (3, 2, 1):
    down = restrict_scalars(space, m_)
    image = sorted({restrict_scalars_point(space, m_, p) for p in space.points})
    print(f"  over the degree-{m_} subextension: {down.d} orbits of size {down.n}; "
          f"points map to {image}")
