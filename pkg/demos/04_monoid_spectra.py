"""Monoid spectra and base extension.

Affine geometry over the one-element base is the geometry of pointed
commutative monoids.  Prime ideals have multiplicatively closed
complements; the spectrum of the free monoid on n generators has 2^n of
them, while inverting a generator erases primes.  Counting monoid
morphisms into the multiplicative monoid of F_q counts the F_q-points of
the base-extended affine scheme.
"""

from f1zeta import MonoidPresentation, coordinate_monoid, corpus

print("=" * 72)
print("1. Spectra")
print("=" * 72)
for text in ("gens x;", "gens x y;", "gens x y; rel x*y = 1;", ""):
    pres = MonoidPresentation.parse(text)
    primes = pres.spec()
    label = text if text else "(no generators)"
    print(f"{label:30s} -> {len(primes)} primes: "
          + ", ".join(str(p) for p in primes))
print()
print("A nilpotent relation removes the zero ideal from the spectrum:")
nil = MonoidPresentation.parse("gens x; rel x^2 = 0;")
print(f"  gens x; rel x^2 = 0;  ->  {[str(p) for p in nil.spec()]}")

print()
print("=" * 72)
print("2. The maximal ideal and localization")
print("=" * 72)
pres = MonoidPresentation.parse("gens x y;")
top = pres.maximal_ideal()
print(f"maximal ideal of the free monoid on x, y: {top}")
print("localizing there adds nothing (everything outside is already a unit):")
print(f"  {pres.localize(top).render()!r}")
at_x = pres.localize(next(p for p in pres.spec() if str(p) == "(x)"))
print(f"localizing at (x) inverts y: {at_x.render()!r}")

print()
print("=" * 72)
print("3. Hom counting = point counting")
print("=" * 72)
plane = MonoidPresentation.parse("gens x y;")
units = MonoidPresentation.parse("gens x y; rel x*y = 1;")
for q in (2, 3, 4, 5, 7, 8, 9):
    print(f"  F_{q}: affine plane {plane.hom_count(q):3d} points, "
          f"multiplicative group {units.hom_count(q):2d}")
print("(q^2 and q - 1: the hom sets see the scheme structure exactly)")

print()
print("=" * 72)
print("4. Local charts of a loose graph")
print("=" * 72)
diamond = corpus.diamond()
for v in sorted(diamond.vertices):
    chart = coordinate_monoid(diamond, v)
    print(f"vertex {v}: degree {diamond.degree(v)}, "
          f"chart {chart.render() or 'gens;':20s} "
          f"points over F_3: {chart.hom_count(3)}")
