"""Zeta functions attached to a counting polynomial.

A scheme whose F_q-point count is a polynomial N(q) = sum a_k q^k has

* an F1-zeta function  prod_k (s - k)^(-a_k), stored exactly as the
  exponent map ``k -> a_k`` (:class:`ZetaF1`);
* a local factor over F_p,  prod_k (1 - p^(k-s))^(-a_k);
* an arithmetic zeta, the formal product  prod_k zeta(s - k)^(a_k),
  rendered symbolically only.

The local factor admits two power-series expansions in T = p^(-s) which
must agree coefficient by coefficient: the Euler-product expansion
(:func:`local_zeta_series`) and exp of the point-count generating series
(:func:`counting_series`).  Both use exact rational arithmetic.  The only
floating-point computation in this module is :func:`limit_check`, which
watches the local factor converge to the F1-zeta value as p drops to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import IntPolynomial


@dataclass(frozen=True)
class ZetaF1:
    """The function prod_k (t - k)^(-a_k) as the exact map k -> a_k.

    ``factors`` holds ``(k, a_k)`` pairs with nonzero a_k, sorted by k.
    Positive a_k are poles, negative a_k zeros; the exponent sum is the
    point count over F1 (the Euler characteristic).
    """

    factors: tuple

    def __post_init__(self):
        pairs = tuple(sorted((int(k), int(a)) for k, a in self.factors if a))
        if any(k < 0 for k, _ in pairs):
            raise ValueError("exponents must sit at nonnegative integers")
        if len({k for k, _ in pairs}) != len(pairs):
            raise ValueError("duplicate exponent keys")
        object.__setattr__(self, "factors", pairs)

    @classmethod
    def from_dict(cls, exponents: dict) -> "ZetaF1":
        return cls(tuple(exponents.items()))

    @property
    def exponents(self) -> dict:
        return dict(self.factors)

    @property
    def euler_characteristic(self) -> int:
        return sum(a for _, a in self.factors)

    def value(self, s: float) -> float:
        """Evaluate prod (s - k)^(-a_k); raises at a pole."""
        result = 1.0
        for k, a in self.factors:
            base = s - k
            if base == 0 and a > 0:
                raise ValueError(f"s = {k} is a pole")
            result *= float(base) ** (-a)
        return result

    def render(self, var: str = "t") -> str:
        """Factored string such as ``1/(t(t-1)(t-2))`` or ``(t-1)^2/t^3``."""

        def factor(k, e):
            base = var if k == 0 else f"({var}-{k})"
            return base if e == 1 else f"{base}^{e}"

        num = [factor(k, -a) for k, a in self.factors if a < 0]
        den = [factor(k, a) for k, a in self.factors if a > 0]
        top = "".join(num) if num else "1"
        if not den:
            return top
        bottom = "".join(den)
        if len(den) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def to_json(self) -> list:
        return [{"root": k, "multiplicity": a} for k, a in self.factors]


def zeta_from_polynomial(p: IntPolynomial) -> ZetaF1:
    """Read the exponent map straight off the counting polynomial."""
    return ZetaF1(tuple(p.coefficients().items()))


def polynomial_from_zeta(z: ZetaF1) -> IntPolynomial:
    """Inverse of :func:`zeta_from_polynomial`."""
    return IntPolynomial(z.exponents, var="L")


def euler_characteristic(p: IntPolynomial) -> int:
    """Coefficient sum; the number of points over F1."""
    return p(1)


@dataclass(frozen=True)
class PowerSeriesZ:
    """Truncated power series with exact rational coefficients.

    ``coefficients`` has length ``order + 1``; all arithmetic truncates at
    ``order``.
    """

    order: int
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != self.order + 1:
            raise ValueError("coefficient count must be order + 1")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def one(cls, order: int) -> "PowerSeriesZ":
        return cls(order, (Fraction(1),) + (Fraction(0),) * order)

    @classmethod
    def from_terms(cls, order: int, terms: dict) -> "PowerSeriesZ":
        coeffs = [Fraction(terms.get(m, 0)) for m in range(order + 1)]
        return cls(order, tuple(coeffs))

    @classmethod
    def geometric(cls, order: int, ratio) -> "PowerSeriesZ":
        """1/(1 - ratio*T) up to the truncation order."""
        coeffs = [Fraction(1)]
        for _ in range(order):
            coeffs.append(coeffs[-1] * ratio)
        return cls(order, tuple(coeffs))

    def __mul__(self, other: "PowerSeriesZ") -> "PowerSeriesZ":
        if self.order != other.order:
            raise ValueError("truncation orders differ")
        a, b = self.coefficients, other.coefficients
        out = []
        for m in range(self.order + 1):
            out.append(sum(a[j] * b[m - j] for j in range(m + 1)))
        return PowerSeriesZ(self.order, tuple(out))

    def exp(self) -> "PowerSeriesZ":
        """exp of a series with zero constant term."""
        if self.coefficients[0] != 0:
            raise ValueError("exp needs a zero constant term")
        a = self.coefficients
        e = [Fraction(1)] + [Fraction(0)] * self.order
        for m in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, m + 1):
                acc += j * a[j] * e[m - j]
            e[m] = acc / m
        return PowerSeriesZ(self.order, tuple(e))


def local_zeta_series(p: IntPolynomial, prime: int, order: int = 10) -> PowerSeriesZ:
    """Expansion of prod_k (1 - prime^k T)^(-a_k) in T up to ``order``.

    T stands for prime^(-s); a negative a_k contributes polynomial factors
    (1 - prime^k T) instead of geometric series.
    """
    _check_series_args(prime, order)
    series = PowerSeriesZ.one(order)
    for k, a in sorted(p.coefficients().items()):
        if a > 0:
            factor = PowerSeriesZ.geometric(order, prime**k)
            for _ in range(a):
                series = series * factor
        else:
            factor = PowerSeriesZ.from_terms(order, {0: 1, 1: -(prime**k)})
            for _ in range(-a):
                series = series * factor
    return series


def counting_series(p: IntPolynomial, prime: int, order: int = 10) -> PowerSeriesZ:
    """exp( sum_{m>=1} N(prime^m) T^m / m ) with N the counting polynomial."""
    _check_series_args(prime, order)
    terms = {m: Fraction(p(prime**m), m) for m in range(1, order + 1)}
    return PowerSeriesZ.from_terms(order, terms).exp()


def _check_series_args(prime: int, order: int):
    if prime < 2:
        raise ValueError("prime must be at least 2")
    if order < 1:
        raise ValueError("order must be at least 1")


def render_arithmetic_zeta(p: IntPolynomial, ascii_zeta: bool = False) -> str:
    """Symbolic arithmetic zeta prod_k zeta(s-k)^(a_k).

    Factors are sorted by k ascending; exponents of magnitude one are
    omitted; negative exponents move to the denominator, e.g. the
    multiplicative group renders as ``ζ(s-1)/ζ(s)``.
    """
    sym = "zeta" if ascii_zeta else "ζ"

    def factor(k, e):
        base = f"{sym}(s)" if k == 0 else f"{sym}(s-{k})"
        return base if e == 1 else f"{base}^{e}"

    coeffs = sorted(p.coefficients().items())
    num = [factor(k, a) for k, a in coeffs if a > 0]
    den = [factor(k, -a) for k, a in coeffs if a < 0]
    top = "".join(num) if num else "1"
    if not den:
        return top
    bottom = "".join(den)
    if len(den) > 1:
        bottom = f"({bottom})"
    return f"{top}/{bottom}"


def local_zeta_value(z: ZetaF1, s: float, p: float) -> float:
    """The local factor prod_k (1 - p^(k-s))^(-a_k) at real s and p > 1."""
    if p <= 1:
        raise ValueError("p must exceed 1")
    result = 1.0
    for k, a in z.factors:
        g = -math.expm1((k - s) * math.log(p))
        if g == 0 and a > 0:
            raise ValueError(f"s = {k} is a pole of the local factor")
        result *= g ** (-a)
    return result


def limit_check(z: ZetaF1, s: float, p: float) -> float:
    """Evaluate local_factor(s, p) * (p - 1)^chi, chi the Euler characteristic.

    As p decreases to 1 this converges to ``z.value(s)`` with error O(p-1);
    ``s`` must avoid the integers 0..max k.
    """
    top = max((k for k, _ in z.factors), default=0)
    if s == int(s) and 0 <= int(s) <= top:
        raise ValueError(f"s = {s} lies on a root of the zeta function")
    return local_zeta_value(z, s, p) * (p - 1) ** z.euler_characteristic
