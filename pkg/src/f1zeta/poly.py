"""Sparse integer polynomials in one indeterminate, with exact arithmetic.

All coefficients are plain Python ints, so there is no precision ceiling.
The same class backs the Grothendieck classes (variable ``L``) and the
q-analog calculators (variable ``q``); the variable name only affects
rendering, never equality.
"""

from __future__ import annotations

from fractions import Fraction

NEG_INFINITY = float("-inf")


class IntPolynomial:
    """Immutable integer polynomial stored as a degree -> coefficient map.

    Zero coefficients are never stored.  The degree of the zero polynomial
    is the sentinel ``float("-inf")``.
    """

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs=None, var: str = "x"):
        table = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, int):
            if coeffs:
                table[0] = coeffs
        elif isinstance(coeffs, IntPolynomial):
            table = dict(coeffs._coeffs)
        else:
            for deg, c in dict(coeffs).items():
                if not isinstance(deg, int) or deg < 0:
                    raise ValueError(f"invalid degree {deg!r}")
                if not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an integer")
                if c:
                    table[deg] = c
        object.__setattr__(self, "_coeffs", table)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- inspection ---------------------------------------------------

    @property
    def degree(self):
        """Largest degree with a nonzero coefficient; -inf for zero."""
        return max(self._coeffs) if self._coeffs else NEG_INFINITY

    def coefficient(self, degree: int) -> int:
        return self._coeffs.get(degree, 0)

    def coefficients(self) -> dict:
        """Copy of the degree -> coefficient map (nonzero entries only)."""
        return dict(self._coeffs)

    def to_coefficient_list(self) -> list:
        """Dense ascending coefficient list; empty for the zero polynomial."""
        if not self._coeffs:
            return []
        top = max(self._coeffs)
        return [self._coeffs.get(k, 0) for k in range(top + 1)]

    @classmethod
    def from_coefficient_list(cls, coeffs, var: str = "x") -> "IntPolynomial":
        return cls({k: c for k, c in enumerate(coeffs)}, var=var)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, var: str = "x") -> "IntPolynomial":
        return cls({degree: coeff}, var=var)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial(other, var=self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        table = dict(self._coeffs)
        for k, c in other._coeffs.items():
            table[k] = table.get(k, 0) + c
        return IntPolynomial(table, var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({k: -c for k, c in self._coeffs.items()}, var=self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        table = {}
        for i, a in self._coeffs.items():
            for j, b in other._coeffs.items():
                table[i + j] = table.get(i + j, 0) + a * b
        return IntPolynomial(table, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = IntPolynomial(1, var=self.var)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Divide by ``other``, requiring a zero remainder and integer quotient."""
        other = self._coerce(other)
        if other is None or not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = {k: Fraction(c) for k, c in self._coeffs.items()}
        quo = {}
        d = other.degree
        lead = Fraction(other._coeffs[d])
        while rem:
            k = max(rem)
            if k < d:
                break
            f = rem[k] / lead
            quo[k - d] = f
            for j, b in other._coeffs.items():
                key = k - d + j
                val = rem.get(key, Fraction(0)) - f * b
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        if rem:
            raise ValueError("division is not exact")
        if any(f.denominator != 1 for f in quo.values()):
            raise ValueError("quotient has non-integer coefficients")
        return IntPolynomial({k: int(f) for k, f in quo.items()}, var=self.var)

    def __call__(self, x):
        """Evaluate at ``x``; exact for int and Fraction arguments."""
        total = 0
        for k, c in self._coeffs.items():
            total += c * x**k
        return total

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    # -- rendering ------------------------------------------------------

    def render(self, var: str | None = None) -> str:
        """Descending-degree string such as ``q^4+q^3+2q^2+q+1``."""
        var = self.var if var is None else var
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs, reverse=True):
            c = self._coeffs[k]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign}{body}")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"IntPolynomial({self._coeffs!r}, var={self.var!r})"
