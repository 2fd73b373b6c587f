"""Exact univariate polynomial arithmetic over the rationals.

Coefficients are `fractions.Fraction` throughout, so every operation in this
package is exact; there is no floating point anywhere.  A polynomial is stored
as a sparse map ``degree -> Fraction`` with no zero entries, which makes
equality structural: two polynomials are equal iff their coefficient maps are.

The zero polynomial is the empty map.  Its degree is the sentinel
``MINUS_INFINITY``, chosen so that ``deg(p*q) == deg(p) + deg(q)`` holds
without special cases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Rational = Fraction
RationalLike = Union[Fraction, int]

MINUS_INFINITY = float("-inf")


class Poly:
    """A univariate polynomial in t with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, RationalLike] | None = None):
        cleaned: dict[int, Fraction] = {}
        if coeffs:
            for deg, c in coeffs.items():
                if deg < 0:
                    raise ValueError(f"negative degree {deg}")
                c = Fraction(c)
                if c != 0:
                    cleaned[int(deg)] = c
        self._coeffs = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls({0: 1})

    @classmethod
    def t(cls) -> Poly:
        return cls({1: 1})

    @classmethod
    def constant(cls, c: RationalLike) -> Poly:
        return cls({0: Fraction(c)})

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> Poly:
        return cls({degree: Fraction(coeff)})

    @classmethod
    def from_int_coeffs(cls, ascending: Iterable[RationalLike]) -> Poly:
        """Build from a dense ascending coefficient list, e.g. [-1, 0, 1]."""
        return cls({i: Fraction(c) for i, c in enumerate(ascending)})

    # -- inspection ---------------------------------------------------

    @property
    def degree(self) -> int | float:
        return max(self._coeffs) if self._coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return self._coeffs.get(0, Fraction(0))

    def coefficient(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, Fraction(0))

    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[max(self._coeffs)]

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self._coeffs.items()))

    # -- ring operations ----------------------------------------------

    def __add__(self, other: Poly) -> Poly:
        out = dict(self._coeffs)
        for deg, c in other._coeffs.items():
            s = out.get(deg, Fraction(0)) + c
            if s:
                out[deg] = s
            else:
                out.pop(deg, None)
        p = Poly.__new__(Poly)
        p._coeffs = out
        return p

    def __neg__(self) -> Poly:
        p = Poly.__new__(Poly)
        p._coeffs = {deg: -c for deg, c in self._coeffs.items()}
        return p

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        out: dict[int, Fraction] = {}
        for da, ca in self._coeffs.items():
            for db, cb in other._coeffs.items():
                deg = da + db
                s = out.get(deg, Fraction(0)) + ca * cb
                if s:
                    out[deg] = s
                else:
                    out.pop(deg, None)
        p = Poly.__new__(Poly)
        p._coeffs = out
        return p

    def scale(self, c: RationalLike) -> Poly:
        c = Fraction(c)
        if c == 0:
            return Poly.zero()
        p = Poly.__new__(Poly)
        p._coeffs = {deg: c * v for deg, v in self._coeffs.items()}
        return p

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divrem(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Exact long division: self = q*divisor + r with deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q: dict[int, Fraction] = {}
        r = dict(self._coeffs)
        ddeg = divisor.degree
        dlc = divisor.leading_coefficient()
        while r and max(r) >= ddeg:
            rdeg = max(r)
            c = r[rdeg] / dlc
            shift = rdeg - ddeg
            q[shift] = c
            for deg, v in divisor._coeffs.items():
                key = deg + shift
                s = r.get(key, Fraction(0)) - c * v
                if s:
                    r[key] = s
                else:
                    r.pop(key, None)
        quot = Poly.__new__(Poly)
        quot._coeffs = q
        rem = Poly.__new__(Poly)
        rem._coeffs = r
        return quot, rem

    def divides(self, other: Poly) -> bool:
        return other.divrem(self)[1].is_zero

    def monic(self) -> Poly:
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(1 / self.leading_coefficient())

    def derivative(self) -> Poly:
        p = Poly.__new__(Poly)
        p._coeffs = {deg - 1: c * deg for deg, c in self._coeffs.items() if deg > 0}
        return p

    def __call__(self, x: RationalLike) -> Fraction:
        x = Fraction(x)
        return sum((c * x**deg for deg, c in self._coeffs.items()), Fraction(0))

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- printing -------------------------------------------------------

    def __str__(self) -> str:
        terms = [(c, _power_str("t", deg)) for deg, c in sorted(self._coeffs.items(), reverse=True)]
        return join_signed_terms(terms)

    def __repr__(self) -> str:
        return f"Poly({{{', '.join(f'{d}: {c}' for d, c in self.items())}}})"


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor, by the Euclidean algorithm."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a.divrem(b)[1]
    return a.monic()


def _power_str(symbol: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}"


def join_signed_terms(terms: list[tuple[Fraction, str]]) -> str:
    """Render (coefficient, monomial) pairs as ``a t^2 - b t + c`` style text.

    The output re-parses under the expression grammar: coefficients print as
    exact ``p/q`` literals and signs become binary +/- separators (a leading
    minus is attached to the first term).
    """
    if not terms:
        return "0"
    parts: list[str] = []
    for idx, (coeff, mono) in enumerate(terms):
        negative = coeff < 0
        mag = -coeff if negative else coeff
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag} {mono}"
        else:
            body = str(mag)
        if idx == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)
