"""Curve rings A = k + f*k[t] and exact membership procedures.

A `CurveRing` is determined by a list of at least two nonconstant, pairwise
coprime polynomial factors.  Their product f (normalized monic) generates the
ideal I = f*k[t]; the ring under study is the subalgebra A = k + I of k[t],
and the operators of interest are those in k + f*W where W is the full
operator algebra of k[t] (see `nodalops.weyl`).

All universally quantified membership questions reduce to finitely many exact
divisions:

* p lies in I^n             iff  f^n divides p.
* p lies in A               iff  p mod f is a constant (that constant is the
                                 part of p outside the ideal).
* an operator D = sum p_j(t) d^j lies in k + f*W  iff  f divides p_j for all
  j >= 1 and p_0 mod f is a constant c; then D = c + f*D' with
  D' = ((p_0 - c)/f) + sum_{j>=1} (p_j/f) d^j, and the split is unique.
* D maps all of A into I    iff  the constant part c of that split is zero:
  writing D = c + f*D' gives D(a) = c*a + f*D'(a), the second summand always
  lands in I, and c*a in I for every a in A forces c = 0 (take a = 1).

Irreducibility of the factors is only decidable cheaply for degree <= 3 (the
rational-root test); higher-degree factors are accepted and recorded in
`unverified_factors`.  Every procedure here relies on pairwise coprimality
only, which *is* checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomials import Poly, poly_gcd
from .weyl import WeylOp


class CurveError(ValueError):
    """Invalid curve data (too few factors, constant or non-coprime factors)."""


@dataclass(frozen=True)
class OperatorSplit:
    """The unique split D = constant + f * cofactor of an operator in k + f*W."""

    constant: Fraction
    cofactor: WeylOp


class CurveRing:
    """The data (f_1, ..., f_r) with f = f_1 * ... * f_r, I = f*k[t], A = k + I."""

    __slots__ = ("factors", "f", "unverified_factors")

    def __init__(self, factors: Sequence[Poly], *, strict_irreducible: bool = False):
        factors = list(factors)
        if len(factors) < 2:
            raise CurveError("r >= 2 required: need at least two factors")
        for idx, p in enumerate(factors):
            if p.is_constant:
                raise CurveError(f"factor #{idx} is constant: {p}")
        for a in range(len(factors)):
            for b in range(a + 1, len(factors)):
                if poly_gcd(factors[a], factors[b]).degree > 0:
                    raise CurveError(
                        f"factors not pairwise coprime: gcd(#{a}, #{b}) = "
                        f"{poly_gcd(factors[a], factors[b])}"
                    )
        product = Poly.one()
        for p in factors:
            product = product * p
        # normalize f monic, folding the unit into the first factor
        lc = product.leading_coefficient()
        if lc != 1:
            factors[0] = factors[0].scale(1 / lc)
            product = product.scale(1 / lc)

        unverified = []
        for idx, p in enumerate(factors):
            status = irreducibility_status(p)
            if status == "reducible" and strict_irreducible:
                raise CurveError(f"factor #{idx} is reducible over the rationals: {p}")
            if status != "irreducible":
                unverified.append(idx)

        self.factors: tuple[Poly, ...] = tuple(factors)
        self.f: Poly = product
        self.unverified_factors: tuple[int, ...] = tuple(unverified)

    @property
    def r(self) -> int:
        return len(self.factors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CurveRing):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"CurveRing(f = {self.f}; factors: {', '.join(str(p) for p in self.factors)})"

    # -- membership procedures ------------------------------------------

    def in_ideal_power(self, p: Poly, n: int = 1) -> bool:
        """True iff p lies in I^n, i.e. f^n divides p.  I^0 is all of k[t]."""
        if n < 0:
            raise ValueError("negative ideal power")
        if n == 0:
            return True
        return p.divrem(self.f**n)[1].is_zero

    def subalgebra_constant(self, p: Poly) -> Fraction | None:
        """The constant c with p - c in I when p lies in A = k + I, else None."""
        rem = p.divrem(self.f)[1]
        if rem.is_constant:
            return rem.constant_value()
        return None

    def operator_split(self, op: WeylOp) -> OperatorSplit | None:
        """Split op as constant + f * cofactor, or None when op is not in k + f*W.

        Works coefficient-wise on the normal form: every d^j coefficient with
        j >= 1 must be exactly divisible by f, and the order-0 coefficient
        must reduce to a constant mod f.
        """
        cofactor_terms = WeylOp.zero()
        constant = Fraction(0)
        max_order = 0 if op.is_zero else int(op.order)
        for j in range(max_order + 1):
            pj = op.coefficient_poly(j)
            if pj.is_zero:
                continue
            quot, rem = pj.divrem(self.f)
            if j == 0:
                if not rem.is_constant:
                    return None
                constant = rem.constant_value()
            elif not rem.is_zero:
                return None
            cofactor_terms = cofactor_terms + WeylOp.from_poly(quot) * WeylOp.d() ** j
        return OperatorSplit(constant, cofactor_terms)

    def reassemble(self, split: OperatorSplit) -> WeylOp:
        """Inverse of `operator_split`: constant + f * cofactor."""
        return WeylOp.scalar(split.constant) + WeylOp.from_poly(self.f) * split.cofactor

    def maps_into_ideal(self, op: WeylOp) -> bool:
        """True iff op sends every element of A into I.

        Exact criterion (derivation in the module docstring): the constant
        part of the split vanishes.
        """
        split = self.operator_split(op)
        if split is None:
            raise ValueError("operator not in D_A (no constant + f*cofactor split)")
        return split.constant == 0

    # -- spanning families ------------------------------------------------

    def subalgebra_spanning_set(self, max_m: int) -> list[Poly]:
        """[1, f, f*t, ..., f*t^max_m]: spans A up to t-degree deg f + max_m."""
        return [Poly.one()] + self.ideal_spanning_set(max_m)

    def ideal_spanning_set(self, max_m: int) -> list[Poly]:
        """[f, f*t, ..., f*t^max_m]: spans I up to t-degree deg f + max_m."""
        return [self.f * Poly.monomial(m) for m in range(max_m + 1)]


def new_curve(factors: Sequence[Poly], *, strict_irreducible: bool = False) -> CurveRing:
    return CurveRing(factors, strict_irreducible=strict_irreducible)


def irreducibility_status(p: Poly) -> str:
    """Classify p over the rationals: 'irreducible', 'reducible' or 'unknown'.

    Degree 1 is always irreducible; degrees 2 and 3 are irreducible iff they
    have no rational root (rational-root test on the cleared-denominator
    form).  Higher degrees are not decided here.
    """
    deg = p.degree
    if deg <= 0:
        return "reducible"
    if deg == 1:
        return "irreducible"
    if deg > 3:
        return "unknown"
    return "reducible" if _has_rational_root(p) else "irreducible"


def _has_rational_root(p: Poly) -> bool:
    # clear denominators to integer coefficients
    denom_lcm = 1
    for _, c in p.items():
        denom_lcm = _lcm(denom_lcm, c.denominator)
    ints = {deg: int(c * denom_lcm) for deg, c in p.items()}
    if 0 not in ints:
        return True  # root at 0
    lead = ints[max(ints)]
    const = ints[0]
    for num in _divisors(abs(const)):
        for den in _divisors(abs(lead)):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if p(cand) == 0:
                    return True
    return False


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


# -- the built-in example curve ---------------------------------------------


def nodal_cubic() -> CurveRing:
    """The preset curve with factors t - 1 and t + 1, so f = t^2 - 1.

    A = k + (t^2 - 1)k[t] is the coordinate ring of the plane cubic
    y^2 = x^2 (x + 1) with a node at the origin; see
    `nodal_cubic_embedding` for the identification.
    """
    return CurveRing([Poly({1: 1, 0: -1}), Poly({1: 1, 0: 1})])


def nodal_cubic_embedding() -> tuple[Poly, Poly]:
    """Images of the plane coordinates: x -> t^2 - 1, y -> t(t^2 - 1)."""
    return Poly({2: 1, 0: -1}), Poly({3: 1, 1: -1})


def verify_nodal_cubic_embedding(curve: CurveRing, x_image: Poly, y_image: Poly) -> bool:
    """Check that (x_image, y_image) solves y^2 = x^2 (x + 1) inside A.

    True iff y_image^2 - x_image^2 * (x_image + 1) is the zero polynomial and
    both images lie in the subalgebra A of the given curve.
    """
    relation = y_image * y_image - x_image * x_image * (x_image + Poly.one())
    if not relation.is_zero:
        return False
    return (
        curve.subalgebra_constant(x_image) is not None
        and curve.subalgebra_constant(y_image) is not None
    )
