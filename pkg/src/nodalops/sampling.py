"""Seeded random generators for curve-ring elements, operators and pair lists.

Certificate replay regenerates randomized check batteries from the recorded
seed, so the generation procedures here are part of the certificate format:
any change to the draw order or distributions invalidates previously emitted
files and requires a schema version bump.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .curves import CurveRing
from .polynomials import Poly
from .weyl import WeylOp


def random_fraction(rng: random.Random, span: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice((1, 1, 1, 2, 3)))


def random_poly(rng: random.Random, max_deg: int, *, nonzero: bool = False) -> Poly:
    """A random polynomial of degree <= max_deg with small rational coefficients."""
    while True:
        deg = rng.randint(0, max_deg)
        coeffs = {d: random_fraction(rng) for d in range(deg + 1)}
        p = Poly(coeffs)
        if not (nonzero and p.is_zero):
            return p


def random_operator(rng: random.Random, max_deg: int, max_order: int) -> WeylOp:
    """A random operator with t-exponents <= max_deg and order <= max_order."""
    n_terms = rng.randint(1, 4)
    terms: dict[tuple[int, int], Fraction] = {}
    for _ in range(n_terms):
        key = (rng.randint(0, max_deg), rng.randint(0, max_order))
        terms[key] = terms.get(key, Fraction(0)) + random_fraction(rng)
    return WeylOp(terms)


def random_word(rng: random.Random, max_len: int) -> tuple[str, ...]:
    return tuple(rng.choice("td") for _ in range(rng.randint(0, max_len)))


def random_subalgebra_element(rng: random.Random, curve: CurveRing, max_deg: int) -> Poly:
    """constant + f*h for random constant and random h: an element of A."""
    return Poly.constant(random_fraction(rng)) + curve.f * random_poly(rng, max_deg)


def random_ideal_element(rng: random.Random, curve: CurveRing, max_deg: int) -> Poly:
    """f*h for random h: an element of I (possibly zero)."""
    return curve.f * random_poly(rng, max_deg)


def random_da_operator(
    rng: random.Random, curve: CurveRing, max_deg: int, max_order: int
) -> WeylOp:
    """constant + f*D' for random constant and D': an operator in k + f*W."""
    constant = random_fraction(rng)
    dprime = random_operator(rng, max_deg, max_order)
    return WeylOp.scalar(constant) + WeylOp.from_poly(curve.f) * dprime


def random_ideal_operator(
    rng: random.Random, curve: CurveRing, max_deg: int, max_order: int
) -> WeylOp:
    """f*D' for random D': an operator in f*W (zero constant part)."""
    return WeylOp.from_poly(curve.f) * random_operator(rng, max_deg, max_order)


def random_non_da_operator(
    rng: random.Random, curve: CurveRing, max_deg: int, max_order: int
) -> WeylOp:
    """An operator certainly outside k + f*W.

    Built as a random inside operator plus a single term c*t^m d^j with
    0 <= m < deg f and j >= 1: the d^j coefficient then has an f-indivisible
    remainder, so no split exists.
    """
    base = random_da_operator(rng, curve, max_deg, max_order)
    j = rng.randint(1, max(1, max_order))
    m = rng.randint(0, int(curve.f.degree) - 1)
    c = Fraction(rng.randint(1, 4)) * rng.choice((1, -1))
    return base + WeylOp({(m, j): c})


def random_pairs(
    rng: random.Random,
    curve: CurveRing,
    max_pairs: int,
    *,
    max_deg: int = 3,
    max_order: int = 3,
) -> list[tuple[Poly, WeylOp]]:
    """A random list of (subalgebra element, operator) pairs; may be empty."""
    n = rng.randint(0, max_pairs)
    return [
        (
            random_subalgebra_element(rng, curve, max_deg),
            random_da_operator(rng, curve, max_deg, max_order),
        )
        for _ in range(n)
    ]


def random_operator_pairs(
    rng: random.Random,
    curve: CurveRing,
    max_pairs: int,
    *,
    max_deg: int = 3,
    max_order: int = 3,
) -> list[tuple[WeylOp, WeylOp]]:
    """A random list of operator pairs, both sides in k + f*W; may be empty."""
    n = rng.randint(0, max_pairs)
    return [
        (
            random_da_operator(rng, curve, max_deg, max_order),
            random_da_operator(rng, curve, max_deg, max_order),
        )
        for _ in range(n)
    ]
