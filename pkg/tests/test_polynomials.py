import random
from fractions import Fraction

import pytest

from nodalops import Poly, poly_gcd
from nodalops.polynomials import MINUS_INFINITY
from nodalops.sampling import random_poly

F = Poly({2: 1, 0: -1})  # t^2 - 1


# -- addition -----------------------------------------------------------------


def test_add_cancels_constant():
    assert F + Poly.one() == Poly({2: 1})


def test_add_zero_is_identity():
    assert F + Poly.zero() == F


def test_add_doubles_coefficients():
    assert F + F == Poly({2: 2, 0: -2})


# -- multiplication -------------------------------------------------------------


def test_mul_difference_of_squares():
    assert Poly({1: 1, 0: -1}) * Poly({1: 1, 0: 1}) == F


def test_mul_one_is_identity():
    assert F * Poly.one() == F


def test_square_of_f():
    assert F * F == Poly({4: 1, 2: -2, 0: 1})


def test_pow_matches_repeated_mul():
    assert F**3 == F * F * F
    assert F**0 == Poly.one()


# -- division ---------------------------------------------------------------------


def test_divrem_with_constant_remainder():
    q, r = Poly({2: 1, 0: 4}).divrem(F)
    assert q == Poly.one()
    assert r == Poly.constant(5)


def test_divrem_self():
    assert F.divrem(F) == (Poly.one(), Poly.zero())


def test_divrem_exact_multiple():
    q, r = Poly({3: 2, 1: -2}).divrem(F)
    assert q == Poly({1: 2})
    assert r.is_zero


def test_divrem_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        F.divrem(Poly.zero())


# -- gcd -------------------------------------------------------------------------


def test_gcd_coprime_linear_factors():
    assert poly_gcd(Poly({1: 1, 0: -1}), Poly({1: 1, 0: 1})) == Poly.one()


def test_gcd_of_equal_arguments_is_monic():
    p = Poly({2: 2, 0: -2})
    assert poly_gcd(p, p) == F


def test_gcd_shared_root():
    assert poly_gcd(F, Poly({2: 1, 1: -2, 0: 1})) == Poly({1: 1, 0: -1})


def test_gcd_of_two_zeros_raises():
    with pytest.raises(ValueError):
        poly_gcd(Poly.zero(), Poly.zero())


# -- derivative / evaluation --------------------------------------------------------


def test_derivative_power_rule():
    assert F.derivative() == Poly({1: 2})


def test_derivative_of_constant():
    assert Poly.constant(7).derivative().is_zero


def test_derivative_termwise():
    assert Poly({4: 1, 2: -2, 0: 1}).derivative() == Poly({3: 4, 1: -4})


def test_eval_at_root():
    assert F(1) == 0


def test_eval_zero_poly():
    assert Poly.zero()(Fraction(7, 3)) == 0


def test_eval_plain_value():
    assert Poly({4: 1, 2: -2, 0: 1})(2) == 9


# -- degree bookkeeping ----------------------------------------------------------------


def test_zero_polynomial_degree_sentinel():
    assert Poly.zero().degree == MINUS_INFINITY
    assert (F * Poly.zero()).degree == MINUS_INFINITY


def test_degree_additive_under_product():
    rng = random.Random(11)
    for _ in range(50):
        p = random_poly(rng, 5, nonzero=True)
        q = random_poly(rng, 5, nonzero=True)
        assert (p * q).degree == p.degree + q.degree


# -- randomized ring properties -----------------------------------------------------------


def test_divrem_roundtrip_random():
    rng = random.Random(1)
    for _ in range(200):
        d = random_poly(rng, 5, nonzero=True)
        q = random_poly(rng, 5)
        r = random_poly(rng, max(0, int(d.degree) - 1))
        if not r.is_zero and r.degree >= d.degree:
            continue
        assert (q * d + r).divrem(d) == (q, r)


def test_ring_axioms_random():
    rng = random.Random(2)
    for _ in range(100):
        p, q, s = (random_poly(rng, 4) for _ in range(3))
        assert (p + q) + s == p + (q + s)
        assert p + q == q + p
        assert (p * q) * s == p * (q * s)
        assert p * q == q * p
        assert p * (q + s) == p * q + p * s


def test_gcd_divides_both_and_is_monic():
    rng = random.Random(3)
    for _ in range(100):
        p = random_poly(rng, 5)
        q = random_poly(rng, 5)
        if p.is_zero and q.is_zero:
            continue
        g = poly_gcd(p, q)
        assert g.leading_coefficient() == 1
        assert p.divrem(g)[1].is_zero
        assert q.divrem(g)[1].is_zero


def test_leibniz_rule_random():
    rng = random.Random(4)
    for _ in range(100):
        p = random_poly(rng, 5)
        q = random_poly(rng, 5)
        assert (p * q).derivative() == p.derivative() * q + p * q.derivative()
