"""Scalar layer: generalized binomials, p-adic valuations, Gaussian rationals."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from torsionforge.scalars import (
    GAUSSIAN_I,
    GaussianRational,
    INFINITY,
    gen_binom,
    is_prime,
    padic_valuation,
    rational_from_str,
    rational_to_str,
    scalar_from_json,
    scalar_to_json,
)

small_fractions = st.fractions(
    min_value=-50, max_value=50, max_denominator=20
)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)


# ---------------------------------------------------------------------------
# gen_binom against the integer oracle
# ---------------------------------------------------------------------------

@given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=12))
def test_gen_binom_matches_math_comb_on_integers(r, k):
    assert gen_binom(r, k) == math.comb(r, k)


def test_gen_binom_half_integer_values():
    # (1/2 choose 2) = (1/2)(-1/2)/2 = -1/8, a classic closed form
    assert gen_binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert gen_binom(Fraction(7, 2), 1) == Fraction(7, 2)
    assert gen_binom(Fraction(7, 2), 0) == 1


@given(st.fractions(min_value=-10, max_value=10, max_denominator=6),
       st.integers(min_value=1, max_value=8))
def test_gen_binom_pascal_identity(r, k):
    # C(r, k) = C(r-1, k-1) + C(r-1, k) holds for arbitrary upper argument
    assert gen_binom(r, k) == gen_binom(r - 1, k - 1) + gen_binom(r - 1, k)


def test_gen_binom_rejects_negative_lower_index():
    with pytest.raises(ValueError):
        gen_binom(Fraction(3, 2), -1)


# ---------------------------------------------------------------------------
# primality and p-adic valuations
# ---------------------------------------------------------------------------

def test_is_prime_small_table():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}
    for k in range(-3, 40):
        assert is_prime(k) is (k in primes)


@given(st.integers(min_value=-2000, max_value=2000).filter(lambda q: q != 0),
       st.sampled_from([2, 3, 5, 7]))
def test_padic_valuation_extracts_exact_power(q, p):
    val = padic_valuation(Fraction(q), p)
    reduced = Fraction(q) / Fraction(p) ** val
    assert reduced.numerator % p != 0
    assert reduced.denominator % p != 0


def test_padic_valuation_of_zero_is_infinite():
    assert padic_valuation(Fraction(0), 5) == INFINITY


def test_padic_valuation_negative_for_denominators():
    assert padic_valuation(Fraction(3, 8), 2) == -3
    assert padic_valuation(Fraction(9, 5), 3) == 2


def test_padic_valuation_requires_prime():
    with pytest.raises(ValueError):
        padic_valuation(Fraction(1, 2), 6)


@given(st.fractions(max_denominator=50).filter(lambda q: q != 0),
       st.fractions(max_denominator=50).filter(lambda q: q != 0),
       st.sampled_from([2, 3, 5]))
def test_padic_valuation_is_multiplicative(a, b, p):
    assert padic_valuation(a * b, p) == padic_valuation(a, p) + padic_valuation(b, p)


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

def test_imaginary_unit_squares_to_minus_one():
    assert GAUSSIAN_I * GAUSSIAN_I == -1
    assert GAUSSIAN_I ** 2 == GaussianRational(-1)
    assert GAUSSIAN_I ** 4 == 1


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(gaussians)
def test_gaussian_multiplicative_inverse(z):
    if z == 0:
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / z
    else:
        assert z * (GaussianRational(1) / z) == 1
        assert z ** -1 * z == 1


@given(gaussians)
def test_gaussian_norm_is_conjugate_product(z):
    assert GaussianRational(z.norm()) == z * z.conjugate()
    assert z.norm() >= 0


def test_gaussian_mixes_with_fractions():
    z = GaussianRational(Fraction(1, 2), Fraction(3, 4))
    assert z + Fraction(1, 2) == GaussianRational(1, Fraction(3, 4))
    assert Fraction(2) * z == GaussianRational(1, Fraction(3, 2))
    assert 2 * z - z == z


def test_gaussian_equality_with_rationals_when_imaginary_part_vanishes():
    assert GaussianRational(Fraction(5, 3)) == Fraction(5, 3)
    assert hash(GaussianRational(Fraction(5, 3))) == hash(Fraction(5, 3))
    assert GaussianRational(1, 1) != 1


def test_gaussian_is_immutable():
    z = GaussianRational(1, 2)
    with pytest.raises(AttributeError):
        z.re = Fraction(3)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

@given(small_fractions)
def test_rational_string_round_trip(q):
    assert rational_from_str(rational_to_str(q)) == q


def test_rational_to_str_is_canonical():
    assert rational_to_str(Fraction(4, 2)) == "2"
    assert rational_to_str(Fraction(-3, 9)) == "-1/3"


@given(st.one_of(small_fractions, gaussians))
def test_scalar_json_round_trip(s):
    assert scalar_from_json(scalar_to_json(s)) == s


def test_scalar_json_collapses_real_gaussians():
    # a Gaussian with zero imaginary part serializes as a plain rational
    assert scalar_to_json(GaussianRational(Fraction(3, 2))) == "3/2"
    encoded = scalar_to_json(GaussianRational(1, -2))
    assert encoded == {"re": "1", "im": "-2"}
