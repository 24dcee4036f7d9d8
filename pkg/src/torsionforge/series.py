"""Truncated binomial series (1+x)**r cut to a fixed length.

For a noninteger rational exponent r = m/d and a truncation length E,
the series V(x) = sum_{k<E} binom(r, k) x**k is the unique polynomial of
degree < E with (1+x)**m - V**d vanishing to order exactly E at x = 0,
provided m > d*(E-1).  That exact vanishing order is what lets a curve
of degree n = m - d*E carry a point whose pole divisor reaches order m,
so this module is the engine room of the n+e*d constructions.

Two classical identities are exposed as checked invariants:

* recurrence: V_{r,E}(x) = (1+x) * V_{r-1,E-1}(x) + binom(r-1, E-1) * x**(E-1)
* derivative: V_{r,E}'(x) = r * V_{r-1,E-1}(x)

(The correction term of the recurrence carries binom(r-1, E-1); writing
binom(r-1, E) there is a classic slip, which the test suite pins down.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .polyring import Poly, exact_div, valuation_at_zero
from .scalars import PAdicValue, gen_binom, is_prime, padic_valuation


class HypothesisError(ValueError):
    """An inequality hypothesis required by a construction fails."""


@dataclass(frozen=True)
class TruncationSpec:
    """Exponent data m/d with truncation length E.

    Invariants: d >= 2, m >= 1, gcd(m, d) == 1 (so the exponent r = m/d
    is a noninteger rational), E >= 1.
    """

    m: int
    d: int
    E: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("denominator d must be at least 2, got %r" % (self.d,))
        if self.m < 1:
            raise ValueError("numerator m must be positive, got %r" % (self.m,))
        if self.E < 1:
            raise ValueError("truncation length E must be >= 1, got %r" % (self.E,))
        if int_gcd(self.m, self.d) != 1:
            raise ValueError(
                "exponent m/d must be in lowest terms with d > 1: gcd(%d, %d) != 1"
                % (self.m, self.d)
            )

    @property
    def r(self) -> Fraction:
        return Fraction(self.m, self.d)


def truncated_binomial(spec: TruncationSpec) -> Poly:
    """The polynomial sum_{k<E} binom(m/d, k) x**k, of degree exactly E-1."""
    r = spec.r
    return Poly(tuple(gen_binom(r, k) for k in range(spec.E)))


def check_truncation_valuation(spec: TruncationSpec) -> int:
    """Order of vanishing of (1+x)**m - V**d at x = 0.

    Requires the hypothesis m > d*(E-1); under it the order is exactly E
    (the first E coefficients cancel by construction and the next one is
    d * binom(r-1, E-1) * ... != 0).  The returned value is computed, not
    assumed, so callers can assert it.
    """
    floor = spec.d * (spec.E - 1)
    if spec.m <= floor:
        raise HypothesisError(
            "need m > d*(E-1): m=%d, d*(E-1)=%d" % (spec.m, floor)
        )
    v = truncated_binomial(spec)
    diff = Poly((1, 1)) ** spec.m - v ** spec.d
    if diff.is_zero:
        raise HypothesisError("(1+x)^m equals V^d; no finite vanishing order")
    return valuation_at_zero(diff)


def truncation_quotient(spec: TruncationSpec) -> Poly:
    """((1+x)**m - V**d) / x**E, exact; a degree m - E polynomial.

    Only meaningful under the same hypothesis as
    :func:`check_truncation_valuation`; raises DivisibilityError if the
    vanishing order falls short (it cannot, but the division is exact
    rather than trusting that).
    """
    v = truncated_binomial(spec)
    diff = Poly((1, 1)) ** spec.m - v ** spec.d
    return exact_div(diff, Poly.x_power(spec.E))


def nonvanishing_at_minus_one(spec: TruncationSpec, p: int) -> tuple[bool, PAdicValue]:
    """Whether V(-1) != 0, witnessed p-adically for a prime p dividing d.

    Returns (V(-1) != 0, v_p(V(-1))).  The valuation is negative for
    every prime divisor p of d: the last term binom(r, E-1) contributes a
    p-power denominator that nothing else in the alternating sum can
    cancel.  A negative valuation certifies nonvanishing without any
    appeal to real approximation.
    """
    if not is_prime(p):
        raise ValueError("p must be prime, got %r" % (p,))
    if spec.d % p != 0:
        raise ValueError("p=%d does not divide d=%d" % (p, spec.d))
    value = truncated_binomial(spec)(Fraction(-1))
    return (value != 0, padic_valuation(value, p))
