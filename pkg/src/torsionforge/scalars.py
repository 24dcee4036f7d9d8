"""Exact scalar arithmetic: rationals, Gaussian rationals, generalized
binomial coefficients, and p-adic valuations.

Two coefficient fields are supported.  Plain rationals are
``fractions.Fraction`` values (re-exported as :data:`Rational`); the
Fraction type keeps every value in lowest terms with a positive
denominator, so equality is plain component comparison and string
serialization is canonical.  :class:`GaussianRational` adjoins a square
root of -1.  It is the only field extension the package needs: it houses
the constant ``lam`` with ``lam**2 == -1`` that appears in point
ordinates on curves of cover degree 2.  Larger cyclotomic fields are
deliberately out of scope.

Everything in this module is immutable and purely functional.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Fraction

#: p-adic valuation of zero; compares greater than every integer.
INFINITY = float("inf")

PAdicValue = Union[int, float]

Scalar = Union[Fraction, "GaussianRational"]


def is_prime(p: int) -> bool:
    """Deterministic primality by trial division (inputs here are small)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    k = 3
    r = isqrt(p)
    while k <= r:
        if p % k == 0:
            return False
        k += 2
    return True


def gen_binom(r: Union[int, Fraction], k: int) -> Fraction:
    """Generalized binomial coefficient binom(r, k) for rational r.

    Defined by the falling factorial r(r-1)...(r-k+1)/k!.  For a
    noninteger rational r the value is nonzero for every k >= 0, because
    no factor of the falling factorial can vanish.
    """
    if k < 0:
        raise ValueError("binomial index k must be nonnegative, got %r" % (k,))
    r = Fraction(r)
    num = Fraction(1)
    for t in range(k):
        num *= r - t
    fact = 1
    for t in range(2, k + 1):
        fact *= t
    return num / fact


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(q: Union[int, Fraction], p: int) -> PAdicValue:
    """p-adic valuation of a rational number.

    Returns :data:`INFINITY` exactly when ``q == 0``; otherwise the
    integer v with q = p**v * (unit).  The valuation is additive:
    v(a*b) = v(a) + v(b).  ``p`` must be prime.
    """
    if not is_prime(p):
        raise ValueError("p-adic valuation requires a prime p, got %r" % (p,))
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return _int_valuation(abs(q.numerator), p) - _int_valuation(q.denominator, p)


class GaussianRational:
    """An element a + b*i of the Gaussian rationals, a and b exact rationals.

    Supports field arithmetic, mixes freely with int and Fraction
    operands, and hashes consistently with Fraction when the imaginary
    part is zero (so ``GaussianRational(3, 0) == Fraction(3)`` and the
    two share a hash).
    """

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def i(cls) -> "GaussianRational":
        return cls(0, 1)

    @property
    def is_rational(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Field norm a^2 + b^2; zero only for the zero element."""
        return self.re * self.re + self.im * self.im

    @staticmethod
    def _coerce(x) -> "GaussianRational | None":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (GaussianRational(1) / self) ** (-k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return "GaussianRational(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "%s*i" % (self.im,)
        sign = "+" if self.im > 0 else "-"
        return "%s%s%s*i" % (self.re, sign, abs(self.im))


#: The square root of -1 used by ordinates on cover-degree-2 curves.
GAUSSIAN_I = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def rational_to_str(q: Union[int, Fraction]) -> str:
    """Canonical 'p/q' string (bare 'p' when the denominator is 1)."""
    return str(Fraction(q))


def rational_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


def scalar_to_json(x: Scalar | int):
    """JSON form of a scalar: rational string, or {'re','im'} object."""
    if isinstance(x, GaussianRational):
        if x.im == 0:
            # a Gaussian value that happens to be rational round-trips as one
            return rational_to_str(x.re)
        return {"re": rational_to_str(x.re), "im": rational_to_str(x.im)}
    return rational_to_str(x)


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, str):
        return rational_from_str(obj)
    if isinstance(obj, dict) and set(obj) == {"re", "im"}:
        return GaussianRational(rational_from_str(obj["re"]), rational_from_str(obj["im"]))
    raise ValueError("not a scalar encoding: %r" % (obj,))
