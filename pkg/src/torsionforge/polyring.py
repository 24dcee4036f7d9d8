"""Dense univariate polynomials over an exact field.

Coefficients are stored ascending (index k holds the coefficient of
x**k) with no trailing zeros, so two polynomials are equal exactly when
their coefficient tuples are.  The coefficient field is either
``Fraction`` or :class:`~torsionforge.scalars.GaussianRational``; the two
mix freely because the scalar types coerce each other.  Integer
coefficients passed to the constructor are normalized to ``Fraction``.

The degree of the zero polynomial is the distinguished sentinel
:data:`NEG_INFINITY` (``float('-inf')``), never an ordinary integer, so
degree comparisons behave correctly without special cases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .scalars import GaussianRational, Scalar, rational_from_str, scalar_from_json, scalar_to_json

#: Degree of the zero polynomial.
NEG_INFINITY = float("-inf")


class DivisibilityError(ArithmeticError):
    """Raised by exact_div when the division leaves a remainder."""


def _coerce_coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (Fraction, GaussianRational)):
        return c
    raise TypeError("unsupported coefficient type: %r" % (type(c).__name__,))


class Poly:
    """Immutable dense polynomial; create with Poly([c0, c1, ...])."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        if k < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * k + (c,))

    @classmethod
    def x_power(cls, k: int) -> "Poly":
        return cls.monomial(1, k)

    @classmethod
    def x_minus(cls, a) -> "Poly":
        return cls((-a, 1))

    # -- structure ----------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self):
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def __getitem__(self, k: int):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self._coeffs) != len(other._coeffs):
            return False
        return all(a == b for a, b in zip(self._coeffs, other._coeffs))

    __hash__ = None  # mutable-free but unhashable; never used as a key

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out)

    def __neg__(self):
        return Poly(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Poly(tuple(c * other for c in self._coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly.zero()
        a, b = self._coeffs, other._coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers take nonnegative integer exponents")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd, dv = len(rem) - 1, other.degree
        lead = other.leading_coefficient
        if dd < dv:
            return Poly.zero(), self
        quot = [Fraction(0)] * (dd - dv + 1)
        for k in range(dd - dv, -1, -1):
            c = rem[k + dv]
            if not c:
                continue
            q = c / lead
            quot[k] = q
            for j, oc in enumerate(other._coeffs):
                rem[k + j] = rem[k + j] - q * oc
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, t):
        """Evaluate at a scalar by Horner's rule."""
        acc = None
        for c in reversed(self._coeffs):
            acc = c if acc is None else acc * t + c
        if acc is None:
            return Fraction(0)
        return acc

    # -- calculus and transforms ---------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(tuple(k * c for k, c in enumerate(self._coeffs) if k))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading_coefficient
        if lead == 1:
            return self
        return Poly(tuple(c / lead for c in self._coeffs))

    def shift(self, a) -> "Poly":
        """The composition f(x + a), computed by Horner over Poly((a, 1))."""
        xa = Poly((a, 1))
        acc = Poly.zero()
        for c in reversed(self._coeffs):
            acc = acc * xa + Poly.constant(c)
        return acc

    def scale_x(self, lam) -> "Poly":
        """The composition f(lam * x)."""
        out, p = [], None
        for k, c in enumerate(self._coeffs):
            p = 1 if k == 0 else p * lam
            out.append(c * p)
        return Poly(out)

    def valuation_at_zero(self) -> int:
        """Multiplicity of the root 0, i.e. the index of the lowest nonzero coefficient."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no valuation at zero")
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        raise AssertionError("unreachable")  # pragma: no cover

    # -- display --------------------------------------------------------------

    def __repr__(self):
        return "Poly([%s])" % (", ".join(str(c) for c in self._coeffs),)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("x" if c == 1 else "%s*x" % (c,))
            else:
                parts.append("x^%d" % k if c == 1 else "%s*x^%d" % (c, k))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def derivative(f: Poly) -> Poly:
    return f.derivative()


def shift(f: Poly, a) -> Poly:
    return f.shift(a)


def valuation_at_zero(f: Poly) -> int:
    return f.valuation_at_zero()


def exact_div(f: Poly, g: Poly) -> Poly:
    """Quotient f/g when g divides f exactly; DivisibilityError otherwise."""
    q, r = divmod(f, g)
    if not r.is_zero:
        raise DivisibilityError(
            "%s does not divide %s exactly (remainder %s)" % (g, f, r)
        )
    return q


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm.

    Remainders are renormalized to monic at each step, which keeps
    rational coefficient growth in check; both inputs zero is rejected.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not g.is_zero:
        f, g = g, (f % g).monic()
    return f.monic()


def xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended gcd: returns (h, s, t) with h monic and s*f + t*g == h."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = f, g
    s0, s1 = Poly.one(), Poly.zero()
    t0, t1 = Poly.zero(), Poly.one()
    while not r1.is_zero:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
        if not r1.is_zero:
            lead = r1.leading_coefficient
            if lead != 1:
                inv = 1 / lead
                r1, s1, t1 = r1 * inv, s1 * inv, t1 * inv
    lead = r0.leading_coefficient
    if lead != 1:
        inv = 1 / lead
        r0, s0, t0 = r0 * inv, s0 * inv, t0 * inv
    return r0, s0, t0


def is_squarefree(f: Poly) -> bool:
    """True when f shares no root with its derivative (no repeated factor).

    Constant and zero inputs are rejected: square-freeness is a question
    about polynomials with roots.
    """
    if f.degree < 1:
        raise ValueError("square-freeness needs degree >= 1, got %r" % (f,))
    return gcd(f, f.derivative()).degree == 0


# ---------------------------------------------------------------------------
# serialization: JSON array of coefficient strings, ascending degree
# ---------------------------------------------------------------------------

def poly_to_json(f: Poly) -> list:
    return [scalar_to_json(c) for c in f.coeffs]


def poly_from_json(obj) -> Poly:
    if not isinstance(obj, list):
        raise ValueError("polynomial encoding must be a JSON array, got %r" % (obj,))
    return Poly(tuple(scalar_from_json(c) for c in obj))


def poly_from_strs(coeffs: Iterable[str]) -> Poly:
    return Poly(tuple(rational_from_str(s) for s in coeffs))
