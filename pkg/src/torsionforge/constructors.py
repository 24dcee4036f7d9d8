"""Constructions of curves y**d = f(x) with a rational point of exact order m.

Every function here returns a TorsionCertificate whose claims the verifier
in certify.py rechecks from scratch; nothing is trusted to the algebra in
this module.  Four families cover the constructive verdicts:

order-d       f = x**n - a**n, P = (a, 0).  The zero ordinate pins the
              order to exactly d.
order-n       f = (x-a)**n + v**d with d*deg v < n and v(a) != 0, so
              f - v**d = (x-a)**n and P = (a, v(a)) has order n.
div-d         m = d*l > n.  With s = n - m + l >= 1 the witness
              v = x**l + x**s/d + C gives f = v**d - x**m monic of degree
              n, so f - v**d = -(x**m) and P = (0, C) has order m.  The
              constant C is searched so that f stays square-free.  At
              s = 0 the witness collapses: for d >= 3 the single monic
              representative v = x**l + 1/d works, while for d = 2 the
              family degenerates (every member certifies order n, not
              2n) and a different identity is needed: f = (x-w)*g with
              g = (x-w)*t**2 - x**n makes v = (x-w)*t satisfy
              v**2 - f = x**n*(x-w), linking P = (0, t(0)) to the
              two-torsion point (w, 0).
n-plus-ed     m = n + e*d.  Truncating the binomial series of
              (1+x)**(m/d) at x**(e*d) yields V with
              (1+x)**m - V**d = x**(e*d)*f exactly, and P sits over
              x = -1 with ordinate proportional to V(-1).

Search is deterministic: constants are tried in the fixed order
1, -1, 2, -2, ... up to a budget taken from the TORSION_FORGE_SEARCH_LIMIT
environment variable (default 64), so rerunning a construction always
reproduces the same certificate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterator, Optional

from .certify import (
    INFINITY_SHIFT,
    ORDER_D,
    PURE_POWER,
    RULE_TWO_TORSION,
    RULE_ZERO_ORDINATE,
    TWO_TORSION_LINK,
    PreconditionError,
    TorsionCertificate,
    exactness_rule_for,
)
from .curves import AffinePoint, Curve, CurveError
from .polyring import Poly, poly_from_json
from .scalars import GAUSSIAN_I, Scalar, scalar_from_json
from .series import HypothesisError, TruncationSpec, check_truncation_valuation, truncated_binomial, truncation_quotient

SEARCH_LIMIT_ENV = "TORSION_FORGE_SEARCH_LIMIT"
DEFAULT_SEARCH_LIMIT = 64

STYLE_ORDER_D = "order-d"
STYLE_ORDER_N = "order-n"
STYLE_DIV_D = "div-d"
STYLE_N_PLUS_ED = "n-plus-ed"

STYLES = (STYLE_ORDER_D, STYLE_ORDER_N, STYLE_DIV_D, STYLE_N_PLUS_ED)


class SearchExhausted(RuntimeError):
    """No candidate within the search budget produced a valid curve."""


class ZeroOrdinateError(ValueError):
    """The requested witness would place the point on the x-axis, where
    the order is d rather than the intended one."""


class UnsupportedFieldError(ValueError):
    """The requested value does not exist over the rationals or the
    Gaussian rationals."""


def default_search_limit() -> int:
    raw = os.environ.get(SEARCH_LIMIT_ENV)
    if raw is None:
        return DEFAULT_SEARCH_LIMIT
    try:
        limit = int(raw)
    except ValueError as exc:
        raise ValueError(
            "%s must be a positive integer, got %r" % (SEARCH_LIMIT_ENV, raw)
        ) from exc
    if limit < 1:
        raise ValueError(
            "%s must be a positive integer, got %r" % (SEARCH_LIMIT_ENV, raw)
        )
    return limit


def lambda_for_cover_degree(d: int) -> Scalar:
    """A constant lam with lam**d == -1, when one exists in the supported
    fields: -1 for odd d, the imaginary unit for d = 2."""
    if d == 2:
        return GAUSSIAN_I
    if d % 2 == 1:
        return Fraction(-1)
    raise UnsupportedFieldError(
        "no d-th root of -1 exists over the Gaussian rationals for d=%d" % (d,)
    )


def _check_shape(n: int, d: int):
    if not (isinstance(n, int) and isinstance(d, int)):
        raise PreconditionError("n and d must be integers, got n=%r d=%r" % (n, d))
    if d < 2 or n <= d:
        raise PreconditionError("requires n > d >= 2, got n=%d d=%d" % (n, d))
    if int_gcd(n, d) != 1:
        raise PreconditionError("requires gcd(n, d) = 1, got n=%d d=%d" % (n, d))


def _constants(skip: set, limit: int) -> Iterator[Fraction]:
    """1, -1, 2, -2, ... with the given values skipped; at most `limit`
    candidates in total."""
    produced = 0
    k = 1
    while produced < limit:
        for c in (Fraction(k), Fraction(-k)):
            if c in skip:
                continue
            yield c
            produced += 1
            if produced >= limit:
                return
        k += 1


# ---------------------------------------------------------------------------
# order-d: points with zero ordinate
# ---------------------------------------------------------------------------

def construct_order_d(n: int, d: int, a: Scalar = Fraction(1)) -> TorsionCertificate:
    """Curve with the point (a, 0) of exact order d: f = x**n - a**n."""
    _check_shape(n, d)
    if isinstance(a, int):
        a = Fraction(a)
    if a == 0:
        raise PreconditionError("a = 0 gives f = x**n, which has a repeated root")
    f = Poly.x_power(n) - Poly.constant(a ** n)
    curve = Curve(d, n, f)
    return TorsionCertificate(
        curve=curve,
        m=d,
        identity_kind=ORDER_D,
        v=None,
        a=a,
        point=AffinePoint(a, a * 0),
        exactness_rule=RULE_ZERO_ORDINATE,
    )


# ---------------------------------------------------------------------------
# order-n
# ---------------------------------------------------------------------------

def construct_order_n(
    n: int,
    d: int,
    v: Optional[Poly] = None,
    a: Scalar = Fraction(0),
    search_limit: Optional[int] = None,
) -> TorsionCertificate:
    """Curve f = (x-a)**n + v**d with P = (a, v(a)) of exact order n.

    When v is omitted, candidates x + 1, x + 2, ... are tried until f is
    square-free.
    """
    _check_shape(n, d)
    if isinstance(a, int):
        a = Fraction(a)
    if v is not None:
        return _order_n_with(n, d, v, a)
    limit = default_search_limit() if search_limit is None else search_limit
    max_deg = (n - 1) // d
    last_error: Optional[CurveError] = None
    for k in range(1, limit + 1):
        shift = Fraction(k)
        cand = Poly((shift, Fraction(1))) if max_deg >= 1 else Poly.constant(shift)
        if cand(a) == 0:
            continue
        try:
            return _order_n_with(n, d, cand, a)
        except CurveError as exc:
            last_error = exc
    raise SearchExhausted(
        "no square-free curve of order n=%d found within %d candidates (%s)"
        % (n, limit, last_error)
    )


def _order_n_with(n: int, d: int, v: Poly, a: Scalar) -> TorsionCertificate:
    if v.is_zero or d * v.degree > n - 1:
        raise PreconditionError(
            "witness must be nonzero with d*deg v <= n-1, got deg v = %s" % (v.degree,)
        )
    y0 = v(a)
    if y0 == 0:
        raise ZeroOrdinateError(
            "v(a) = 0 places the point on the x-axis; its order would be d, not n"
        )
    f = Poly.x_minus(a) ** n + v ** d
    curve = Curve(d, n, f)
    return TorsionCertificate(
        curve=curve,
        m=n,
        identity_kind=PURE_POWER,
        v=v,
        a=a,
        point=AffinePoint(a, y0),
        exactness_rule=exactness_rule_for(n, n),
    )


# ---------------------------------------------------------------------------
# div-d: m a multiple of d beyond n
# ---------------------------------------------------------------------------

def construct_div_d(
    n: int,
    d: int,
    m: int,
    c: Optional[Scalar] = None,
    search_limit: Optional[int] = None,
) -> TorsionCertificate:
    """Curve with a point of exact order m where d | m and m > n.

    Requires the deficit n - m + m/d to be nonnegative; below zero no
    member of this family reaches order m.
    """
    _check_shape(n, d)
    if m % d != 0:
        raise PreconditionError("requires d | m, got m=%d d=%d" % (m, d))
    if m <= n:
        raise PreconditionError("requires m > n, got m=%d n=%d" % (m, n))
    l = m // d
    s = n - m + l
    if s < 0:
        raise PreconditionError(
            "deficit n - m + m/d = %d is negative; the family cannot reach m=%d"
            % (s, m)
        )
    if isinstance(c, int):
        c = Fraction(c)
    if s == 0 and d == 2:
        return _two_torsion_link(n, c, search_limit)
    if s == 0:
        return _div_d_with(n, d, m, l, s, Fraction(0))

    limit = default_search_limit() if search_limit is None else search_limit
    D = Fraction(1, d)
    if c is not None:
        candidates = [c]
    else:
        candidates = _constants({Fraction(0), -D}, limit)
    last_error: Optional[CurveError] = None
    for cand in candidates:
        try:
            return _div_d_with(n, d, m, l, s, cand)
        except CurveError as exc:
            last_error = exc
    raise SearchExhausted(
        "no square-free curve with a point of order m=%d found within the "
        "budget (%s); raise %s to widen the search"
        % (m, last_error, SEARCH_LIMIT_ENV)
    )


def _div_d_with(n: int, d: int, m: int, l: int, s: int, c: Scalar) -> TorsionCertificate:
    D = Fraction(1, d)
    if s == 0:
        # x**s merges into the constant term; monic f forces it to 1/d.
        v = Poly.x_power(l) + Poly.constant(D)
        y0 = v(Fraction(0))
    else:
        if c == 0:
            raise ZeroOrdinateError("c = 0 places the point on the x-axis")
        v = Poly.x_power(l) + Poly.monomial(D, s) + Poly.constant(c)
        y0 = c
    f = v ** d - Poly.x_power(m)
    curve = Curve(d, n, f)
    return TorsionCertificate(
        curve=curve,
        m=m,
        identity_kind=PURE_POWER,
        v=v,
        a=Fraction(0),
        point=AffinePoint(Fraction(0), y0),
        exactness_rule=exactness_rule_for(m, n),
    )


def _two_torsion_link(
    n: int, c: Optional[Scalar], search_limit: Optional[int]
) -> TorsionCertificate:
    """d = 2, m = 2n: certify via a divisor linking P to two-torsion.

    With w = 1 and t monic of degree (n-1)/2 whose next coefficient is 1,
    the curve f = (x-w)*((x-w)*t**2 - x**n) is monic and the witness
    v = (x-w)*t satisfies v**2 - f = x**n*(x-w).  Then n*(P-O) equals the
    class of (w,0) - (O), which is nonzero two-torsion, so P - O has
    exact order 2n.
    """
    w = Fraction(1)
    k = (n - 1) // 2
    limit = default_search_limit() if search_limit is None else search_limit
    if c is not None:
        candidates = [c]
    elif k == 1:
        # degree 1: the monic condition already fixes t = x + 1
        candidates = [Fraction(1)]
    else:
        candidates = _constants({Fraction(0)}, limit)
    last_error: Optional[CurveError] = None
    for cand in candidates:
        if cand == 0:
            raise ZeroOrdinateError("c = 0 places the point on the x-axis")
        if k == 1:
            t = Poly((cand, Fraction(1)))
        else:
            t = Poly.x_power(k) + Poly.x_power(k - 1) + Poly.constant(cand)
        v = Poly.x_minus(w) * t
        f = Poly.x_minus(w) * (Poly.x_minus(w) * t ** 2 - Poly.x_power(n))
        try:
            curve = Curve(2, n, f)
        except CurveError as exc:
            last_error = exc
            continue
        return TorsionCertificate(
            curve=curve,
            m=2 * n,
            identity_kind=TWO_TORSION_LINK,
            u=Poly.x_minus(w),
            v=v,
            a=Fraction(0),
            point=AffinePoint(Fraction(0), t(Fraction(0))),
            exactness_rule=RULE_TWO_TORSION,
        )
    raise SearchExhausted(
        "no square-free curve with a point of order 2n=%d found within the "
        "budget (%s); raise %s to widen the search"
        % (2 * n, last_error, SEARCH_LIMIT_ENV)
    )


# ---------------------------------------------------------------------------
# n-plus-ed: truncated binomial series
# ---------------------------------------------------------------------------

def construct_n_plus_ed(n: int, d: int, e: int) -> TorsionCertificate:
    """Curve with a point of exact order m = n + e*d over x = -1.

    Requires m > d*(e*d - 1); otherwise the truncated series does not
    leave a degree-n quotient and a HypothesisError is raised.
    """
    _check_shape(n, d)
    if e < 1:
        raise PreconditionError("requires e >= 1, got e=%d" % (e,))
    m = n + e * d
    E = e * d
    spec = TruncationSpec(m=m, d=d, E=E)
    val = check_truncation_valuation(spec)
    if val != E:
        raise HypothesisError(
            "truncation valuation %d differs from E=%d for m=%d d=%d" % (val, E, m, d)
        )
    V = truncated_binomial(spec)
    f = truncation_quotient(spec)
    curve = Curve(d, n, f)
    rule = exactness_rule_for(m, n)
    if rule is None:
        raise PreconditionError(
            "order m=%d admits no exactness rule on degree n=%d curves" % (m, n)
        )
    vm1 = V(Fraction(-1))
    try:
        lam = lambda_for_cover_degree(d)
    except UnsupportedFieldError:
        return TorsionCertificate(
            curve=curve,
            m=m,
            identity_kind=INFINITY_SHIFT,
            v=V,
            a=Fraction(-1),
            e=e,
            exactness_rule=rule,
            point_symbolic=True,
        )
    y0 = lam * (Fraction(-1) ** e) * vm1
    return TorsionCertificate(
        curve=curve,
        m=m,
        identity_kind=INFINITY_SHIFT,
        v=V,
        a=Fraction(-1),
        e=e,
        lam=lam,
        exactness_rule=rule,
        point=AffinePoint(Fraction(-1), y0),
    )


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstructionRequest:
    n: int
    d: int
    m: int
    style: Optional[str] = None
    a: Optional[Scalar] = None
    v: Optional[Poly] = None
    c: Optional[Scalar] = None
    search_limit: Optional[int] = None

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ConstructionRequest":
        v = obj.get("v")
        a = obj.get("a")
        c = obj.get("c")
        style = obj.get("style")
        return cls(
            n=int(obj["n"]),
            d=int(obj["d"]),
            m=int(obj["m"]),
            style=str(style) if style is not None else None,
            a=scalar_from_json(a) if a is not None else None,
            v=poly_from_json(v) if v is not None else None,
            c=scalar_from_json(c) if c is not None else None,
            search_limit=(
                int(obj["search_limit"]) if obj.get("search_limit") is not None else None
            ),
        )


def infer_style(n: int, d: int, m: int) -> str:
    """Which construction family covers order m on degree-(n, d) curves."""
    _check_shape(n, d)
    if m == d:
        return STYLE_ORDER_D
    if m == n:
        return STYLE_ORDER_N
    if m > n and m % d == 0:
        return STYLE_DIV_D
    if m > n and (m - n) % d == 0:
        return STYLE_N_PLUS_ED
    raise PreconditionError(
        "no construction family covers m=%d on (n=%d, d=%d) curves" % (m, n, d)
    )


def construct(request: ConstructionRequest) -> TorsionCertificate:
    """Dispatch a construction request to the family that covers it."""
    n, d, m = request.n, request.d, request.m
    style = request.style or infer_style(n, d, m)
    if style not in STYLES:
        raise PreconditionError("unknown construction style %r" % (style,))
    if style == STYLE_ORDER_D:
        if m != d:
            raise PreconditionError("style %s requires m = d" % (style,))
        a = request.a if request.a is not None else Fraction(1)
        return construct_order_d(n, d, a=a)
    if style == STYLE_ORDER_N:
        if m != n:
            raise PreconditionError("style %s requires m = n" % (style,))
        a = request.a if request.a is not None else Fraction(0)
        return construct_order_n(
            n, d, v=request.v, a=a, search_limit=request.search_limit
        )
    if style == STYLE_DIV_D:
        return construct_div_d(
            n, d, m, c=request.c, search_limit=request.search_limit
        )
    if m <= n or (m - n) % d != 0:
        raise PreconditionError(
            "style %s requires m = n + e*d with e >= 1, got m=%d" % (style, m)
        )
    return construct_n_plus_ed(n, d, (m - n) // d)
