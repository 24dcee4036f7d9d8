"""Torsion certificates, their verifier, and the reachability verdict engine.

A certificate pins down a function phi on the curve y**d = f(x) whose
divisor is m*(P) - m*(O), which proves the class of P - O has order
dividing m, together with an exactness rule that upgrades "divides" to
"equals".  Each identity kind names a polynomial identity that encodes
div(phi) completely; the verifier rechecks the identity from scratch, so
a certificate is auditable with no access to the code that produced it.

Identity kinds
--------------

pure-power        f - v**d == A*(x-a)**m, A != 0, with pole bookkeeping
                  max(n, d*deg v) == m and v(a) != 0.  Witness function
                  y - v(x); P = (a, v(a)).
shift-power       u**d * f + v**d == A*(x-a)**m with
                  max(d*deg u + n, d*deg v) == m and v(a) != 0.  Witness
                  u(x)*y - mu*v(x) for a constant mu with mu**d == -1;
                  P = (a, c) with (u(a)*c)**d == -v(a)**d.
infinity-shift    x**(e*d) * f + v**d == A*(1+x)**m with d*deg v < m and
                  v(-1) != 0.  P = (-1, lam*(-1)**e*v(-1)), lam**d == -1.
order-d           f(a) == 0 and m == d; P = (a, 0).  A zero ordinate
                  forces order exactly d.
two-torsion-link  d == 2, m == 2n, v**2 - f == A*(x-a)**n * (x-w) with
                  v(w) == 0, w != a, deg v == (n+1)/2.  Witness y + v(x)
                  has divisor n*(P) + (W) - (n+1)*(O) with W = (w, 0), so
                  n*(P-O) is nonzero two-torsion; P = (a, -v(a)).

Exactness rules
---------------

Once m*(P) - m*(O) is principal the order k of P - O divides m, and k is
d or at least n.  The stored rule names the extra fact forcing k == m:

* "prime-order": m is prime.
* "below-twice-degree": m < 2n.
* "odd-below-thrice-degree": m odd and m < 3n.
* "zero-ordinate": y(P) == 0, so k == d == m (order-d kind only).
* "two-torsion-link": n*(P-O) is nonzero two-torsion and y(P) != 0, so
  k | 2n, k does not divide n, and the divisor-floor argument leaves
  only k == 2n (two-torsion-link kind only).

For the first three rules the verifier also requires y(P) != 0, which
rules out k == d.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as int_gcd
from typing import Optional

from .curves import (
    AffinePoint,
    Curve,
    CurveError,
    MonicNormalization,
)
from .polyring import Poly, poly_from_json, poly_to_json
from .scalars import GaussianRational, Scalar, is_prime, scalar_from_json, scalar_to_json


class PreconditionError(ValueError):
    """A stated precondition of an operation fails."""


# identity kinds
PURE_POWER = "pure-power"
SHIFT_POWER = "shift-power"
INFINITY_SHIFT = "infinity-shift"
ORDER_D = "order-d"
TWO_TORSION_LINK = "two-torsion-link"

IDENTITY_KINDS = (PURE_POWER, SHIFT_POWER, INFINITY_SHIFT, ORDER_D, TWO_TORSION_LINK)

# exactness rules
RULE_PRIME = "prime-order"
RULE_BELOW_TWICE = "below-twice-degree"
RULE_ODD_BELOW_THRICE = "odd-below-thrice-degree"
RULE_ZERO_ORDINATE = "zero-ordinate"
RULE_TWO_TORSION = "two-torsion-link"

_DIVISOR_RULES = (RULE_BELOW_TWICE, RULE_PRIME, RULE_ODD_BELOW_THRICE)


def norm_poly(u: Poly, w: Poly, f: Poly, d: int) -> Poly:
    """w**d - u**d * f: the norm of the function u(x)*y - w(x).

    The product of w - gamma*u*y over the d-th roots of unity gamma
    collapses to this polynomial because y**d == f on the curve.  When
    it equals a nonzero scalar times (x-a)**m, every zero of the witness
    function sits over x = a.
    """
    if d < 2:
        raise ValueError("d must be at least 2, got %r" % (d,))
    return w ** d - u ** d * f


def exactness_rule_for(m: int, n: int) -> Optional[str]:
    """First divisor-to-exact-order rule applicable to (m, n), if any."""
    if m < 2 * n:
        return RULE_BELOW_TWICE
    if is_prime(m):
        return RULE_PRIME
    if m % 2 == 1 and m < 3 * n:
        return RULE_ODD_BELOW_THRICE
    return None


def exactness_rule_holds(rule: str, m: int, n: int) -> bool:
    if rule == RULE_BELOW_TWICE:
        return m < 2 * n
    if rule == RULE_PRIME:
        return is_prime(m)
    if rule == RULE_ODD_BELOW_THRICE:
        return m % 2 == 1 and m < 3 * n
    return False


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TorsionCertificate:
    """Machine-checkable witness that P - O has exact order m."""

    curve: Curve
    m: int
    identity_kind: str
    v: Optional[Poly]
    exactness_rule: str
    u: Optional[Poly] = None
    a: Optional[Scalar] = None
    e: int = 0
    lam: Optional[Scalar] = None
    point: Optional[AffinePoint] = None
    point_symbolic: bool = False

    def to_json_dict(self) -> dict:
        if self.point_symbolic:
            point = {"x": scalar_to_json(self.a), "symbolic": True}
        elif self.point is not None:
            point = {
                "x": scalar_to_json(self.point.x),
                "y": scalar_to_json(self.point.y),
            }
        else:
            point = None
        return {
            "curve": self.curve.to_json_dict(),
            "point": point,
            "m": self.m,
            "identity_kind": self.identity_kind,
            "u": poly_to_json(self.u) if self.u is not None else None,
            "v": poly_to_json(self.v) if self.v is not None else None,
            "a": scalar_to_json(self.a) if self.a is not None else None,
            "e": self.e,
            "lambda": scalar_to_json(self.lam) if self.lam is not None else None,
            "exactness_rule": self.exactness_rule,
        }

    def to_json_str(self) -> str:
        return canonical_json(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, obj: dict) -> "TorsionCertificate":
        curve = Curve.from_json_dict(obj["curve"])
        pt = obj.get("point")
        point = None
        symbolic = False
        if isinstance(pt, dict):
            if pt.get("symbolic"):
                symbolic = True
            else:
                point = AffinePoint(
                    scalar_from_json(pt["x"]), scalar_from_json(pt["y"])
                )
        u = obj.get("u")
        v = obj.get("v")
        a = obj.get("a")
        lam = obj.get("lambda")
        return cls(
            curve=curve,
            m=int(obj["m"]),
            identity_kind=str(obj["identity_kind"]),
            v=poly_from_json(v) if v is not None else None,
            u=poly_from_json(u) if u is not None else None,
            a=scalar_from_json(a) if a is not None else None,
            e=int(obj.get("e", 0)),
            lam=scalar_from_json(lam) if lam is not None else None,
            exactness_rule=str(obj["exactness_rule"]),
            point=point,
            point_symbolic=symbolic,
        )


def canonical_json(obj) -> str:
    """Deterministic JSON text: fixed key order, two-space indent, newline."""
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass
class CheckLine:
    name: str
    ok: bool
    detail: str = ""

    def __str__(self):
        mark = "ok " if self.ok else "FAIL"
        return "%s %-22s %s" % (mark, self.name, self.detail)


class _Report:
    def __init__(self):
        self.lines: list[CheckLine] = []

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.lines.append(CheckLine(name, bool(ok), detail))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)


def _match_scaled_power(q: Poly, base: Poly, m: int):
    """If q == A * base**m with A a nonzero scalar, return A, else None."""
    if q.is_zero:
        return None
    if q.degree != base.degree * m:
        return None
    A = q.leading_coefficient / base.leading_coefficient ** m
    if q == base ** m * A:
        return A
    return None


def verify_certificate_json(obj: dict) -> tuple[bool, list[CheckLine]]:
    """Verify a certificate given as a parsed JSON dict.

    A structurally well-formed certificate whose curve data is invalid
    (wrong degree, repeated root, gcd violation) counts as a failed
    verification, not a parse error; malformed structure still raises.
    """
    try:
        Curve.from_json_dict(obj["curve"])
    except CurveError as exc:
        return False, [CheckLine("curve-valid", False, str(exc))]
    cert = TorsionCertificate.from_json_dict(obj)
    return verify_certificate(cert)


def verify_certificate(cert: TorsionCertificate) -> tuple[bool, list[CheckLine]]:
    """Recheck every claim of a certificate from first principles.

    Returns (all_ok, report).  Mathematically invalid certificates never
    raise; each failed fact becomes a failed line in the report.
    """
    r = _Report()
    try:
        curve = Curve(cert.curve.d, cert.curve.n, cert.curve.f)
        r.check("curve-valid", True, "d=%d n=%d genus=%d" % (curve.d, curve.n, curve.genus))
    except CurveError as exc:
        r.check("curve-valid", False, str(exc))
        return False, r.lines

    kind = cert.identity_kind
    if not r.check(
        "identity-kind", kind in IDENTITY_KINDS, "kind=%r" % (kind,)
    ):
        return False, r.lines

    d, n, f, m = curve.d, curve.n, curve.f, cert.m
    if not r.check("order-positive", m >= 2, "m=%d" % (m,)):
        return False, r.lines

    if kind == ORDER_D:
        _verify_order_d(r, cert, curve)
    elif kind == PURE_POWER:
        _verify_pure_power(r, cert, curve)
    elif kind == SHIFT_POWER:
        _verify_shift_power(r, cert, curve)
    elif kind == INFINITY_SHIFT:
        _verify_infinity_shift(r, cert, curve)
    elif kind == TWO_TORSION_LINK:
        _verify_two_torsion_link(r, cert, curve)

    return r.ok, r.lines


def _check_point_on_curve(r: _Report, cert: TorsionCertificate, curve: Curve) -> Optional[AffinePoint]:
    pt = cert.point
    if pt is None:
        r.check("point-present", False, "certificate has no point")
        return None
    on = pt.y ** curve.d == curve.f(pt.x)
    r.check("point-on-curve", on, str(pt))
    return pt


def _verify_order_d(r: _Report, cert: TorsionCertificate, curve: Curve):
    r.check("order-matches-kind", cert.m == curve.d, "m=%d d=%d" % (cert.m, curve.d))
    if cert.a is None:
        r.check("witness-present", False, "missing abscissa a")
        return
    r.check("root-of-f", curve.f(cert.a) == 0, "f(a) with a=%s" % (cert.a,))
    pt = _check_point_on_curve(r, cert, curve)
    if pt is not None:
        r.check("point-abscissa", pt.x == cert.a)
        r.check("ordinate-zero", not pt.y, "y(P)=%s" % (pt.y,))
    r.check(
        "exactness-rule",
        cert.exactness_rule == RULE_ZERO_ORDINATE,
        cert.exactness_rule,
    )


def _verify_divisor_exactness(r: _Report, cert: TorsionCertificate, curve: Curve):
    rule = cert.exactness_rule
    if not r.check("exactness-rule-known", rule in _DIVISOR_RULES, rule):
        return
    r.check(
        "exactness-rule",
        exactness_rule_holds(rule, cert.m, curve.n),
        "%s with m=%d n=%d" % (rule, cert.m, curve.n),
    )


def _verify_pure_power(r: _Report, cert: TorsionCertificate, curve: Curve):
    d, n, f, m = curve.d, curve.n, curve.f, cert.m
    if cert.v is None or cert.a is None:
        r.check("witness-present", False, "pure-power needs v and a")
        return
    v, a = cert.v, cert.a
    q = f - v ** d
    A = _match_scaled_power(q, Poly.x_minus(a), m)
    r.check(
        "identity",
        A is not None,
        "f - v^%d == A*(x-a)^%d, a=%s%s" % (d, m, a, "" if A is None else ", A=%s" % (A,)),
    )
    dv = 0 if v.is_zero else d * v.degree
    r.check("pole-order", max(n, dv) == m, "max(n, d*deg v) = %s, m = %d" % (max(n, dv), m))
    r.check("witness-nonzero-at-a", v(a) != 0, "v(a)=%s" % (v(a),))
    pt = _check_point_on_curve(r, cert, curve)
    if pt is not None:
        r.check("point-abscissa", pt.x == a)
        r.check("point-ordinate", pt.y == v(a), "y(P)=%s v(a)=%s" % (pt.y, v(a)))
        r.check("ordinate-nonzero", bool(pt.y))
    _verify_divisor_exactness(r, cert, curve)


def _verify_shift_power(r: _Report, cert: TorsionCertificate, curve: Curve):
    d, n, f, m = curve.d, curve.n, curve.f, cert.m
    if cert.v is None or cert.a is None or cert.u is None:
        r.check("witness-present", False, "shift-power needs u, v, a")
        return
    u, v, a = cert.u, cert.v, cert.a
    if not r.check("u-nonzero", not u.is_zero):
        return
    q = u ** d * f + v ** d
    A = _match_scaled_power(q, Poly.x_minus(a), m)
    r.check(
        "identity",
        A is not None,
        "u^%d*f + v^%d == A*(x-a)^%d%s" % (d, d, m, "" if A is None else ", A=%s" % (A,)),
    )
    dv = 0 if v.is_zero else d * v.degree
    pole = max(d * u.degree + n, dv)
    r.check("pole-order", pole == m, "pole order %s, m = %d" % (pole, m))
    r.check("witness-nonzero-at-a", v(a) != 0, "v(a)=%s" % (v(a),))
    if cert.point_symbolic:
        r.check(
            "point-symbolic",
            d % 2 == 0 and d > 2,
            "ordinate lives outside the supported fields (d=%d)" % (d,),
        )
    else:
        pt = _check_point_on_curve(r, cert, curve)
        if pt is not None:
            r.check("point-abscissa", pt.x == a)
            # P is the single zero of u*y - mu*v for some mu with mu^d == -1
            r.check(
                "point-matches-witness",
                (u(a) * pt.y) ** d == -(v(a) ** d),
                "(u(a)*y)^d vs -v(a)^d",
            )
            r.check("ordinate-nonzero", bool(pt.y))
    _verify_divisor_exactness(r, cert, curve)


def _verify_infinity_shift(r: _Report, cert: TorsionCertificate, curve: Curve):
    d, n, f, m = curve.d, curve.n, curve.f, cert.m
    if cert.v is None or cert.e < 1:
        r.check("witness-present", False, "infinity-shift needs v and e >= 1")
        return
    v, e = cert.v, cert.e
    r.check("order-form", m == n + e * d, "m=%d n=%d e=%d d=%d" % (m, n, e, d))
    q = Poly.x_power(e * d) * f + v ** d
    A = _match_scaled_power(q, Poly((1, 1)), m)
    r.check(
        "identity",
        A is not None,
        "x^(ed)*f + v^%d == A*(1+x)^%d%s" % (d, m, "" if A is None else ", A=%s" % (A,)),
    )
    dv = 0 if v.is_zero else d * v.degree
    r.check("pole-order", max(e * d + n, dv) == m, "pole order %s" % (max(e * d + n, dv),))
    vm1 = v(Fraction(-1))
    r.check("witness-nonzero-at-a", vm1 != 0, "v(-1)=%s" % (vm1,))
    if cert.point_symbolic:
        r.check(
            "point-symbolic",
            d % 2 == 0 and d > 2,
            "ordinate lives outside the supported fields (d=%d)" % (d,),
        )
    else:
        pt = _check_point_on_curve(r, cert, curve)
        if pt is not None:
            r.check("point-abscissa", pt.x == Fraction(-1))
            if cert.lam is None:
                r.check("lambda-present", False, "materialized point needs lambda")
            else:
                lam = cert.lam
                r.check("lambda-root", lam ** d == -1, "lambda^%d" % (d,))
                expected = lam * (Fraction(-1) ** e) * vm1
                r.check(
                    "point-ordinate",
                    pt.y == expected,
                    "y(P)=%s expected=%s" % (pt.y, expected),
                )
            r.check("ordinate-nonzero", bool(pt.y))
    _verify_divisor_exactness(r, cert, curve)


def _verify_two_torsion_link(r: _Report, cert: TorsionCertificate, curve: Curve):
    d, n, f, m = curve.d, curve.n, curve.f, cert.m
    r.check("cover-degree-two", d == 2, "d=%d" % (d,))
    r.check("order-twice-degree", m == 2 * n, "m=%d n=%d" % (m, n))
    if cert.v is None or cert.a is None or cert.u is None:
        r.check("witness-present", False, "two-torsion-link needs u, v, a")
        return
    u, v, a = cert.u, cert.v, cert.a
    if not r.check("link-root-shape", u.degree == 1 and u.is_monic, "u=%s" % (u,)):
        return
    w = -u[0]
    r.check("link-root-distinct", w != a, "w=%s a=%s" % (w, a))
    r.check("witness-vanishes-at-link", v(w) == 0, "v(w)=%s" % (v(w),))
    q = v ** 2 - f
    A = None
    if not q.is_zero and q.degree == n + 1:
        A = q.leading_coefficient
        if q != Poly.x_minus(a) ** n * u * A:
            A = None
    r.check(
        "identity",
        A is not None,
        "v^2 - f == A*(x-a)^%d*(x-w)%s" % (n, "" if A is None else ", A=%s" % (A,)),
    )
    r.check(
        "pole-order",
        v.degree * 2 == n + 1,
        "deg v = %s, (n+1)/2 = %s" % (v.degree, Fraction(n + 1, 2)),
    )
    r.check("witness-nonzero-at-a", v(a) != 0, "v(a)=%s" % (v(a),))
    pt = _check_point_on_curve(r, cert, curve)
    if pt is not None:
        r.check("point-abscissa", pt.x == a)
        r.check("point-ordinate", pt.y == -v(a), "y(P)=%s -v(a)=%s" % (pt.y, -v(a)))
        r.check("ordinate-nonzero", bool(pt.y))
    r.check(
        "exactness-rule",
        cert.exactness_rule == RULE_TWO_TORSION,
        cert.exactness_rule,
    )


# ---------------------------------------------------------------------------
# transport along a monic normalization
# ---------------------------------------------------------------------------

def map_certificate(norm: MonicNormalization, cert: TorsionCertificate) -> TorsionCertificate:
    """Carry a certificate on the monic model back to the original curve.

    Substituting x -> c0**j * x into the model identity and clearing the
    c0 powers yields an identity of the same shape (infinity-shift turns
    into shift-power because the root -1 moves), with the point mapped by
    (x, y) |-> (c0**-j * x, c0**i * y).  The order m is unchanged.
    """
    c0, i, j = norm.c0, norm.i, norm.j
    d, n = norm.target.d, norm.target.n
    source = Curve(d, n, norm.source_f)
    sx = c0 ** j  # model x = sx * source-curve x ... composed as scale_x(sx)
    ax = c0 ** (-j)

    def move_v(v: Poly) -> Poly:
        return v.scale_x(sx) * c0 ** i

    def move_point(pt: Optional[AffinePoint]) -> Optional[AffinePoint]:
        return None if pt is None else norm.map_point(pt)

    kind = cert.identity_kind
    if kind == ORDER_D:
        return TorsionCertificate(
            curve=source,
            m=cert.m,
            identity_kind=ORDER_D,
            v=None,
            a=ax * cert.a,
            point=move_point(cert.point),
            exactness_rule=cert.exactness_rule,
        )
    if kind == PURE_POWER:
        return TorsionCertificate(
            curve=source,
            m=cert.m,
            identity_kind=PURE_POWER,
            v=move_v(cert.v),
            a=ax * cert.a,
            point=move_point(cert.point),
            exactness_rule=cert.exactness_rule,
        )
    if kind == SHIFT_POWER:
        return TorsionCertificate(
            curve=source,
            m=cert.m,
            identity_kind=SHIFT_POWER,
            u=cert.u.scale_x(sx),
            v=move_v(cert.v),
            a=ax * cert.a,
            point=move_point(cert.point),
            exactness_rule=cert.exactness_rule,
        )
    if kind == INFINITY_SHIFT:
        # x^(ed) * h + v^d == A(1+x)^m becomes a shift-power identity at
        # a = -c0^-j with u = (c0^j x)^e.
        u_new = Poly.monomial(sx ** cert.e, cert.e)
        pt = cert.point
        return TorsionCertificate(
            curve=source,
            m=cert.m,
            identity_kind=SHIFT_POWER,
            u=u_new,
            v=move_v(cert.v),
            a=ax * Fraction(-1),
            point=move_point(pt),
            point_symbolic=cert.point_symbolic,
            exactness_rule=cert.exactness_rule,
        )
    if kind == TWO_TORSION_LINK:
        w = -cert.u[0]
        return TorsionCertificate(
            curve=source,
            m=cert.m,
            identity_kind=TWO_TORSION_LINK,
            u=Poly.x_minus(ax * w),
            v=move_v(cert.v),
            a=ax * cert.a,
            point=move_point(cert.point),
            exactness_rule=cert.exactness_rule,
        )
    raise ValueError("unknown identity kind %r" % (kind,))


# ---------------------------------------------------------------------------
# reachability verdicts
# ---------------------------------------------------------------------------

STATUS_CONSTRUCTIVE = "reachable-constructive"
STATUS_EXISTENCE = "reachable-existence"
STATUS_UNREACHABLE = "unreachable"
STATUS_UNDECIDED = "undecided"

RULE_COVER_DEGREE = "cover-degree"
RULE_CURVE_DEGREE = "curve-degree"
RULE_DEGREE_FLOOR = "degree-floor"
RULE_POLE_CONGRUENCE = "pole-congruence"
RULE_MULTIPLE_DEFICIT = "multiple-deficit"
RULE_DIVISIBLE_MULTIPLE = "divisible-multiple"
RULE_STEP_THRESHOLD = "step-threshold"
RULE_CONGRUENT_STEP = "congruent-step"
RULE_UNDECIDED = "undecided"


@dataclass(frozen=True)
class Verdict:
    n: int
    d: int
    m: int
    status: str
    deciding_rule: str
    detail: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "m": self.m,
            "status": self.status,
            "deciding_rule": self.deciding_rule,
            "detail": dict(self.detail),
        }


def pole_order_congruence(n: int, d: int, M: int) -> bool:
    """Whether a function with pole divisor M*(O) can exist with a single
    affine zero: requires M to be congruent to j*n mod d for some
    0 <= j <= floor(M/n).  Only meaningful for 1 < M < n*d.
    """
    if not (1 < M < n * d):
        raise PreconditionError("congruence test needs 1 < M < n*d, got M=%d" % (M,))
    return _congruence_witness(n, d, M) is not None


def _congruence_witness(n: int, d: int, M: int) -> Optional[int]:
    k = M // n
    for j in range(k + 1):
        if (M - j * n) % d == 0:
            return j
    return None


def reachability_verdict(n: int, d: int, m: int) -> Verdict:
    """Decide reachability of torsion order m on degree-(n, d) curves.

    The battery runs the strongest applicable rule; triples no rule
    decides come back "undecided" (the honest answer, never a guess).
    """
    if d < 2 or n <= d:
        raise PreconditionError("requires n > d >= 2, got n=%r d=%r" % (n, d))
    if int_gcd(n, d) != 1:
        raise PreconditionError("requires gcd(n, d) = 1, got n=%d d=%d" % (n, d))
    if m < 2:
        raise PreconditionError("orders below 2 are not meaningful, got m=%d" % (m,))

    l0 = (n + d) // d
    m0 = d * l0
    m1 = n + d
    detail = {
        "k": m // n,
        "j": None,
        "l": m // d if m % d == 0 else None,
        "m0": m0,
        "l0": l0,
        "m1": m1,
    }

    def verdict(status, rule):
        return Verdict(n=n, d=d, m=m, status=status, deciding_rule=rule, detail=detail)

    if m == d:
        return verdict(STATUS_CONSTRUCTIVE, RULE_COVER_DEGREE)
    if m < n:
        return verdict(STATUS_UNREACHABLE, RULE_DEGREE_FLOOR)
    if m == n:
        return verdict(STATUS_CONSTRUCTIVE, RULE_CURVE_DEGREE)

    if m < n * d:
        j = _congruence_witness(n, d, m)
        detail["j"] = j
        if j is None:
            return verdict(STATUS_UNREACHABLE, RULE_POLE_CONGRUENCE)

    if m % d == 0:
        deficit = n - m + m // d
        detail["deficit"] = deficit
        if deficit >= 0:
            return verdict(STATUS_CONSTRUCTIVE, RULE_DIVISIBLE_MULTIPLE)
        if m == m0:
            return verdict(STATUS_UNREACHABLE, RULE_MULTIPLE_DEFICIT)
        return verdict(STATUS_UNDECIDED, RULE_UNDECIDED)

    if (m - n) % d == 0:
        e = (m - n) // d
        detail["e"] = e
        if e * d * d - (e + 1) * d < n:
            return verdict(STATUS_CONSTRUCTIVE, RULE_CONGRUENT_STEP)
        if e == 1:
            return verdict(STATUS_UNREACHABLE, RULE_STEP_THRESHOLD)
        return verdict(STATUS_UNDECIDED, RULE_UNDECIDED)

    return verdict(STATUS_UNDECIDED, RULE_UNDECIDED)
