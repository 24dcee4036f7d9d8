"""Exact-arithmetic torsion certificates for superelliptic curves y**d = f(x).

The package decides which torsion orders are reachable for given degrees
(n, d), constructs square-free polynomials f carrying a point of exact
order m together with a machine-checkable certificate, and independently
confirms d = 2 orders by divisor-class arithmetic.
"""

from __future__ import annotations

from .certify import (
    PreconditionError,
    TorsionCertificate,
    Verdict,
    exactness_rule_for,
    map_certificate,
    norm_poly,
    pole_order_congruence,
    reachability_verdict,
    verify_certificate,
    verify_certificate_json,
)
from .constructors import (
    ConstructionRequest,
    SearchExhausted,
    UnsupportedFieldError,
    ZeroOrdinateError,
    construct,
    construct_div_d,
    construct_n_plus_ed,
    construct_order_d,
    construct_order_n,
    infer_style,
)
from .curves import (
    AffinePoint,
    Curve,
    CurveError,
    DegreeError,
    GcdError,
    OrderError,
    POINT_AT_INFINITY,
    RepeatedRootError,
    genus,
    new_curve,
    normalize_monic,
    on_curve,
    order_d_points,
)
from .jacobian2 import (
    IDENTITY,
    MumfordDivisor,
    OrderNotFoundError,
    UnsupportedDegreeError,
    add,
    embed_point,
    neg,
    order_of,
    scalar_mul,
    validate,
)
from .polyring import DivisibilityError, Poly, exact_div, gcd, is_squarefree, xgcd
from .scalars import GAUSSIAN_I, GaussianRational, Rational, is_prime, padic_valuation
from .series import (
    HypothesisError,
    TruncationSpec,
    check_truncation_valuation,
    nonvanishing_at_minus_one,
    truncated_binomial,
    truncation_quotient,
)

__version__ = "0.1.0"

__all__ = [
    "AffinePoint",
    "ConstructionRequest",
    "Curve",
    "CurveError",
    "DegreeError",
    "DivisibilityError",
    "GAUSSIAN_I",
    "GaussianRational",
    "GcdError",
    "HypothesisError",
    "IDENTITY",
    "MumfordDivisor",
    "OrderError",
    "OrderNotFoundError",
    "POINT_AT_INFINITY",
    "Poly",
    "PreconditionError",
    "Rational",
    "RepeatedRootError",
    "SearchExhausted",
    "TorsionCertificate",
    "TruncationSpec",
    "UnsupportedDegreeError",
    "UnsupportedFieldError",
    "Verdict",
    "ZeroOrdinateError",
    "add",
    "check_truncation_valuation",
    "construct",
    "construct_div_d",
    "construct_n_plus_ed",
    "construct_order_d",
    "construct_order_n",
    "embed_point",
    "exact_div",
    "exactness_rule_for",
    "gcd",
    "genus",
    "infer_style",
    "is_prime",
    "is_squarefree",
    "map_certificate",
    "neg",
    "new_curve",
    "norm_poly",
    "normalize_monic",
    "on_curve",
    "order_d_points",
    "order_of",
    "padic_valuation",
    "pole_order_congruence",
    "reachability_verdict",
    "scalar_mul",
    "truncated_binomial",
    "truncation_quotient",
    "validate",
    "verify_certificate",
    "verify_certificate_json",
    "xgcd",
]
