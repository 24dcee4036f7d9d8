"""Command-line surface: construct certificates, verify certificate files,
and scan (n, m) grids into reachability tables.

Exit codes (fixed so shell harnesses can assert on them):

0  success
1  verification failure (a certificate check or the divisor oracle fails)
2  invalid arguments, bad bounds, or unparseable certificate file
3  a stated precondition or hypothesis fails (including unreachable orders)
4  the candidate search budget was exhausted

Identical invocations produce byte-identical output: JSON uses a fixed key
order and canonical rational strings, and searches are deterministic.  The
--oracle flag writes its confirmation to stderr so stdout stays pure JSON.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from math import gcd as int_gcd
from typing import Optional

from .certify import (
    PreconditionError,
    STATUS_CONSTRUCTIVE,
    TorsionCertificate,
    canonical_json,
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
)
from .curves import Curve, CurveError
from .jacobian2 import OrderNotFoundError, embed_point, order_of
from .series import HypothesisError

PRESET_HYPERELLIPTIC_LADDER = "hyperelliptic-ladder"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_PRECONDITION = 3
EXIT_SEARCH_EXHAUSTED = 4

_PRECONDITION_ERRORS = (
    PreconditionError,
    HypothesisError,
    ZeroOrdinateError,
    UnsupportedFieldError,
    CurveError,
)


def _error_json(exc_type: str, message: str, **extra) -> str:
    body = {"type": exc_type, "message": message}
    body.update(extra)
    return canonical_json({"error": body})


def _emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_range(text: str, flag: str, parser: argparse.ArgumentParser) -> tuple[int, int]:
    """Parse "7" or "2..11" into an inclusive integer interval."""
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        parser.error("%s expects an integer or a..b range, got %r" % (flag, text))


def _check_shape_args(parser: argparse.ArgumentParser, n: int, d: int):
    if d < 2:
        parser.error("--d must be at least 2, got %d" % (d,))
    if n <= d:
        parser.error("--n must exceed --d, got n=%d d=%d" % (n, d))
    if int_gcd(n, d) != 1:
        parser.error("gcd(n, d) must be 1, got n=%d d=%d" % (n, d))


def _oracle_check(cert: TorsionCertificate) -> tuple[bool, str]:
    """Confirm the certified order by divisor arithmetic (d = 2 only)."""
    curve = cert.curve
    if curve.d != 2:
        return True, "oracle skipped: divisor arithmetic supports d=2 only (curve has d=%d)" % (curve.d,)
    if cert.point is None:
        return True, "oracle skipped: certificate point is symbolic"
    try:
        divisor = embed_point(curve, cert.point)
        found = order_of(curve, divisor, bound=cert.m)
    except OrderNotFoundError:
        return False, "oracle: no order up to %d found for P - O (certificate claims %d)" % (cert.m, cert.m)
    ok = found == cert.m
    return ok, "oracle: divisor order of P - O is %d (certificate claims %d)" % (found, cert.m)


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def cmd_construct(args, parser) -> int:
    _check_shape_args(parser, args.n, args.d)
    if args.m is None and args.e is None:
        parser.error("construct needs --m or --e")
    m = args.m
    if args.e is not None:
        from_e = args.n + args.e * args.d
        if m is not None and m != from_e:
            parser.error("--m %d conflicts with --e %d (which means m = %d)" % (m, args.e, from_e))
        m = from_e
    if m < 2:
        parser.error("--m must be at least 2, got %d" % (m,))

    verdict = reachability_verdict(args.n, args.d, m)
    if verdict.status == "unreachable":
        sys.stdout.write(
            _error_json(
                "PreconditionError",
                "order m=%d is unreachable on (n=%d, d=%d) curves" % (m, args.n, args.d),
                rule=verdict.deciding_rule,
            )
        )
        return EXIT_PRECONDITION

    request = ConstructionRequest(
        n=args.n, d=args.d, m=m, style=args.style, search_limit=args.c_range
    )
    try:
        cert = construct(request)
    except SearchExhausted as exc:
        sys.stdout.write(_error_json(type(exc).__name__, str(exc)))
        return EXIT_SEARCH_EXHAUSTED
    except _PRECONDITION_ERRORS as exc:
        sys.stdout.write(_error_json(type(exc).__name__, str(exc)))
        return EXIT_PRECONDITION

    ok, lines = verify_certificate(cert)
    if not ok:
        for line in lines:
            print(line, file=sys.stderr)
        sys.stdout.write(
            _error_json("VerificationError", "constructed certificate failed self-verification")
        )
        return EXIT_VERIFY_FAILED

    if args.oracle:
        ok, message = _oracle_check(cert)
        print(message, file=sys.stderr)
        if not ok:
            sys.stdout.write(_error_json("OracleMismatch", message))
            return EXIT_VERIFY_FAILED

    _emit(cert.to_json_str(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        with open(args.certificate, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        print("cannot read certificate: %s" % (exc,), file=sys.stderr)
        return EXIT_BAD_ARGS
    try:
        ok, lines = verify_certificate_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        print("malformed certificate: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_BAD_ARGS

    for line in lines:
        print(line)
    failed = [line.name for line in lines if not line.ok]
    if failed:
        if any(name == "identity" for name in failed):
            print("identity check failed")
        print("certificate INVALID (%s)" % (", ".join(failed),))
        return EXIT_VERIFY_FAILED

    if args.oracle:
        cert = TorsionCertificate.from_json_dict(obj)
        ok, message = _oracle_check(cert)
        print(message, file=sys.stderr)
        if not ok:
            print("certificate INVALID (oracle)")
            return EXIT_VERIFY_FAILED

    print("certificate VALID")
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def _scan_rows(args, parser):
    n_lo, n_hi = _parse_range(args.n, "--n", parser)
    for n in range(n_lo, n_hi + 1):
        if n <= args.d or int_gcd(n, args.d) != 1:
            continue
        if args.preset == PRESET_HYPERELLIPTIC_LADDER:
            m_lo, m_hi = n + 1, 2 * n + 1
        else:
            m_lo, m_hi = _parse_range(args.m, "--m", parser)
        for m in range(max(2, m_lo), m_hi + 1):
            yield n, m


def cmd_scan(args, parser) -> int:
    if args.d < 2:
        parser.error("--d must be at least 2, got %d" % (args.d,))
    if args.preset == PRESET_HYPERELLIPTIC_LADDER and args.d != 2:
        parser.error("preset %s requires --d 2" % (PRESET_HYPERELLIPTIC_LADDER,))
    if args.preset is None and args.m is None:
        parser.error("scan needs --m or --preset")
    if args.n is None:
        parser.error("scan needs --n")

    rows = []
    cert_paths: list[Optional[str]] = []
    certs: list[Optional[TorsionCertificate]] = []
    for n, m in _scan_rows(args, parser):
        verdict = reachability_verdict(n, args.d, m)
        row = {
            "n": n,
            "d": args.d,
            "m": m,
            "status": verdict.status,
            "deciding_rule": verdict.deciding_rule,
        }
        cert = None
        if args.construct and verdict.status == STATUS_CONSTRUCTIVE:
            try:
                cert = construct(
                    ConstructionRequest(n=n, d=args.d, m=m, search_limit=args.c_range)
                )
            except SearchExhausted as exc:
                sys.stdout.write(_error_json(type(exc).__name__, str(exc), n=n, m=m))
                return EXIT_SEARCH_EXHAUSTED
            except _PRECONDITION_ERRORS as exc:
                sys.stdout.write(_error_json(type(exc).__name__, str(exc), n=n, m=m))
                return EXIT_PRECONDITION
            ok, lines = verify_certificate(cert)
            if not ok:
                for line in lines:
                    print(line, file=sys.stderr)
                sys.stdout.write(
                    _error_json(
                        "VerificationError",
                        "certificate for n=%d m=%d failed verification" % (n, m),
                    )
                )
                return EXIT_VERIFY_FAILED
            if args.oracle:
                ok, message = _oracle_check(cert)
                print("n=%d m=%d %s" % (n, m, message), file=sys.stderr)
                if not ok:
                    sys.stdout.write(_error_json("OracleMismatch", message, n=n, m=m))
                    return EXIT_VERIFY_FAILED
        rows.append(row)
        certs.append(cert)
        cert_paths.append(None)

    if args.out is not None and args.construct:
        base, _ = os.path.splitext(args.out)
        for idx, cert in enumerate(certs):
            if cert is None:
                continue
            path = "%s-n%d-m%d.cert.json" % (base, rows[idx]["n"], rows[idx]["m"])
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(cert.to_json_str())
            cert_paths[idx] = path

    if args.format == "csv":
        import io

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "d", "m", "status", "deciding_rule", "certificate_path"])
        for row, path in zip(rows, cert_paths):
            writer.writerow(
                [row["n"], row["d"], row["m"], row["status"], row["deciding_rule"], path or ""]
            )
        _emit(buffer.getvalue(), args.out)
    else:
        payload = {"d": args.d, "rows": []}
        for row, cert, path in zip(rows, certs, cert_paths):
            entry = dict(row)
            if cert is not None:
                entry["certificate"] = cert.to_json_dict()
            if path is not None:
                entry["certificate_path"] = path
            payload["rows"].append(entry)
        _emit(canonical_json(payload), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsion-forge",
        description="Construct, verify, and tabulate torsion certificates "
        "for superelliptic curves y^d = f(x).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser(
        "construct", help="build a certificate for a point of exact order m"
    )
    p_construct.add_argument("--n", type=int, required=True, help="degree of f")
    p_construct.add_argument("--d", type=int, required=True, help="cover degree")
    p_construct.add_argument("--m", type=int, help="target torsion order")
    p_construct.add_argument(
        "--e", type=int, help="target order as m = n + e*d (alternative to --m)"
    )
    p_construct.add_argument(
        "--style",
        choices=["order-d", "order-n", "div-d", "n-plus-ed"],
        help="construction family (inferred from m when omitted)",
    )
    p_construct.add_argument(
        "--c-range",
        dest="c_range",
        type=int,
        help="candidate budget for constant searches (default: "
        "TORSION_FORGE_SEARCH_LIMIT or 64)",
    )
    p_construct.add_argument(
        "--oracle",
        action="store_true",
        help="confirm the order by d=2 divisor arithmetic (report on stderr)",
    )
    p_construct.add_argument("--out", help="write the certificate to this path")

    p_verify = sub.add_parser("verify", help="check a certificate file")
    p_verify.add_argument("certificate", help="path to a certificate JSON file")
    p_verify.add_argument(
        "--oracle",
        action="store_true",
        help="additionally confirm the order by d=2 divisor arithmetic",
    )

    p_scan = sub.add_parser(
        "scan", help="tabulate reachability verdicts over an (n, m) grid"
    )
    p_scan.add_argument("--d", type=int, required=True, help="cover degree")
    p_scan.add_argument("--n", help="degree of f: integer or a..b range")
    p_scan.add_argument("--m", help="torsion orders: integer or a..b range")
    p_scan.add_argument(
        "--preset",
        choices=[PRESET_HYPERELLIPTIC_LADDER],
        help="named grid: m in n+1..2n+1 with d=2",
    )
    p_scan.add_argument(
        "--construct",
        action="store_true",
        help="build and verify a certificate for every constructive row",
    )
    p_scan.add_argument(
        "--oracle",
        action="store_true",
        help="confirm constructed d=2 orders by divisor arithmetic",
    )
    p_scan.add_argument(
        "--c-range",
        dest="c_range",
        type=int,
        help="candidate budget for constant searches",
    )
    p_scan.add_argument(
        "--format", choices=["json", "csv"], default="json", help="output format"
    )
    p_scan.add_argument("--out", help="write the report to this path")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct":
        return cmd_construct(args, parser)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_scan(args, parser)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
