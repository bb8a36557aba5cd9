"""Command-line surface: ladder inspection, certificate assembly,
search, and re-verification.

Exit codes: 0 verified/ok, 1 verification failed, 2 usage error or bad
input file, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Tuple

from .certificates import (Certificate, VerificationReport, gl_certificate,
                           verify_certificate)
from .certio import (CertificateFormatError, read_certificate,
                     write_certificate)
from .fields import Field, PrimeField, QQ
from .ladders import (Ladder, enumerate_ladders, is_closed,
                      is_upper_triangular, ladder_space)
from .onestep import SearchExhaustedError, assemble_one_step_certificate


def _step(text: str) -> Tuple[int, int]:
    try:
        i, j = text.split(",")
        return (int(i), int(j))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"step must look like 'i,j', got {text!r}") from None


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _field_from_args(args) -> Field:
    if args.field == "rational":
        return QQ
    return PrimeField(args.prime)


def _add_field_options(sub) -> None:
    sub.add_argument("--field", choices=("rational", "fp"),
                     default="rational",
                     help="scalar field: exact rationals (default) or the "
                          "prime-field cross-check backend")
    sub.add_argument("--prime", type=int, default=101,
                     help="modulus for --field fp (default 101)")


def _report_json(report: VerificationReport) -> dict:
    return {
        "kernel_dim": report.kernel_dim,
        "tensor_count": report.tensor_count,
        "span_rank": report.span_rank,
        "first_noncommuting": report.first_noncommuting,
        "verdict": report.verdict,
    }


def _print_report(report: VerificationReport, as_json: bool,
                  extra: Optional[dict] = None) -> None:
    if as_json:
        obj = _report_json(report)
        if extra:
            obj.update(extra)
        print(json.dumps(obj, sort_keys=True))
    elif report.proven:
        print(f"{report.tensor_count} = {report.span_rank} = "
              f"{report.kernel_dim} {report.verdict}")
    else:
        print(report.summary())


def _parse_ladder(args) -> Ladder:
    if not args.step:
        raise ValueError("at least one --step i,j is required")
    return Ladder(args.n, args.step)


def _cmd_ladder_check(args) -> int:
    ladder = _parse_ladder(args)
    space = ladder_space(ladder)
    field = _field_from_args(args)
    ut = is_upper_triangular(ladder)
    closed_assoc = is_closed(space, "associative", field)
    closed_lie = is_closed(space, "lie", field)
    if args.json:
        print(json.dumps({
            "n": ladder.n,
            "steps": [list(s) for s in ladder.steps],
            "dim": space.dim,
            "upper_triangular": ut,
            "closed_associative": closed_assoc,
            "closed_lie": closed_lie,
        }, sort_keys=True))
    else:
        steps = ", ".join(f"({i},{j})" for i, j in ladder.steps)
        print(f"ladder n={ladder.n} steps=[{steps}] dim={space.dim}")
        print(f"upper-triangular: {_yesno(ut)}; "
              f"closed (associative): {_yesno(closed_assoc)}; "
              f"closed (lie): {_yesno(closed_lie)}")
    return 0


def _cmd_ladder_enumerate(args) -> int:
    ks = [args.k] if args.k is not None else list(range(1, args.n + 1))
    field = _field_from_args(args)
    rows = []
    for k in ks:
        for ladder in enumerate_ladders(args.n, k):
            entry = {
                "n": ladder.n,
                "steps": [list(s) for s in ladder.steps],
                "upper_triangular": is_upper_triangular(ladder),
            }
            if args.closure:
                entry[f"closed_{args.closure}"] = is_closed(
                    ladder_space(ladder), args.closure, field)
            rows.append(entry)
    if args.json:
        print(json.dumps(rows, sort_keys=True))
    else:
        for entry in rows:
            steps = ", ".join(f"({i},{j})" for i, j in entry["steps"])
            line = (f"steps=[{steps}] "
                    f"upper-triangular={_yesno(entry['upper_triangular'])}")
            if args.closure:
                line += (f" closed-{args.closure}="
                         f"{_yesno(entry['closed_' + args.closure])}")
            print(line)
    return 0


def _assemble(args) -> Tuple[Certificate, VerificationReport]:
    if len(args.step) != 1:
        raise ValueError("certificate assembly takes exactly one --step "
                         "(one-step ladders only)")
    (i1, j1), = args.step
    cert = assemble_one_step_certificate(args.n, i1, j1,
                                         field=_field_from_args(args),
                                         budget=args.budget)
    return cert, verify_certificate(cert)


def _finish_certificate(cert: Certificate, report: VerificationReport,
                        args, out_required: bool) -> int:
    out = getattr(args, "out", None)
    if out_required and out is None:
        raise ValueError("--out is required for this command")
    extra = None
    if out is not None and report.proven:
        write_certificate(cert, out, verified=True)
        extra = {"certificate_path": out}
    _print_report(report, args.json, extra)
    if out is not None and not report.proven:
        print("not writing a certificate that failed verification",
              file=sys.stderr)
    return 0 if report.proven else 1


def _cmd_zpd_assemble(args) -> int:
    cert, report = _assemble(args)
    return _finish_certificate(cert, report, args, out_required=True)


def _cmd_zpd_verify(args) -> int:
    cert, report = _assemble(args)
    return _finish_certificate(cert, report, args, out_required=False)


def _cmd_zpd_gl(args) -> int:
    if args.m < 1:
        raise ValueError(f"--m must be positive, got {args.m}")
    cert = gl_certificate(args.m, _field_from_args(args), args.budget)
    if cert is None:
        print(f"search budget exhausted on gl_{args.m}", file=sys.stderr)
        return 3
    report = verify_certificate(cert)
    return _finish_certificate(cert, report, args, out_required=False)


def _cmd_cert_verify(args) -> int:
    cert = read_certificate(args.path)
    report = verify_certificate(cert)
    _print_report(report, args.json)
    return 0 if report.proven else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ladderzpd",
        description="Exact-arithmetic certificates that ladder matrix Lie "
                    "algebras are zero product determined.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("ladder-check",
                        help="upper-triangularity and closure of one ladder")
    p.add_argument("--n", type=int, required=True, help="ambient matrix size")
    p.add_argument("--step", type=_step, action="append", default=[],
                   metavar="i,j", help="ladder step (repeatable)")
    _add_field_options(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ladder_check)

    p = subs.add_parser("ladder-enumerate",
                        help="list all ladders on n (optionally fixed step "
                             "count), with upper-triangularity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="step count filter")
    p.add_argument("--closure", choices=("associative", "lie"), default=None,
                   help="also report closure under this product")
    _add_field_options(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ladder_enumerate)

    for name, fn, out_help in (
            ("zpd-assemble", _cmd_zpd_assemble,
             "write the verified certificate here (required)"),
            ("zpd-verify", _cmd_zpd_verify,
             "write the verified certificate here (optional)")):
        p = subs.add_parser(
            name,
            help="build and verify the rank-one spanning certificate for a "
                 "one-step ladder" + (" and write it" if name == "zpd-assemble"
                                      else ""))
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--step", type=_step, action="append", default=[],
                       metavar="i,j", help="the single ladder step")
        _add_field_options(p)
        p.add_argument("--budget", type=int, default=None,
                       help="candidate limit for the gl block search")
        p.add_argument("--out", default=None, help=out_help)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=fn)

    p = subs.add_parser("zpd-gl",
                        help="search a rank-one spanning certificate for "
                             "gl_m under the bracket")
    p.add_argument("--m", type=int, required=True)
    _add_field_options(p)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_zpd_gl)

    p = subs.add_parser("cert-verify",
                        help="read a certificate file and re-verify it "
                             "from scratch")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cert_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SearchExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CertificateFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
