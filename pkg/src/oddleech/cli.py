"""Command-line front end: build/verify frames, analyze lattices, run the
q-series identity, search representations, print theta coefficients.

Exit codes: 0 success, 1 verification/identity failure, 2 usage or input
error (argparse uses 2 for bad flags on its own).  All JSON output has
sorted keys and a fixed integer encoding so results are byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, construction, frames, qseries
from .codes import code_c4, code_c11, code_d4, is_self_dual

_CODES = {"C4": code_c4, "D4": code_d4, "C11": code_c11}


def _emit(payload: dict, fmt: str, out_path: str | None, text_lines: list[str]) -> None:
    if fmt == "text":
        rendered = "\n".join(text_lines) + "\n"
    else:
        rendered = frames.dumps_canonical(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)


def _workers_env() -> int:
    # Accepted for interface compatibility; the library is single-process
    # and deterministic, so this only validates the value.
    raw = os.environ.get("NUM_WORKERS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"NUM_WORKERS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("NUM_WORKERS must be at least 1")
    return value


def cmd_frame_build(args: argparse.Namespace) -> int:
    if args.k < 3:
        raise ValueError("k must be at least 3 (the lattice has minimum norm 3)")
    cert = frames.build_frame(args.k)
    if not frames.verify_frame(cert):  # build_frame re-verifies; belt and braces
        print("error: internal verification failed", file=sys.stderr)
        return 1
    payload = frames.certificate_to_dict(cert)
    text = [f"frame of norm {cert.k} in ambient {cert.ambient}: verified"]
    _emit(payload, args.format, args.out, text)
    return 0


def cmd_frame_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read certificate: {exc}") from exc
    cert = frames.certificate_from_dict(data)
    report = frames.frame_check_report(cert)
    valid = report["gram_ok"] and report["membership_ok"]
    payload = {"valid": valid, **report, "k": frames._encode_int(cert.k)}
    text = [f"certificate for k={cert.k}: " + ("valid" if valid else "INVALID")]
    _emit(payload, args.format, args.out, text)
    return 0 if valid else 1


def cmd_lattice_analyze(args: argparse.Namespace) -> int:
    builder = _CODES.get(args.code)
    if builder is None:
        raise ValueError(f"unknown code id {args.code!r}; pick from C4, D4, C11")
    code = builder()
    lattice = construction.construction_a(code, code_id=args.code)
    unimodular = analysis.is_unimodular(lattice)
    even = analysis.is_even(lattice) if unimodular else None
    report = analysis.short_vectors(lattice, args.bound)
    counts = report.counts_by_norm
    payload = {
        "code": args.code,
        "selfDual": is_self_dual(code),
        "unimodular": unimodular,
        "even": even,
        "minNorm": min(counts) if counts else None,
        "countsByNorm": {str(n): c for n, c in sorted(counts.items())},
        "bound": args.bound,
    }
    text = [
        f"code {args.code}: unimodular={unimodular} even={even} "
        f"minNorm={payload['minNorm']} counts={payload['countsByNorm']}"
    ]
    _emit(payload, args.format, args.out, text)
    return 0


def cmd_qseries_identity(args: argparse.Namespace) -> int:
    if args.bound < 1:
        raise ValueError("bound must be positive")
    if args.inject_b_fault is not None:
        # test hook: perturb one eta coefficient and rerun the comparison
        n = args.bound
        theta = qseries.quaternary_theta(qseries.congruence_gram(), n)
        sig = qseries.sigma1_series(n).coefficients(n)
        b = qseries.b_series(n).coefficients(n)
        idx = args.inject_b_fault
        if not 1 <= idx <= n:
            raise ValueError("fault index out of range")
        b[idx] += 1
        holds, first = qseries._identity_check_arrays(
            theta.coefficients(n), sig, b, n
        )
    else:
        holds, first = qseries.identity_check(args.bound)
    payload = {"holds": holds, "bound": args.bound, "firstMismatch": first}
    text = [
        f"identity up to {args.bound}: "
        + ("holds" if holds else f"first mismatch at n={first}")
    ]
    _emit(payload, args.format, args.out, text)
    return 0 if holds else 1


def cmd_represent(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise ValueError("k must be positive")
    rep = frames.represent_quaternary(args.k)
    payload = {
        "k": args.k,
        "representation": list(rep.as_tuple()) if rep else None,
        "value": rep.value if rep else None,
    }
    text = [f"k={args.k}: " + (str(rep.as_tuple()) if rep else "none")]
    _emit(payload, args.format, args.out, text)
    return 0


def cmd_theta(args: argparse.Namespace) -> int:
    builder = _CODES.get(args.code)
    if builder is None:
        raise ValueError(f"unknown code id {args.code!r}; pick from C4, D4, C11")
    if args.n < 0:
        raise ValueError("n must be non-negative")
    lattice = construction.construction_a(builder(), code_id=args.code)
    coeffs = analysis.theta_coeffs(lattice, args.n)
    payload = {"code": args.code, "n": args.n, "coefficients": coeffs}
    series = qseries.QSeries(precision=args.n, offset24=0, coeffs=tuple(coeffs))
    text = [f"theta({args.code}): {series.sparse_str()}"]
    _emit(payload, args.format, args.out, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddleech",
        description="Orthogonal frames in the odd Leech lattice, with exact certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=None, help="write output to this file")
        p.add_argument("--format", choices=("json", "text"), default="json")

    frame = sub.add_parser("frame", help="build or verify frame certificates")
    frame_sub = frame.add_subparsers(dest="frame_command", required=True)
    fb = frame_sub.add_parser("build", help="construct a verified frame of norm k")
    fb.add_argument("--k", type=int, required=True)
    add_common(fb)
    fb.set_defaults(func=cmd_frame_build)
    fv = frame_sub.add_parser("verify", help="re-verify a certificate file")
    fv.add_argument("path")
    add_common(fv)
    fv.set_defaults(func=cmd_frame_verify)

    lattice = sub.add_parser("lattice", help="lattice-level reports")
    lattice_sub = lattice.add_subparsers(dest="lattice_command", required=True)
    la = lattice_sub.add_parser("analyze", help="unimodularity, parity, short vectors")
    la.add_argument("--code", required=True, choices=sorted(_CODES))
    la.add_argument("--bound", type=int, default=4)
    add_common(la)
    la.set_defaults(func=cmd_lattice_analyze)

    qs = sub.add_parser("qseries", help="q-series checks")
    qs_sub = qs.add_subparsers(dest="qseries_command", required=True)
    qi = qs_sub.add_parser("identity", help="theta vs eta-quotient comparison")
    qi.add_argument("--bound", type=int, default=qseries.DEFAULT_IDENTITY_BOUND)
    qi.add_argument("--inject-b-fault", type=int, default=None, help=argparse.SUPPRESS)
    add_common(qi)
    qi.set_defaults(func=cmd_qseries_identity)

    rep = sub.add_parser("represent", help="quaternary representation search")
    rep.add_argument("--k", type=int, required=True)
    add_common(rep)
    rep.set_defaults(func=cmd_represent)

    theta = sub.add_parser("theta", help="theta coefficients of a code lattice")
    theta.add_argument("--code", required=True, choices=sorted(_CODES))
    theta.add_argument("--n", type=int, required=True)
    add_common(theta)
    theta.set_defaults(func=cmd_theta)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _workers_env()
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
