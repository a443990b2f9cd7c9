"""Command-line front end: every verification and scan as a subcommand with
machine-readable output.

Exit codes: 0 when every requested check verifies, 1 when a check fails,
2 on usage or precision errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import identities, scans, zeros
from .dirichlet import characters_mod
from .forms import delta, dim_Mk, dim_Sk, eisenstein_level1, eisenstein_levelN, jfunction, miller_basis
from .hecke import eigenbasis, galois_conjugate, hecke_matrix
from .numfield import NumberField

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def _default_prec(k: int) -> int:
    return 10 * dim_Mk(k) + 10


def _env_prec() -> int | None:
    raw = os.environ.get("MODFORMS_PREC")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise CliError(f"MODFORMS_PREC must be an integer, got {raw!r}")
    if value <= 0:
        raise CliError("MODFORMS_PREC must be positive")
    return value


def _resolve_prec(args, k: int | None = None) -> int:
    if getattr(args, "prec", None):
        return args.prec
    env = _env_prec()
    if env:
        return env
    return _default_prec(k) if k is not None else 60


def _parse_character(spec: str):
    """Character spec "N:index" against the characters_mod(N) enumeration."""
    try:
        modulus, index = spec.split(":")
        modulus, index = int(modulus), int(index)
    except ValueError:
        raise CliError(f"character spec must look like N:index, got {spec!r}")
    chars = characters_mod(modulus)
    if not 0 <= index < len(chars):
        raise CliError(f"character index out of range: {modulus} has {len(chars)} characters")
    return chars[index]


def _emit(args, payload: dict, text_renderer=None) -> None:
    fmt = args.output
    if fmt == "json":
        out = json.dumps(payload, indent=2, sort_keys=False)
    elif fmt == "csv":
        rows = payload.get("csv")
        if rows is None:
            raise CliError("this subcommand has no CSV rendering; use --output json")
        out = "\n".join(",".join(str(x) for x in row) for row in rows)
    else:
        out = text_renderer(payload) if text_renderer else json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_qexp(args) -> int:
    name = args.form
    if name.startswith("EisNk:"):
        psi_spec, phi_spec, t, k = name[len("EisNk:") :].split(",")
        k = int(k)
        prec = _resolve_prec(args, k)
        form = eisenstein_levelN(
            _parse_character(psi_spec), _parse_character(phi_spec), int(t), k, prec
        )
        _emit(args, form.as_json())
        return EXIT_OK
    if name == "Delta":
        prec = _resolve_prec(args, 12)
        _emit(args, delta(prec).as_json())
        return EXIT_OK
    if name == "j":
        prec = _resolve_prec(args, 12)
        series = jfunction(prec)
        payload = series.as_json()
        payload["note"] = "series of j*q; shift the exponent down by one"
        _emit(args, payload)
        return EXIT_OK
    if name.startswith("Ek:"):
        k = int(name[3:])
    elif name.startswith("E") and name[1:].isdigit():
        k = int(name[1:])
    else:
        raise CliError(f"unknown form {name!r}")
    prec = _resolve_prec(args, k)
    _emit(args, eisenstein_level1(k, prec).as_json())
    return EXIT_OK


def cmd_basis(args) -> int:
    k = args.weight
    prec = _resolve_prec(args, k)
    basis = miller_basis(k, prec, cusp_only=args.cusp)
    payload = {
        "weight": k,
        "cusp_only": args.cusp,
        "dim": basis.dim,
        "forms": [f.as_json() for f in basis.forms],
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_hecke(args) -> int:
    matrix = hecke_matrix(args.index, args.weight)
    _emit(args, matrix.as_json())
    return EXIT_OK


def cmd_eigen(args) -> int:
    k = args.weight
    prec = args.prec or max(3 * dim_Sk(k) + 5, 12)
    forms = eigenbasis(k, prec=prec)
    payload = {"weight": k, "dim": dim_Sk(k), "forms": [f.as_json() for f in forms]}
    if isinstance(forms[0].field, NumberField) and forms[0].field.degree == 2:
        payload["conjugate"] = galois_conjugate(forms[0]).as_json()
    _emit(args, payload)
    return EXIT_OK


def cmd_decompose(args) -> int:
    k = args.weight
    report = identities.nonvanishing_report(k, prec=args.prec)
    _emit(args, report.as_json())
    return EXIT_OK if report.all_nonzero else EXIT_FAILED


def _render_reports(payload: dict) -> str:
    lines = []
    for rep in payload["reports"]:
        status = rep["status"].upper()
        extra = f" ({rep['detail']})" if rep.get("detail") else ""
        lines.append(f"{rep['name']:<12} {status}{extra}")
        for d in rep.get("discrepancies", []):
            entry = ", ".join(f"{key}={val}" for key, val in d.items())
            lines.append(f"    discrepancy: {entry}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    prec = args.prec or 100
    which = args.target
    if which == "ramanujan":
        reports = [identities.verify_ramanujan(min(prec, 200), congruence_range=500)]
    elif which == "e24":
        reports = [identities.verify_e24(min(prec, 80))]
    elif which == "e32":
        reports = [identities.verify_e32(min(prec, 80))]
    elif which == "table1":
        reports = [identities.verify_table1(30)]
    elif which == "all":
        reports = identities.verify_all(prec)
    else:
        raise CliError(f"unknown verification target {which!r}")
    payload = {"reports": [r.as_json() for r in reports]}
    _emit(args, payload, _render_reports)
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FAILED


def cmd_zeros(args) -> int:
    report = zeros.jvalue_algebraicity_check(
        args.n,
        tol_match=args.tol_match,
        tol_zero=args.tol_zero,
        seed=args.seed,
    )
    _emit(args, report.as_json())
    return EXIT_OK if report.verified else EXIT_FAILED


def cmd_maeda(args) -> int:
    if args.range:
        try:
            lo, hi = (int(x) for x in args.range.split(".."))
        except ValueError:
            raise CliError("range must look like k1..k2")
        ks = [k for k in range(lo, hi + 1) if k % 2 == 0 and dim_Sk(k) >= 1]
    elif args.weight is not None:
        ks = [args.weight]
    else:
        raise CliError("give a weight or --range")
    reports = [scans.maeda_check(k) for k in ks]
    payload = {"reports": [r.as_json() for r in reports]}
    _emit(args, payload)
    return EXIT_OK if all(r.irreducible for r in reports) else EXIT_FAILED


def cmd_finiteness(args) -> int:
    report = scans.finiteness_scan(
        Fraction(args.a), Fraction(args.b), k_max=args.kmax, l_max=args.lmax
    )
    payload = report.as_json()
    payload["csv"] = [["k", "conductor", "alpha_abs", "beta_abs", "excluded_by"]] + [
        [c.k, c.conductor, f"{c.alpha_abs:.6e}", f"{c.beta_abs:.6e}", c.excluded_by or "enumerated"]
        for c in report.cells
    ]
    _emit(args, payload)
    return EXIT_OK


def cmd_bounds(args) -> int:
    k = args.weight
    conductors = [int(x) for x in args.conductors.split(",")]
    checks = []
    for modulus in conductors:
        for chi in characters_mod(modulus):
            if chi.is_primitive() and chi.parity() == (-1) ** k:
                checks.append(scans.bernoulli_bound_check(k, chi))
    payload = {
        "weight": k,
        "checks": [c.as_json() for c in checks],
        "all_hold": all(c.holds for c in checks),
    }
    payload["csv"] = [["k", "conductor", "lower", "actual", "upper", "holds"]] + [
        [c.k, c.conductor, f"{c.lower:.6e}", f"{c.actual:.6e}", f"{c.upper:.6e}", c.holds]
        for c in checks
    ]
    _emit(args, payload)
    return EXIT_OK if all(c.holds for c in checks) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to a file instead of stdout")
    common.add_argument("--prec", type=int, help="q-expansion precision override")
    common.add_argument("--seed", type=int, default=0, help="root-finder perturbation seed")
    common.add_argument("--tol-zero", dest="tol_zero", type=float, default=1e-12)
    common.add_argument("--tol-match", dest="tol_match", type=float, default=1e-8)

    parser = argparse.ArgumentParser(
        prog="modforms",
        description="Exact q-expansions, Hecke eigenbases and identity verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qexp", parents=[common], help="print a q-expansion")
    p.add_argument("form", help="E4, E6, Ek:k, Delta, j, or EisNk:psi,phi,t,k")
    p.set_defaults(func=cmd_qexp)

    p = sub.add_parser("basis", parents=[common], help="echelon basis of a weight")
    p.add_argument("weight", type=int)
    p.add_argument("--cusp", action="store_true")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("hecke", parents=[common], help="Hecke matrix and charpoly")
    p.add_argument("index", type=int)
    p.add_argument("weight", type=int)
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("eigen", parents=[common], help="normalized eigenbasis")
    p.add_argument("weight", type=int)
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser(
        "decompose", parents=[common], help="decompose the weight-k eigenform square"
    )
    p.add_argument("weight", type=int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="identity verification reports")
    p.add_argument("target", choices=("ramanujan", "e24", "e32", "table1", "all"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("zeros", parents=[common], help="j-algebraicity report for weight 12n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser(
        "maeda", parents=[common], help="irreducibility and cycle-type evidence"
    )
    p.add_argument("weight", type=int, nargs="?")
    p.add_argument("--range", help="k1..k2")
    p.set_defaults(func=cmd_maeda)

    p = sub.add_parser(
        "finiteness", parents=[common], help="scan the coefficient equation region"
    )
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--kmax", type=int, default=60)
    p.add_argument("--lmax", type=int, default=10)
    p.set_defaults(func=cmd_finiteness)

    p = sub.add_parser(
        "bounds", parents=[common], help="Bernoulli-magnitude sandwich table"
    )
    p.add_argument("weight", type=int)
    p.add_argument("conductors", help="comma-separated conductor list")
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
