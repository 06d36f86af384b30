"""Command-line front end.

Exit codes: 0 success, 1 domain error (message on stderr, no traceback),
2 usage error (argparse).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import characters, dimensions, polynomials, tableaux
from .partitions import (
    PartitionError,
    format_partition,
    ordinary_skew_shape,
    parse_partition,
    shifted_skew_shape,
    contains,
)

DEFAULT_MAX_N = 500
MAX_RHO = 9


class DomainError(Exception):
    pass


def _partition_arg(text: str, role: str, strict: bool = False):
    try:
        return parse_partition(text, strict_required=strict)
    except PartitionError as exc:
        if strict and "repeated" in str(exc):
            raise DomainError(f"{role} partition not strict") from exc
        raise DomainError(f"{role} partition invalid: {exc}") from exc


def _rationals(text: str, role: str) -> list[Fraction]:
    text = text.strip()
    if not text:
        return []
    try:
        return [Fraction(tok.strip()) for tok in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"{role}: cannot parse rational list {text!r}") from exc


def _int_list(text: str, role: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise DomainError(f"{role}: expected comma-separated integers") from exc


def _dump_json(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(fmt: str, plain: str, record: dict) -> str:
    if fmt == "json":
        return _dump_json(record)
    if fmt == "csv":
        return _csv(list(record), [[_csv_cell(v) for v in record.values()]])
    return plain


def _csv_cell(v):
    return v if isinstance(v, (int, str)) else _dump_json(v)


def cmd_dim(args) -> str:
    shifted = not args.ordinary
    outer = _partition_arg(args.outer, "outer", strict=shifted)
    inner = _partition_arg(args.inner, "inner", strict=shifted)
    if sum(inner) > sum(outer):
        raise DomainError("inner partition larger than outer")
    if args.oracle:
        if not contains(inner, outer):
            value = 0
        elif shifted:
            value = tableaux.count_shifted_standard_tableaux(shifted_skew_shape(outer, inner))
        else:
            value = tableaux.count_ordinary_standard_tableaux(ordinary_skew_shape(outer, inner))
    else:
        value = dimensions.g_skew(outer, inner) if shifted else dimensions.f_skew(outer, inner)
    record = {
        "kind": "shifted" if shifted else "ordinary",
        "outer": outer.serialize(),
        "inner": inner.serialize(),
        "method": "oracle" if args.oracle else "formula",
        "value": value,
    }
    return _emit(args.format, str(value), record)


def cmd_eval(args) -> str:
    if args.H:
        index = _partition_arg(args.index, "index", strict=True)
        value = polynomials.capital_H(index)
        family = "H"
    elif args.sstar:
        index = _partition_arg(args.index, "index")
        value = polynomials.eval_sstar(index, _rationals(args.point, "point"))
        family = "sstar"
    elif args.p:
        index = _partition_arg(args.index, "index")
        value = polynomials.power_sum_eval(index, _rationals(args.point, "point"))
        family = "p"
    elif args.P:
        index = _partition_arg(args.index, "index", strict=True)
        value = polynomials.eval_P(index, _rationals(args.point, "point"))
        family = "P"
    else:
        index = _partition_arg(args.index, "index", strict=True)
        value = polynomials.eval_Pstar_at(index, _rationals(args.point, "point"))
        family = "Pstar"
    text = str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    record = {"family": family, "index": index.serialize(), "point": args.point or "", "value": polynomials.format_rational(value)}
    return _emit(args.format, text, record)


def _plain_poly(components: dict) -> str:
    terms = []
    for d in sorted(components, reverse=True):
        for kappa, c in components[d].coeffs.items():
            terms.append(f"{c}*m[{format_partition(kappa)}]")
    return " + ".join(terms) if terms else "0"


def cmd_expand(args) -> str:
    strict = args.family in ("P", "Pstar")
    index = _partition_arg(args.index, "index", strict=strict)
    if args.nvars < 1:
        raise DomainError("nvars must be positive")
    if args.family != "p" and args.nvars > 7:
        raise DomainError("symbolic expansion of P/Pstar is limited to nvars <= 7")
    components = polynomials.expand_in_monomials(args.family, index, args.nvars)
    record = {
        "family": args.family,
        "index": index.serialize(),
        "n_vars": args.nvars,
        "components": [components[d].to_json() for d in sorted(components)],
    }
    if args.format == "csv":
        rows = [
            [d, format_partition(k), polynomials.format_rational(c)]
            for d in sorted(components)
            for k, c in components[d].coeffs.items()
        ]
        return _csv(["degree", "partition", "coefficient"], rows)
    if args.format == "json":
        return _dump_json(record)
    return _plain_poly(components)


def cmd_char(args) -> str:
    if args.k < 1:
        raise DomainError("k must be positive")
    if args.k > characters.MAX_CHARACTER_DEGREE:
        raise DomainError(f"k exceeds the configured bound {characters.MAX_CHARACTER_DEGREE}")
    if args.table or not (args.mu and args.rho):
        table = characters.character_table(args.k)
        data = table.to_json()
        if args.format == "json":
            return _dump_json(data)
        if args.format == "csv":
            return _csv(["mu", "rho", "a", "b"], [[r["mu"], r["rho"], r["a"], r["b"]] for r in data["rows"]])
        return "\n".join(f"{mu.serialize()}\t{rho.serialize()}\t{v}" for (mu, rho), v in table.entries.items())
    mu = _partition_arg(args.mu, "mu", strict=True)
    rho = _partition_arg(args.rho, "rho")
    if sum(mu) != args.k or sum(rho) != args.k:
        raise DomainError(f"mu and rho must both be partitions of k={args.k}")
    value = characters.char_value(mu, rho)
    record = {"mu": mu.serialize(), "rho": rho.serialize(),
              "a": polynomials.format_rational(value.a), "b": polynomials.format_rational(value.b)}
    return _emit(args.format, str(value), record)


def cmd_psi(args) -> str:
    gamma = characters.ThomaPoint(tuple(_rationals(args.gamma, "gamma")))
    rho = _partition_arg(args.rho, "rho")
    value = characters.psi(gamma, rho)
    record = {"gamma": args.gamma, "rho": rho.serialize(),
              "a": polynomials.format_rational(value.a), "b": polynomials.format_rational(value.b)}
    return _emit(args.format, str(value), record)


def cmd_converge(args) -> str:
    gamma = characters.ThomaPoint(tuple(_rationals(args.gamma, "gamma")))
    rho = _partition_arg(args.rho, "rho")
    ns = _int_list(args.ns, "ns")
    if sum(rho) > MAX_RHO:
        raise DomainError(f"|rho| is capped at {MAX_RHO}")
    if any(n > args.max_n for n in ns):
        raise DomainError(f"n is capped at {args.max_n}; raise it with --max-n")
    rows = characters.convergence_table(gamma, rho, ns)
    if args.format == "json":
        return _dump_json([
            {"n": r.n, "lambda": r.lam.serialize(),
             "xi_a": polynomials.format_rational(r.xi.a), "xi_b": polynomials.format_rational(r.xi.b),
             "psi_a": polynomials.format_rational(r.psi.a), "psi_b": polynomials.format_rational(r.psi.b),
             "abs_error": f"{r.abs_error:.30E}"}
            for r in rows
        ])
    return characters.convergence_csv(rows).rstrip("\n")


def cmd_verify(args) -> str:
    from .verification import run_acceptance

    results = run_acceptance(args.level, echo=lambda line: print(line, flush=True))
    failed = [r.name for r in results if not r.passed]
    if failed:
        raise DomainError(f"{len(failed)} acceptance check(s) failed")
    return f"all {len(results)} acceptance checks passed"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shiftdim", description="Dimensions of shifted diagrams and spin characters.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("dim", help="dimension of a (shifted) skew diagram")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--shifted", action="store_true", help="shifted diagram (default)")
    kind.add_argument("--ordinary", action="store_true")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="")
    p.add_argument("--oracle", action="store_true", help="count tableaux by backtracking")
    add_format(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("eval", help="evaluate a polynomial at a point")
    fam = p.add_mutually_exclusive_group()
    fam.add_argument("--pstar", action="store_true", help="factorial P-polynomial (default)")
    fam.add_argument("--P", action="store_true", help="Schur P-polynomial")
    fam.add_argument("--p", action="store_true", help="power sum")
    fam.add_argument("--sstar", action="store_true", help="shifted Schur polynomial")
    fam.add_argument("--H", action="store_true", help="normalization constant H(index)")
    p.add_argument("--index", required=True)
    p.add_argument("--point", default="")
    add_format(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("expand", help="monomial expansion")
    p.add_argument("--family", choices=("P", "Pstar", "p"), required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--nvars", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("char", help="spin character values")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mu")
    p.add_argument("--rho")
    p.add_argument("--table", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("psi", help="limit character value")
    p.add_argument("--gamma", required=True)
    p.add_argument("--rho", required=True)
    add_format(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("converge", help="convergence table of normalized characters")
    p.add_argument("--gamma", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--ns", required=True)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (DomainError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
