"""Command-line front end.

Subcommands: ``sigma``, ``torsion-table``, ``verify`` and ``johnson``.
Exit codes: 0 success, 1 invalid parameters, 2 internal disagreement or a
failed check, 64 bad flags.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath

from . import render
from .errors import ParameterError, PrecisionExhausted, TorsionError
from .realpoly import DEFAULT_PRECISION
from .recurrence import sigma_by_recurrence, verify_three_term, x_relation_holds
from .surgery import ab_pairs, validate_params
from .torsion_polynomial import (
    check_degree,
    check_normalization,
    compare_with_listing,
    johnson_sigma_bar,
    root_multiset_check,
    sigma,
    sigma_oracle,
    trefoil_bridge,
)
from .torsion_values import lemma44_check, torsion_table

EXIT_OK, EXIT_INVALID, EXIT_FAILED, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _n_values(args) -> list[int]:
    if args.n_range is not None:
        lo, hi = args.n_range
        return list(range(lo, hi + 1))
    if args.n is None:
        raise UsageError("one of --n or --n-range is required")
    return [args.n]


def _digits(precision_bits: int) -> int:
    return max(10, int(precision_bits * 0.30103) - 5)


def _output_record(params, result, oracle_ok, recurrence_ok) -> dict:
    return {
        "p": params.p,
        "q": params.q,
        "n": params.n,
        "N": params.N,
        "degree": max(result.degree, 0),
        "coefficients": render.coefficient_strings(result.sigma),
        "normalization_ok": check_normalization(result),
        "degree_ok": check_degree(result),
        "oracle_match": oracle_ok,
        "recurrence_ok": recurrence_ok,
        "precision_bits_used": result.precision_bits_used,
    }


def cmd_sigma(args) -> int:
    records, rendered = [], []
    for n in _n_values(args):
        params = validate_params(args.p, args.q, n)
        runs = {}
        if args.method in ("construct", "all"):
            runs["construct"] = sigma(params, args.precision)
        if args.method in ("oracle", "all"):
            runs["oracle"] = sigma_oracle(params, args.precision)
        if args.method in ("recurrence", "all"):
            runs["recurrence"] = sigma_by_recurrence(params, args.precision)
        main = next(iter(runs.values()))
        oracle_ok = recurrence_ok = None
        if args.method == "all":
            oracle_ok = runs["oracle"].sigma == main.sigma
            recurrence_ok = runs["recurrence"].sigma == main.sigma
            if not (oracle_ok and recurrence_ok):
                print(f"error: methods disagree for {params}", file=sys.stderr)
                return EXIT_FAILED
        records.append(_output_record(params, main, oracle_ok, recurrence_ok))
        if args.format == "latex":
            rendered.append(render.to_latex(main.sigma))
        else:
            rendered.append(render.to_text(main.sigma))
    if args.format == "json":
        payload = records if args.n_range is not None else records[0]
        print(json.dumps(payload))
    elif args.n_range is None:
        print(rendered[0])
    else:
        for rec, line in zip(records, rendered):
            print(f"n={rec['n']}: {line}")
    return EXIT_OK


def cmd_torsion_table(args) -> int:
    params = validate_params(args.p, args.q, args.n)
    table = torsion_table(params, args.precision, include_nonacyclic=args.all_classes)
    digits = _digits(args.precision)

    def fmt(x):
        return "0" if x is None or x == 0 else mpmath.nstr(x, digits)

    if args.format == "json":
        print(json.dumps({
            "p": params.p, "q": params.q, "n": params.n, "N": params.N,
            "precision_bits": args.precision,
            "rows": [
                {"a": r.rep.a, "b": r.rep.b, "k": r.rep.k,
                 "tau": fmt(r.tau), "inv_tau": None if r.inv_tau is None else fmt(r.inv_tau)}
                for r in table.rows
            ],
        }))
        return EXIT_OK
    if args.format == "latex":
        print(r"\begin{tabular}{ccc}")
        print(r"$(a,b,k)$ & $\tau$ & $1/\tau$ \\ \hline")
        for r in table.rows:
            print(f"$({r.rep.a},{r.rep.b},{r.rep.k})$ & {fmt(r.tau)} & {fmt(r.inv_tau)} \\\\")
        print(r"\end{tabular}")
        return EXIT_OK
    print(f"# {params} N={params.N} precision={args.precision} rows={len(table.rows)}")
    print("a,b,k\ttau\tinv_tau")
    for r in table.rows:
        print(f"{r.rep}\t{fmt(r.tau)}\t{fmt(r.inv_tau)}")
    return EXIT_OK


VERIFY_COLUMNS = ("lemma44", "normalization", "degree", "oracle", "recurrence",
                  "three_term", "x_relation", "roots")


def verify_row(p: int, q: int, n: int, precision_bits: int) -> dict:
    """Run every check for one surgery coefficient; values are True/False/None."""
    params = validate_params(p, q, n)
    row = dict.fromkeys(VERIFY_COLUMNS)
    main = sigma(params, precision_bits)
    bits = max(precision_bits, main.precision_bits_used)
    if n != 0:
        _, _, disc = lemma44_check(params, precision_bits)
        row["lemma44"] = bool(disc < mpmath.ldexp(1, -(precision_bits - 20)))
        row["roots"] = root_multiset_check(main, precision_bits).passed
    row["normalization"] = check_normalization(main)
    row["degree"] = check_degree(main)
    row["oracle"] = sigma_oracle(params, precision_bits).sigma == main.sigma
    row["recurrence"] = sigma_by_recurrence(params, precision_bits).sigma == main.sigma
    row["three_term"] = all(
        verify_three_term(p, q, a, b, (n - 1, n + 1), bits).passed for a, b in ab_pairs(params)
    )
    row["x_relation"] = x_relation_holds(p, q, n)
    row["_result"] = main
    return row


def cmd_verify(args) -> int:
    lo, hi = args.n_range
    validate_params(args.p, args.q, lo)
    print(f"verify (2p,q)=({2 * args.p},{args.q}) n={lo}..{hi} precision={args.precision}")
    print("n\tN\t" + "\t".join(VERIFY_COLUMNS))
    ok, notes = True, []
    for n in range(lo, hi + 1):
        row = verify_row(args.p, args.q, n, args.precision)
        cells = []
        for col in VERIFY_COLUMNS:
            v = row[col]
            cells.append("n/a" if v is None else ("PASS" if v else "FAIL"))
            ok &= v is not False
        N = abs(2 * args.p * args.q * n + 1)
        print(f"{n}\t{N}\t" + "\t".join(cells))
        comparison = compare_with_listing(row["_result"])
        if comparison is not None:
            notes.append(comparison.summary())
    for note in notes:
        print(f"note: {note}")
    print(f"overall: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_johnson(args) -> int:
    ok = True
    values = _n_values(args)
    for n in values:
        poly = johnson_sigma_bar(n)
        text = render.to_latex(poly) if args.format == "latex" else render.to_text(poly)
        if args.format == "json":
            text = json.dumps({"n": n, "degree": max(poly.degree, 0),
                               "coefficients": render.coefficient_strings(poly)})
        print(text if len(values) == 1 else f"n={n}: {text}")
        if args.check:
            passed = trefoil_bridge(n, args.precision)
            ok &= passed
            print(f"check sigma-bar(t) = sigma(t/2) at n={n}: {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="knot-torsion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, n_mode):
        if n_mode != "none":
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--q", type=int, required=True)
        if n_mode == "single":
            sp.add_argument("--n", type=int, required=True)
        elif n_mode == "either":
            sp.add_argument("--n", type=int)
            sp.add_argument("--n-range", type=parse_range)
        elif n_mode == "range":
            sp.add_argument("--n-range", type=parse_range, required=True)
        sp.add_argument("--precision", type=int, default=DEFAULT_PRECISION)

    sp = sub.add_parser("sigma", help="torsion polynomial")
    common(sp, "either")
    sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sp.add_argument("--method", choices=("construct", "oracle", "recurrence", "all"), default="all")
    sp.set_defaults(func=cmd_sigma)

    sp = sub.add_parser("torsion-table", help="torsion values per representation class")
    common(sp, "single")
    sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sp.add_argument("--all-classes", action="store_true",
                    help="include non-acyclic classes (torsion 0)")
    sp.set_defaults(func=cmd_torsion_table)

    sp = sub.add_parser("verify", help="run every consistency check over a range of n")
    common(sp, "range")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("johnson", help="trefoil polynomial sigma-bar by its recurrence")
    sp.add_argument("--n", type=int)
    sp.add_argument("--n-range", type=parse_range)
    sp.add_argument("--check", action="store_true")
    sp.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sp.set_defaults(func=cmd_johnson)
    return parser


def _join_range_values(argv: list[str]) -> list[str]:
    # "--n-range -3..3" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--n-range" and i + 1 < len(argv):
            out.append(f"--n-range={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _join_range_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    if args.precision < 16:
        print("error: --precision must be at least 16", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except PrecisionExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except TorsionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
