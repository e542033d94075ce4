"""Command-line interface: term computation, matrix powers, identity checks, tables.

Output contract:

* JSON with a top-level ``schema_version: "1"``; every rational is an
  exact ``num/den`` string (``/den`` dropped when the denominator is 1),
  never a float. Output is byte-deterministic for identical inputs.
* CSV (term and table only) carries the same values with a header row.
* Exit codes: 0 success, 1 identity-verification mismatch, 2 usage error,
  3 domain error (singular matrix / repeated root).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .binet import DegenerateDiscriminantError, binet_fib, binet_lucas
from .exact import Mat2, SingularMatrixError, format_rational, parse_rational
from .genmatrix import (
    det_power,
    matrix_power,
    power_closed_form,
    term_fast,
)
from .identities import (
    DEFAULT_RANGES,
    STANDARD_VALUES,
    IdentityId,
    IdentityReport,
    expectation,
    report_matches_expectation,
    verify_grid,
)
from .sequences import SeqParams, SequenceKind, term_recurrence

SCHEMA_VERSION = "1"
MAX_COUNTEREXAMPLES_SHOWN = 25


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"invalid range {text!r}: expected LO..HI")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"invalid range {text!r}: endpoints must be integers") from None
    if lo_i > hi_i:
        raise UsageError(f"invalid range {text!r}: lower end exceeds upper end")
    return lo_i, hi_i


def _parse_rational_set(text: str) -> tuple[Fraction, ...]:
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise UsageError("empty parameter set")
    return tuple(_parse_rational_arg(s) for s in items)


def _params(args) -> SeqParams:
    a = _parse_rational_arg(args.a)
    b = _parse_rational_arg(args.b)
    try:
        return SeqParams(a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _kind(text: str) -> SequenceKind:
    return SequenceKind.FIBONACCI if text == "fib" else SequenceKind.LUCAS


def _mat_strings(m: Mat2) -> list[list[str]]:
    return [
        [format_rational(m.e11), format_rational(m.e12)],
        [format_rational(m.e21), format_rational(m.e22)],
    ]


def _value_json(v):
    if isinstance(v, Mat2):
        return _mat_strings(v)
    return format_rational(v)


def _emit_json(record) -> str:
    return json.dumps(record, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="biperiodic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    term = sub.add_parser("term", help="compute sequence terms")
    term.add_argument("--kind", choices=("fib", "lucas"), required=True)
    term.add_argument("--a", required=True)
    term.add_argument("--b", required=True)
    term.add_argument("--n", type=int)
    term.add_argument("--n-range", dest="n_range")
    term.add_argument(
        "--method", choices=("recurrence", "matrix", "binet"), default="recurrence"
    )
    term.add_argument("--format", choices=("json", "csv"), default="json")

    matrix = sub.add_parser("matrix", help="generating-matrix powers")
    matrix.add_argument("--a", required=True)
    matrix.add_argument("--b", required=True)
    matrix.add_argument("--n", type=int, required=True)
    matrix.add_argument(
        "--show", choices=("entries", "closed-form", "det", "all"), default="entries"
    )

    verify = sub.add_parser("verify", help="grid-verify identities")
    verify.add_argument("--identity", default="all")
    verify.add_argument("--a-set", dest="a_set")
    verify.add_argument("--b-set", dest="b_set")
    verify.add_argument("--n-range", dest="n_range")
    verify.add_argument("--m-range", dest="m_range")

    table = sub.add_parser("table", help="tabulate terms over an index range")
    table.add_argument("--a", required=True)
    table.add_argument("--b", required=True)
    table.add_argument("--n-range", dest="n_range", required=True)
    table.add_argument("--kinds", default="fib,lucas")
    table.add_argument("--format", choices=("json", "csv"), default="json")

    return parser


def _term_values(p: SeqParams, kind: SequenceKind, method: str, ns):
    for n in ns:
        if method == "recurrence":
            yield n, term_recurrence(p, kind, n)
        elif method == "matrix":
            yield n, term_fast(p, kind, n)
        else:
            value = binet_fib(p, n) if kind is SequenceKind.FIBONACCI else binet_lucas(p, n)
            yield n, value


def cmd_term(args) -> tuple[str, int]:
    p = _params(args)
    if (args.n is None) == (args.n_range is None):
        raise UsageError("exactly one of --n and --n-range is required")
    if args.n is not None:
        ns = [args.n]
        range_echo = None
    else:
        lo, hi = _parse_range(args.n_range)
        ns = range(lo, hi + 1)
        range_echo = f"{lo}..{hi}"
    kind = _kind(args.kind)
    results = [
        {"n": n, "value": format_rational(v)}
        for n, v in _term_values(p, kind, args.method, ns)
    ]
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "term",
        "params": {
            "kind": args.kind,
            "a": format_rational(p.a),
            "b": format_rational(p.b),
            "n": args.n,
            "n_range": range_echo,
            "method": args.method,
        },
        "results": results,
    }
    if args.format == "csv":
        lines = ["n,value"] + [f"{r['n']},{r['value']}" for r in results]
        return "\n".join(lines) + "\n", 0
    return _emit_json(record), 0


def _closed_form_json(p: SeqParams, n: int):
    cf = power_closed_form(p, n)
    symbol = "q" if cf.parity == "even" else "l"
    labels = [
        [f"{symbol}({n + 1})", f"{symbol}({n})"],
        [f"(b/a)*{symbol}({n})", f"{symbol}({n - 1})"],
    ]
    return {
        "parity": cf.parity,
        "scale_ab_pow": cf.scale_ab_pow,
        "scale_abp4_pow": cf.scale_abp4_pow,
        "scale": format_rational(cf.scale()),
        "core_labels": labels,
        "core": _mat_strings(cf.core),
    }


def cmd_matrix(args) -> tuple[str, int]:
    p = _params(args)
    n, show = args.n, args.show
    if show == "closed-form" and n < 1:
        raise UsageError("--show closed-form requires --n >= 1")
    result = {}
    if show in ("entries", "all"):
        result["entries"] = _mat_strings(matrix_power(p, n))
    if show in ("det", "all"):
        if n >= 1:
            det = det_power(p, n)
        else:
            if n < 0 and p.ab_plus_4 == 0:
                raise SingularMatrixError(
                    "ab + 4 = 0: determinant is 0, negative powers do not exist"
                )
            det = ((p.a * p.a) / (p.b * p.b) * p.ab_plus_4) ** n
        result["det"] = format_rational(det)
    if show in ("closed-form", "all") and n >= 1:
        result["closed_form"] = _closed_form_json(p, n)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "matrix",
        "params": {
            "a": format_rational(p.a),
            "b": format_rational(p.b),
            "n": n,
            "show": show,
        },
        "result": result,
    }
    return _emit_json(record), 0


def _report_json(report: IdentityReport):
    shown = report.counterexamples[:MAX_COUNTEREXAMPLES_SHOWN]
    return {
        "identity": report.identity.value,
        "a_values": [format_rational(a) for a in report.a_values],
        "b_values": [format_rational(b) for b in report.b_values],
        "n_range": f"{report.n_range[0]}..{report.n_range[1]}",
        "m_range": None
        if report.m_range is None
        else f"{report.m_range[0]}..{report.m_range[1]}",
        "checked": report.checked,
        "passed": report.passed,
        "failed": report.failed,
        "expected": expectation(report.identity).value,
        "as_expected": report_matches_expectation(report),
        "excluded": [
            {"a": format_rational(e.a), "b": format_rational(e.b), "reason": e.reason}
            for e in report.excluded
        ],
        "counterexamples_total": len(report.counterexamples),
        "counterexamples": [
            {
                "a": format_rational(ce.a),
                "b": format_rational(ce.b),
                "indices": list(ce.indices),
                "lhs": _value_json(ce.lhs),
                "rhs": _value_json(ce.rhs),
            }
            for ce in shown
        ],
    }


def cmd_verify(args) -> tuple[str, int]:
    if args.identity == "all":
        idents = list(IdentityId)
    else:
        try:
            idents = [IdentityId(args.identity)]
        except ValueError:
            known = ", ".join(i.value for i in IdentityId)
            raise UsageError(
                f"unknown identity {args.identity!r}; expected 'all' or one of: {known}"
            ) from None
    a_vals = _parse_rational_set(args.a_set) if args.a_set else STANDARD_VALUES
    b_vals = _parse_rational_set(args.b_set) if args.b_set else STANDARD_VALUES
    if any(v == 0 for v in a_vals + b_vals):
        raise UsageError("sequence parameters must be nonzero")
    n_override = _parse_range(args.n_range) if args.n_range else None
    m_override = _parse_range(args.m_range) if args.m_range else None

    reports = []
    for ident in idents:
        n_default, m_default = DEFAULT_RANGES[ident]
        report = verify_grid(
            ident,
            a_vals,
            b_vals,
            n_range=n_override or n_default,
            m_range=m_override or m_default,
        )
        reports.append(report)
    all_ok = all(report_matches_expectation(r) for r in reports)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "params": {
            "identity": args.identity,
            "a_values": [format_rational(a) for a in a_vals],
            "b_values": [format_rational(b) for b in b_vals],
        },
        "all_as_expected": all_ok,
        "reports": [_report_json(r) for r in reports],
    }
    return _emit_json(record), 0 if all_ok else 1


def cmd_table(args) -> tuple[str, int]:
    p = _params(args)
    lo, hi = _parse_range(args.n_range)
    kinds = []
    for item in args.kinds.split(","):
        item = item.strip()
        if item not in ("fib", "lucas"):
            raise UsageError(f"invalid kind {item!r}: expected fib or lucas")
        if item not in kinds:
            kinds.append(item)
    rows = []
    for n in range(lo, hi + 1):
        row = {"n": n}
        for kind in kinds:
            row[kind] = format_rational(term_recurrence(p, _kind(kind), n))
        rows.append(row)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "table",
        "params": {
            "a": format_rational(p.a),
            "b": format_rational(p.b),
            "n_range": f"{lo}..{hi}",
            "kinds": kinds,
        },
        "results": rows,
    }
    if args.format == "csv":
        header = ",".join(["n"] + kinds)
        lines = [header] + [
            ",".join([str(r["n"])] + [r[k] for k in kinds]) for r in rows
        ]
        return "\n".join(lines) + "\n", 0
    return _emit_json(record), 0


_COMMANDS = {
    "term": cmd_term,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
    "table": cmd_table,
}

#: Flags that always take a value. Each "--flag value" pair is merged into
#: "--flag=value" before parsing so values with a leading dash (negative
#: rationals, ranges like -3..3) are never mistaken for option strings.
_VALUE_FLAGS = frozenset(
    {
        "--a",
        "--b",
        "--n",
        "--kind",
        "--kinds",
        "--method",
        "--format",
        "--show",
        "--identity",
        "--a-set",
        "--b-set",
        "--n-range",
        "--m-range",
    }
)


def _absorb_flag_values(argv: list[str]) -> list[str]:
    merged = []
    i = 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            merged.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            merged.append(argv[i])
            i += 1
    return merged


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(_absorb_flag_values(list(argv)))
        output, code = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SingularMatrixError, DegenerateDiscriminantError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    sys.stdout.write(output)
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
