"""Command-line interface: sequence tables, series expansion, identity checks.

Three subcommands::

    polybern table SEQ [--max-n N] [--k K] [--m M --l L --n N]
    polybern expand GF [--order N] [--k K] [--x RAT] [--n N]
    polybern verify ID|all [--order N] [--max-l L] [--max-m M] [--max-n N]
                           [--n N] [--r R] [--mode series|sample]

plus ``--format csv|json|text`` and ``--output FILE`` everywhere it makes
sense.  Exit codes: 0 success / all identities pass, 1 at least one identity
failed, 2 usage or parameter error.  Output is byte-deterministic for a
fixed command line.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .combinatorics import format_rational, stirling_first, stirling_second
from .identities import (
    IDENTITY_IDS,
    ParameterError,
    REGISTRY,
    VerificationReport,
    egf_closed_form,
    beta1_series,
    f1_series,
    g1_series,
    verify_all,
    verify_one,
)
from .polybernoulli import (
    bernoulli,
    egf_poly_bernoulli_B,
    egf_poly_bernoulli_C,
    egf_poly_bernoulli_polynomial,
    genocchi,
    poly_bernoulli_B,
    poly_bernoulli_C,
    script_B_closed,
)
from .series import DomainError, Series1, Series2

TABLE_SEQUENCES = (
    "stirling1",
    "stirling2",
    "bernoulli",
    "genocchi",
    "polybernoulli-B",
    "polybernoulli-C",
    "scriptB",
)
EXPAND_FUNCTIONS = ("egf-B", "egf-C", "egf-poly", "egf-scriptB", "ogf-f1", "g1", "beta1")
DEFAULT_EXPAND_ORDER = 32

# Maps each CLI verify flag to the identity-parameter name it sets.
_VERIFY_FLAGS = {
    "order": "order",
    "max_l": "max_l",
    "max_m": "max_m",
    "max_n": "max_n",
    "n": "n",
    "r": "r",
    "mode": "mode",
}


class UsageError(ValueError):
    """A structurally valid command line with missing/invalid option values."""


@dataclass(frozen=True)
class CliConfig:
    command: str
    target: str
    fmt: str
    output: Optional[str]
    options: dict = field(default_factory=dict)


def _render(value) -> str:
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return str(value)


def _json_value(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_json_value(item) for item in value]
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polybern",
        description="Exact poly-Bernoulli / Stirling / Genocchi tables and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a sequence table")
    table.add_argument("sequence", choices=TABLE_SEQUENCES)
    table.add_argument("--max-n", type=int, default=10, dest="max_n")
    table.add_argument("--k", type=int, help="upper index for polybernoulli-B/C")
    table.add_argument("--m", type=int, help="scriptB: largest first index")
    table.add_argument("--l", type=int, help="scriptB: largest second index")
    table.add_argument("--n", type=int, help="scriptB: fixed argument n")
    table.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    table.add_argument("--output")

    expand = sub.add_parser("expand", help="expand a named generating function (JSON)")
    expand.add_argument("function", choices=EXPAND_FUNCTIONS)
    expand.add_argument("--order", type=int, default=DEFAULT_EXPAND_ORDER)
    expand.add_argument("--k", type=int, help="polylogarithm order for egf-B/C/poly")
    expand.add_argument(
        "--x", help="rational evaluation point for egf-poly (e.g. 1/2; use --x=-1/3)"
    )
    expand.add_argument("--n", type=int, help="argument n for egf-scriptB")
    expand.add_argument("--format", choices=("csv", "json", "text"), default="json")
    expand.add_argument("--output")

    verify = sub.add_parser("verify", help="verify one identity or the full inventory")
    verify.add_argument("identity", choices=IDENTITY_IDS + ("all",))
    verify.add_argument("--order", type=int)
    verify.add_argument("--max-l", type=int, dest="max_l")
    verify.add_argument("--max-m", type=int, dest="max_m")
    verify.add_argument("--max-n", type=int, dest="max_n")
    verify.add_argument("--n", type=int, help="point parameter for single-point identities")
    verify.add_argument("--r", type=int, help="upper index for stirling-expansion")
    verify.add_argument("--mode", choices=("series", "sample"))
    verify.add_argument("--format", choices=("json", "text"), default="text")
    verify.add_argument("--output")
    return parser


# ---------------------------------------------------------------------------
# table


def _table_rows(config: CliConfig):
    sequence = config.target
    opts = config.options
    max_n = opts["max_n"]
    if max_n < 0:
        raise UsageError("--max-n must be non-negative")
    if sequence in ("stirling1", "stirling2"):
        fn = stirling_first if sequence == "stirling1" else stirling_second
        header = ("n", "m", "value")
        rows = [(n, m, fn(n, m)) for n in range(max_n + 1) for m in range(n + 1)]
        return header, rows, {"max_n": max_n}
    if sequence == "bernoulli":
        return ("n", "value"), [(n, bernoulli(n)) for n in range(max_n + 1)], {"max_n": max_n}
    if sequence == "genocchi":
        return ("n", "value"), [(n, genocchi(n)) for n in range(max_n + 1)], {"max_n": max_n}
    if sequence in ("polybernoulli-B", "polybernoulli-C"):
        k = opts.get("k")
        if k is None:
            raise UsageError(f"table {sequence} requires --k")
        fn = poly_bernoulli_B if sequence == "polybernoulli-B" else poly_bernoulli_C
        header = ("n", "k", "value")
        rows = [(n, k, fn(n, k)) for n in range(max_n + 1)]
        return header, rows, {"max_n": max_n, "k": k}
    # scriptB
    m, l, n = opts.get("m"), opts.get("l"), opts.get("n")
    if m is None or l is None or n is None:
        raise UsageError("table scriptB requires --m, --l and --n")
    if min(m, l, n) < 0:
        raise UsageError("scriptB indices must be non-negative")
    header = ("m", "l", "n", "value")
    rows = [
        (mi, li, n, script_B_closed(mi, li, n))
        for mi in range(m + 1)
        for li in range(l + 1)
    ]
    return header, rows, {"m": m, "l": l, "n": n}


def _table_document(config: CliConfig) -> str:
    header, rows, params = _table_rows(config)
    if config.fmt == "csv":
        lines = [",".join(header)]
        lines.extend(",".join(_render(v) for v in row) for row in rows)
        return "\n".join(lines) + "\n"
    if config.fmt == "json":
        doc = {
            "sequence": config.target,
            "params": params,
            "header": list(header),
            "rows": [[_json_value(v) for v in row] for row in rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    # text: right-aligned columns
    cells = [tuple(_render(v) for v in row) for row in rows]
    widths = [
        max(len(header[i]), max((len(row[i]) for row in cells), default=0))
        for i in range(len(header))
    ]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.extend("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# expand


def _expand_series(config: CliConfig):
    name = config.target
    opts = config.options
    order = opts["order"]
    if order < 0:
        raise UsageError("--order must be non-negative")
    if name in ("egf-B", "egf-C", "egf-poly"):
        k = opts.get("k")
        if k is None:
            raise UsageError(f"expand {name} requires --k")
        if name == "egf-B":
            return egf_poly_bernoulli_B(k, order), ("t",), {"k": k, "order": order}
        if name == "egf-C":
            return egf_poly_bernoulli_C(k, order), ("t",), {"k": k, "order": order}
        raw = opts.get("x")
        if raw is None:
            raise UsageError("expand egf-poly requires --x (a rational such as 1/2)")
        try:
            x = Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"invalid rational for --x: {raw!r}") from exc
        series = egf_poly_bernoulli_polynomial(k, x, order)
        return series, ("t",), {"k": k, "x": format_rational(x), "order": order}
    if name == "egf-scriptB":
        n = opts.get("n")
        if n is None:
            raise UsageError("expand egf-scriptB requires --n")
        if n < 0:
            raise UsageError("--n must be non-negative")
        return egf_closed_form(n, order), ("x", "y"), {"n": n, "order": order}
    if name == "ogf-f1":
        return f1_series(order), ("x",), {"order": order}
    if name == "g1":
        return g1_series(order), ("x",), {"order": order}
    return beta1_series(order), ("x",), {"order": order}


def _expand_document(config: CliConfig) -> str:
    if config.fmt != "json":
        raise UsageError("expand emits JSON only; use --format json")
    series, variables, params = _expand_series(config)
    if isinstance(series, Series1):
        coefficients = [[str(i), _render(series[i])] for i in range(series.order + 1)]
        orders = {variables[0]: series.order}
    else:
        coefficients = [
            [f"{i},{j}", _render(series[i, j])]
            for i in range(series.order + 1)
            for j in range(series.order - i + 1)
        ]
        orders = {variables[0]: series.order, variables[1]: series.order}
    doc = {
        "generating_function": config.target,
        "parameters": params,
        "variable_orders": orders,
        "coefficients": coefficients,
    }
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# verify


def _report_json(report: VerificationReport) -> dict:
    counterexample = None
    if report.counterexample is not None:
        counterexample = {
            "at": {name: _json_value(value) for name, value in report.counterexample.location},
            "lhs": _render(report.counterexample.lhs),
            "rhs": _render(report.counterexample.rhs),
        }
    return {
        "identity": report.identity_id,
        "params": {name: _json_value(value) for name, value in report.parameters.items()},
        "passed": report.passed,
        "counterexample": counterexample,
        "checked": report.checked_count,
    }


def _report_line(report: VerificationReport) -> str:
    params = " ".join(f"{name}={_render(value)}" for name, value in report.parameters.items())
    if report.passed:
        return f"ok    {report.identity_id}  [{params}]  checked={report.checked_count}"
    at = " ".join(f"{name}={_render(value)}" for name, value in report.counterexample.location)
    return (
        f"FAIL  {report.identity_id}  [{params}]  at {at}: "
        f"lhs={_render(report.counterexample.lhs)} rhs={_render(report.counterexample.rhs)} "
        f"checked={report.checked_count}"
    )


def _verify_reports(config: CliConfig) -> list[VerificationReport]:
    overrides = {
        param: config.options[flag]
        for flag, param in _VERIFY_FLAGS.items()
        if config.options.get(flag) is not None
    }
    if config.target == "all":
        per_identity = {
            identity_id: {
                name: value
                for name, value in overrides.items()
                if name in dict(REGISTRY[identity_id].defaults)
            }
            for identity_id in IDENTITY_IDS
        }
        return verify_all(per_identity)
    return [verify_one(config.target, **overrides)]


def _verify_document(config: CliConfig) -> tuple[str, bool]:
    reports = _verify_reports(config)
    all_passed = all(r.passed for r in reports)
    if config.fmt == "json":
        payload = [_report_json(r) for r in reports]
        doc = payload[0] if config.target != "all" else payload
        return json.dumps(doc, indent=2) + "\n", all_passed
    lines = [_report_line(r) for r in reports]
    if config.target == "all":
        passed = sum(r.passed for r in reports)
        lines.append(f"{passed}/{len(reports)} identities verified")
    return "\n".join(lines) + "\n", all_passed


# ---------------------------------------------------------------------------
# driver


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    options = {
        name: value
        for name, value in vars(args).items()
        if name not in ("command", "sequence", "function", "identity", "format", "output")
    }
    target = getattr(args, "sequence", None) or getattr(args, "function", None) or getattr(
        args, "identity", None
    )
    return CliConfig(args.command, target, args.format, args.output, options)


def _emit(document: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(document)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(document)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    config = _config_from_args(args)
    try:
        if config.command == "table":
            document, failed = _table_document(config), False
        elif config.command == "expand":
            document, failed = _expand_document(config), False
        else:
            document, all_passed = _verify_document(config)
            failed = not all_passed
        _emit(document, config.output)
    except (UsageError, ParameterError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 1 if failed else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
