"""Command line entry point: ``egfbern table | poly | series-op | verify``.

Exit codes: 0 success, 2 usage or input-format error, 3 precondition
violation inside the algebra, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence

from . import __version__
from . import qseries as qs
from .bernoulli import bernoulli_numbers, bernoulli_polynomials
from .catalog import SeriesName, SignedRatio, builtin_series, hypergeom_series
from .compositional import comp_bernoulli_numbers, comp_bernoulli_polynomials
from .errors import ParseError, SeriesError
from .qseries import EgfSeries, render_polynomial, render_rational

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4
DEFAULT_ORDER = 16


class UsageError(Exception):
    pass


# -- SeriesFile -------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesFile:
    order: int
    coeffs: tuple

    kind = "egf"

    @classmethod
    def from_series(cls, f: EgfSeries) -> "SeriesFile":
        return cls(f.order, f.coeffs)

    def to_series(self) -> EgfSeries:
        return EgfSeries(self.coeffs)


def _strict_rational(text) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"coefficient {text!r} must be a string")
    r = qs.parse_rational(text)
    if render_rational(r) != text.strip() or text != text.strip():
        raise ParseError(f"coefficient {text!r} is not in canonical form 'p/q' (lowest terms, q > 0)")
    return r


def parse_series_file(text: str) -> SeriesFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"series file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"kind", "order", "coeffs"}:
        raise ParseError("series file needs exactly the fields kind, order, coeffs")
    if doc["kind"] != "egf":
        raise ParseError(f"unsupported kind {doc['kind']!r}")
    order = doc["order"]
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise ParseError("order must be a natural number")
    coeffs = doc["coeffs"]
    if not isinstance(coeffs, list) or len(coeffs) != order + 1:
        raise ParseError(f"coeffs must be a list of length order + 1 = {order + 1}")
    return SeriesFile(order, tuple(_strict_rational(c) for c in coeffs))


def render_series_file(s: SeriesFile) -> str:
    doc = {"kind": "egf", "order": s.order, "coeffs": [render_rational(c) for c in s.coeffs]}
    return json.dumps(doc)


def load_series(spec: str, order: int) -> EgfSeries:
    """A catalog name is built at ``order``; a file is truncated to it when longer."""
    try:
        return builtin_series(SeriesName.parse(spec), order)
    except ParseError:
        pass
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"{spec!r} is neither a catalog series nor a readable file")
    f = parse_series_file(path.read_text(encoding="utf-8")).to_series()
    return f.truncate(min(order, f.order))


# -- rendering ----------------------------------------------------------------------


def render_values(pairs: Sequence[tuple], fmt: str, label: str = "value") -> str:
    """``pairs`` are ``(index, text)``; formats: row, csv, md, json."""
    if fmt == "row":
        return ",".join(v for _, v in pairs)
    if fmt == "csv":
        return "\n".join([f"n,{label}"] + [f"{n},{v}" for n, v in pairs])
    if fmt == "md":
        head = "| n | " + " | ".join(str(n) for n, _ in pairs) + " |"
        rule = "|---|" + "---|" * len(pairs)
        body = f"| {label} | " + " | ".join(v for _, v in pairs) + " |"
        return "\n".join((head, rule, body))
    if fmt == "json":
        return json.dumps([{"n": n, label: v} for n, v in pairs])
    raise UsageError(f"unknown format {fmt!r}")


# -- commands -----------------------------------------------------------------------


def cmd_table(kind: str, series: str, N: int, max_n: int, fmt: str) -> str:
    if max_n < 0 or N < 0:
        raise UsageError("--N and --max-n must be non-negative")
    f = load_series(series, max(N + max_n, DEFAULT_ORDER))
    if kind == "bernoulli":
        values = bernoulli_numbers(f, N, max_n).values
        pairs = list(enumerate(values))
    else:
        if max_n < 1:
            raise UsageError("compositional tables start at n = 1; use --max-n >= 1")
        values = comp_bernoulli_numbers(f, N, max_n).values
        pairs = list(enumerate(values))[1:]
    return render_values([(n, render_rational(v)) for n, v in pairs], fmt)


def cmd_poly(kind: str, series: str, N: int, n: int, fmt: str) -> str:
    if n < 0 or N < 0:
        raise UsageError("--N and --n must be non-negative")
    f = load_series(series, max(N + n, DEFAULT_ORDER))
    if kind == "bernoulli":
        polys = [(m, bernoulli_polynomials(f, N, m)) for m in range(n + 1)]
    else:
        polys = [(m, comp_bernoulli_polynomials(f, N, m)) for m in range(1, n + 1)]
    pairs = [(m, render_polynomial(p)) for m, p in polys]
    if fmt == "text":
        return "\n".join(v for _, v in pairs)
    return render_values(pairs, fmt, label="polynomial")


def cmd_series_op(op: str, args) -> str:
    T = args.order
    if T < 0:
        raise UsageError("-T must be non-negative")
    if op == "hypergeom":
        if None in (args.p, args.q, args.r):
            raise UsageError("hypergeom needs --p, --q and --r")
        rs = [SignedRatio.parse(s) for s in (args.p, args.q, args.r)]
        result = hypergeom_series(*rs, T)
    else:
        if args.input is None:
            raise UsageError(f"{op} needs --in")
        f = load_series(args.input, T)
        if op in ("compose", "mul", "add"):
            if args.with_ is None:
                raise UsageError(f"{op} needs --with")
            g = load_series(args.with_, T)
            result = {"compose": qs.compose, "mul": qs.series_mul, "add": qs.series_add}[op](f, g)
        elif op == "reciprocal":
            result = qs.reciprocal(f)
        else:
            result = qs.comp_inverse(f)
    return render_series_file(SeriesFile.from_series(result))


def cmd_verify(suite: str, max_n: int, fmt: str, out: List[str]) -> int:
    from . import verify

    checks = verify.run(suite, max_n)
    out.append(verify.render_json(checks) if fmt == "json" else verify.render_text(checks))
    return EXIT_OK if verify.succeeded(checks) else EXIT_VERIFY


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="egfbern", description="Exact generalized Bernoulli numbers.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print B_{N,n}^f or C_{N,n}^f")
    t.add_argument("--kind", choices=("bernoulli", "comp"), required=True)
    t.add_argument("--series", required=True, help="catalog name or series file")
    t.add_argument("--N", type=int, required=True)
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--format", choices=("row", "csv", "md", "json"), default="row")

    q = sub.add_parser("poly", help="print B_{N,m}^f(x) or C_{N,m}^f(x) for m <= n")
    q.add_argument("--kind", choices=("bernoulli", "comp"), required=True)
    q.add_argument("--series", required=True)
    q.add_argument("--N", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--format", choices=("text", "csv", "md", "json"), default="text")

    s = sub.add_parser("series-op", help="series arithmetic; prints a series file")
    s.add_argument("op", choices=("reciprocal", "compose", "invert", "mul", "add", "hypergeom"))
    s.add_argument("--in", dest="input")
    s.add_argument("--with", dest="with_")
    s.add_argument("--p")
    s.add_argument("--q")
    s.add_argument("--r")
    s.add_argument("-T", "--order", type=int, default=DEFAULT_ORDER)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--suite", choices=("tables", "oracles", "properties", "all"), default="all")
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--format", choices=("text", "json"), default="text")
    return p


def run(argv: Sequence[str]) -> tuple:
    """Return ``(exit_code, stdout_text, stderr_text)``.

    argparse still prints its own usage and help messages directly.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    out: List[str] = []
    code = EXIT_OK
    try:
        if args.command == "table":
            out.append(cmd_table(args.kind, args.series, args.N, args.max_n, args.format))
        elif args.command == "poly":
            out.append(cmd_poly(args.kind, args.series, args.N, args.n, args.format))
        elif args.command == "series-op":
            out.append(cmd_series_op(args.op, args))
        else:
            code = cmd_verify(args.suite, args.max_n, args.format, out)
    except (UsageError, ParseError) as exc:
        return EXIT_USAGE, "", f"egfbern: error: {exc}\n"
    except SeriesError as exc:
        return EXIT_PRECONDITION, "", f"egfbern: {exc.code}: {exc}\n"
    except ValueError as exc:
        return EXIT_PRECONDITION, "", f"egfbern: invalid-argument: {exc}\n"
    return code, "".join(s + "\n" for s in out), ""


def main(argv=None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
