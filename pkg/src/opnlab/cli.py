"""Command-line front end: screening, divisor sums, constants, bound tables.

Subcommands: sigma, screen, radical, table, constants.  Output formats are
human (default), csv, and jsonl; the machine formats are byte-deterministic
for identical inputs.  Exit codes: 0 consistent/success, 1 refuted, 2 on
usage or internal errors.  All decimal renderings are produced by exact
long division of the underlying rationals, never through floating point.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import bound_tables, screener
from .abundancy import abundancy_report
from .constants import Precision, threshold_enclosure
from .errors import OpnlabError, ParseError
from .exact_arith import as_rational
from .primes import Factorization, factorize, set_prime_cap

SIGMA_DECIMAL_DIGITS = 12

_FACTOR_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def decimal_str(q: Fraction, digits: int) -> str:
    """Decimal rendering by long division, truncated toward zero."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, rem = divmod(q.numerator, q.denominator)
    if digits <= 0:
        return f"{sign}{whole}"
    out = []
    for _ in range(digits):
        rem *= 10
        d, rem = divmod(rem, q.denominator)
        out.append(str(d))
    return f"{sign}{whole}." + "".join(out)


def frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_factorization(text: str) -> Factorization:
    """Parse 'n' (auto-factorized) or explicit 'p^e*p^e*...' ('^e' optional)."""
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty factorization")
    if compact.isdigit():
        return factorize(int(compact))
    pairs = []
    for part in compact.split("*"):
        m = _FACTOR_RE.match(part)
        if not m:
            raise ParseError(f"cannot parse factor {part!r}")
        pairs.append((int(m.group(1)), int(m.group(2) or 1)))
    return Factorization.from_pairs(pairs)


def parse_width(text: str) -> Fraction:
    try:
        width = as_rational(text)
    except OpnlabError as exc:
        raise ParseError(f"cannot parse width {text!r}") from exc
    if width <= 0:
        raise ParseError(f"width must be > 0, got {text!r}")
    return width


def _certified_digits(width: Fraction) -> int:
    # smallest d with 10^-d <= width, plus one display digit
    d = 0
    while Fraction(1, 10**d) > width and d < 10_000:
        d += 1
    return d + 1


def _emit(lines) -> None:
    for line in lines:
        print(line)


# --- sigma ---------------------------------------------------------------


def _cmd_sigma(args) -> int:
    f = parse_factorization(args.number)
    report = abundancy_report(f)
    dec = decimal_str(report.sigma_minus_one, SIGMA_DECIMAL_DIGITS)
    if args.format == "csv":
        _emit(
            [
                "n,factorization,sigma,sigma_minus_one,sigma_minus_one_decimal,classification",
                f"{report.n},{f},{report.sigma},{frac_str(report.sigma_minus_one)},"
                f"{dec},{report.classification.value}",
            ]
        )
    elif args.format == "jsonl":
        print(
            json.dumps(
                {
                    "n": report.n,
                    "factorization": str(f),
                    "sigma": report.sigma,
                    "sigma_minus_one": frac_str(report.sigma_minus_one),
                    "sigma_minus_one_decimal": dec,
                    "classification": report.classification.value,
                }
            )
        )
    else:
        _emit(
            [
                f"n: {report.n}",
                f"factorization: {f}",
                f"sigma: {report.sigma}",
                f"sigma_minus_one: {frac_str(report.sigma_minus_one)} (~{dec})",
                f"classification: {report.classification.value}",
            ]
        )
    return 0


# --- screen --------------------------------------------------------------

_CHECK_NAMES = ("eulerian_form", "perfect", "radical")


def _verdict_cells(v: screener.ScreenVerdict) -> tuple[str, str, str]:
    condition = v.violated_condition.value if v.violated_condition else ""
    witness = frac_str(v.witness) if v.witness is not None else ""
    dec = decimal_str(v.witness, SIGMA_DECIMAL_DIGITS) if v.witness is not None else ""
    return condition, witness, dec


def _verdict_line(name: str, v: screener.ScreenVerdict) -> str:
    if not v.violates:
        return f"{name}: ConsistentSoFar"
    condition, witness, dec = _verdict_cells(v)
    line = f"{name}: Violates[{condition}]"
    if witness:
        line += f" witness={witness} (~{dec})"
    return line


def _cmd_screen(args) -> int:
    f = parse_factorization(args.factorization)
    verdicts = screener.full_screen(f)
    if args.format == "csv":
        lines = ["check,outcome,violated_condition,witness,witness_decimal"]
        for name, v in zip(_CHECK_NAMES, verdicts):
            condition, witness, dec = _verdict_cells(v)
            lines.append(f"{name},{v.outcome.value},{condition},{witness},{dec}")
        _emit(lines)
    elif args.format == "jsonl":
        for name, v in zip(_CHECK_NAMES, verdicts):
            condition, witness, dec = _verdict_cells(v)
            print(
                json.dumps(
                    {
                        "check": name,
                        "outcome": v.outcome.value,
                        "violated_condition": condition or None,
                        "witness": witness or None,
                        "witness_decimal": dec or None,
                    }
                )
            )
    else:
        _emit(_verdict_line(name, v) for name, v in zip(_CHECK_NAMES, verdicts))
    return 1 if any(v.violates for v in verdicts) else 0


# --- radical -------------------------------------------------------------

_MODES = {
    "auto": screener.Mode.AUTO,
    "alpha1": screener.Mode.ALPHA1,
    "alpha2": screener.Mode.ALPHA2_CASE1,
}


def _cmd_radical(args) -> int:
    verdict = screener.radical_screen(args.primes, _MODES[args.mode])
    cases = verdict.case_witnesses or ()
    if args.format == "csv":
        condition, witness, dec = _verdict_cells(verdict)
        case_field = ";".join(f"{label}={frac_str(value)}" for label, value in cases)
        _emit(
            [
                "mode,outcome,violated_condition,witness,witness_decimal,cases",
                f"{args.mode},{verdict.outcome.value},{condition},{witness},{dec},{case_field}",
            ]
        )
    elif args.format == "jsonl":
        condition, witness, dec = _verdict_cells(verdict)
        print(
            json.dumps(
                {
                    "mode": args.mode,
                    "primes": list(args.primes),
                    "outcome": verdict.outcome.value,
                    "violated_condition": condition or None,
                    "witness": witness or None,
                    "witness_decimal": dec or None,
                    "cases": {label: frac_str(value) for label, value in cases},
                }
            )
        )
    else:
        lines = [
            "primes: " + " ".join(str(p) for p in args.primes),
            f"mode: {args.mode}",
            _verdict_line("outcome", verdict),
        ]
        for label, value in cases:
            lines.append(
                f"{label}: {frac_str(value)} (~{decimal_str(value, SIGMA_DECIMAL_DIGITS)})"
            )
        _emit(lines)
    return 1 if verdict.violates else 0


# --- table ---------------------------------------------------------------

TABLE_CSV_HEADER = "m,p_I1,p_I2,p_I3,perisastri"


def _cmd_table(args) -> int:
    rows = bound_tables.generate_table(args.m_min, args.m_max, args.alpha)
    if args.format == "csv":
        lines = [TABLE_CSV_HEADER]
        lines.extend(
            f"{r.m},{r.p_I1},{r.p_I2},{r.p_I3},{r.perisastri}" for r in rows
        )
        _emit(lines)
    elif args.format == "jsonl":
        for r in rows:
            print(
                json.dumps(
                    {
                        "m": r.m,
                        "p_I1": r.p_I1,
                        "p_I2": r.p_I2,
                        "p_I3": r.p_I3,
                        "perisastri": r.perisastri,
                    }
                )
            )
    else:
        header = ("m", "p_I1", "p_I2", "p_I3", "perisastri")
        cells = [header] + [
            tuple(str(x) for x in (r.m, r.p_I1, r.p_I2, r.p_I3, r.perisastri))
            for r in rows
        ]
        widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
        for row in cells:
            print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return 0


# --- constants -----------------------------------------------------------


def _cmd_constants(args) -> int:
    width = parse_width(args.width)
    threshold = threshold_enclosure(args.alpha, Precision(width))
    iv = threshold.enclosure
    digits = _certified_digits(width)
    dec = decimal_str(iv.midpoint(), digits)
    if args.format == "csv":
        _emit(
            [
                "alpha,lo,hi,width,value_decimal",
                f"{args.alpha},{frac_str(iv.lo)},{frac_str(iv.hi)},"
                f"{frac_str(iv.width())},{dec}",
            ]
        )
    elif args.format == "jsonl":
        print(
            json.dumps(
                {
                    "alpha": args.alpha,
                    "lo": frac_str(iv.lo),
                    "hi": frac_str(iv.hi),
                    "width": frac_str(iv.width()),
                    "value_decimal": dec,
                }
            )
        )
    else:
        _emit(
            [
                f"alpha: {args.alpha}",
                f"lo: {frac_str(iv.lo)}",
                f"hi: {frac_str(iv.hi)}",
                f"width: {frac_str(iv.width())}",
                f"value: ~{dec}",
            ]
        )
    return 0


# --- wiring --------------------------------------------------------------


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("human", "csv", "jsonl"), default="human", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opnlab",
        description="Odd-perfect-number necessary conditions: screening, "
        "divisor sums, certified constants, and prime-factor bound tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", help="divisor sum and reciprocal-divisor sum")
    p.add_argument("number", help="integer or factorization like 3^3*5*7")
    _add_format(p)
    p.set_defaults(func=_cmd_sigma)

    p = sub.add_parser("screen", help="run all necessary-condition checks")
    p.add_argument("factorization", help="integer or factorization like 3^2*7^2*11^2*13")
    _add_format(p)
    p.set_defaults(func=_cmd_screen)

    p = sub.add_parser("radical", help="exponent-free screening on a prime set")
    p.add_argument("primes", nargs="+", type=int, help="distinct odd primes")
    p.add_argument("--mode", choices=sorted(_MODES), default="auto")
    _add_format(p)
    p.set_defaults(func=_cmd_radical)

    p = sub.add_parser("table", help="bound table for the three smallest prime factors")
    p.add_argument("--m-min", type=int, default=9, dest="m_min")
    p.add_argument("--m-max", type=int, default=20, dest="m_max")
    p.add_argument("--alpha", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("constants", help="certified threshold enclosure")
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--width", default="1e-30", help="target enclosure width")
    _add_format(p)
    p.set_defaults(func=_cmd_constants)

    return parser


def main(argv=None) -> int:
    # zeta-backed enclosure endpoints are exact rationals with very long
    # numerators; printing them must not trip the int-to-str guard
    sys.set_int_max_str_digits(5_000_000)
    args = build_parser().parse_args(argv)
    cap = os.environ.get("OPNLAB_PRIME_CAP")
    if cap is not None:
        try:
            set_prime_cap(int(cap))
        except (ValueError, OpnlabError) as exc:
            print(f"error: bad OPNLAB_PRIME_CAP: {exc}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except OpnlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
