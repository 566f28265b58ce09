"""Terminal entry point: every analysis as a subcommand.

Identical invocations produce byte-identical output. Tables are plain
ASCII; ``--format json`` emits a single well-formed document instead.
Exact rationals are always printed as ``p/q`` in lowest terms.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .core import parse_natural, to_digits, tri_exact, validate_base
from .growth import digit_histogram, fit_power_law, parse_dynamics, simulate
from .prover import enumerate_cases, render_transcript
from .residues import DEFAULT_SAMPLE_SIZE, classify_base, empirical_frequencies, residue_profile


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _digit_set(digits) -> str:
    return "{" + ",".join(str(d) for d in digits) + "}"


def _seq_line(values) -> str:
    if len(values) <= 24:
        return " ".join(str(v) for v in values)
    head = " ".join(str(v) for v in values[:5])
    return f"{head} ... {values[-1]}"


def _parse_bases(text: str) -> list[int]:
    """Inclusive ranges ``a..b`` and single bases, comma-separated."""
    bases: set[int] = set()
    for token in text.split(","):
        token = token.strip()
        lo_text, sep, hi_text = token.partition("..")
        try:
            if sep:
                lo, hi = int(lo_text), int(hi_text)
            else:
                lo = hi = int(token)
        except ValueError:
            raise ValueError(f"invalid base range {token!r}") from None
        if lo > hi:
            raise ValueError(f"empty base range {token!r}")
        for base in range(lo, hi + 1):
            bases.add(validate_base(base))
    return sorted(bases)


def cmd_tri(args: argparse.Namespace) -> int:
    n = parse_natural(args.n)
    value = tri_exact(n)
    print(f"n = {n}")
    print(f"value = {value}")
    if args.base is not None:
        digits = to_digits(value, args.base)
        print(f"digits (base {args.base}) = {digits}")
        print(f"units digit = {digits.units_digit}")
    return 0


def cmd_residues(args: argparse.Namespace) -> int:
    profile = residue_profile(args.base)
    reachable = sorted(profile.reachable)
    if args.format == "json":
        doc = {
            "base": profile.base,
            "period": profile.period,
            "reachable": reachable,
            "frequencies": [
                {
                    "digit": d,
                    "exact": _frac(profile.frequency[d]),
                    "approx": float(profile.frequency[d]),
                }
                for d in range(profile.base)
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    missing = sorted(set(range(profile.base)) - profile.reachable)
    print(f"base = {profile.base}")
    print(f"period = {profile.period}")
    print(f"{'digit':>5}  {'exact':>7}  approx")
    for d in range(profile.base):
        f = profile.frequency[d]
        print(f"{d:>5}  {_frac(f):>7}  {float(f):.6f}")
    print(f"reachable: {_digit_set(reachable)}")
    print(f"missing: {_digit_set(missing)}")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    results = [classify_base(base) for base in _parse_bases(args.bases)]
    if args.format == "json":
        doc = [
            {"base": r.base, "gappy": r.gappy, "missing": list(r.missing_digits)}
            for r in results
        ]
        print(json.dumps(doc, indent=2))
        return 0
    print(f"{'base':>4}  gappy  missing")
    for r in results:
        flag = "yes" if r.gappy else "no"
        print(f"{r.base:>4}  {flag:<5}  {_digit_set(r.missing_digits)}")
    return 0


def cmd_prove(args: argparse.Namespace) -> int:
    transcript = enumerate_cases(args.base)
    sys.stdout.write(render_transcript(transcript))
    return 0


def cmd_freq(args: argparse.Namespace) -> int:
    empirical = empirical_frequencies(args.base, args.count)
    profile = residue_profile(args.base)
    rows = []
    for d in range(args.base):
        proportion = Fraction(empirical.counts[d], args.count)
        exact = profile.frequency[d]
        rows.append((d, empirical.counts[d], proportion, exact, abs(proportion - exact)))
    max_deviation = max(dev for *_, dev in rows)
    if args.format == "json":
        doc = {
            "base": args.base,
            "count": args.count,
            "digits": [
                {
                    "digit": d,
                    "count": count,
                    "proportion": float(proportion),
                    "exact": _frac(exact),
                    "approx": float(exact),
                    "deviation": float(dev),
                }
                for d, count, proportion, exact, dev in rows
            ],
            "max_deviation": float(max_deviation),
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"base = {args.base}")
    print(f"count = {args.count}")
    print(f"{'digit':>5}  {'count':>9}  proportion  {'exact':>7}  {'approx':>8}  deviation")
    for d, count, proportion, exact, dev in rows:
        print(
            f"{d:>5}  {count:>9}  {float(proportion):>10.6f}  "
            f"{_frac(exact):>7}  {float(exact):>8.6f}  {float(dev):.6f}"
        )
    print(f"max deviation = {float(max_deviation):.6f}")
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    dynamics = parse_dynamics(args.dynamics)
    trace = simulate(dynamics, args.steps, args.initial)
    try:
        fit = fit_power_law(trace)
        fit_note = None
    except ValueError as exc:
        fit = None
        fit_note = str(exc)
    histogram = digit_histogram(trace, args.base) if args.base is not None else None
    if args.format == "json":
        doc = {
            "dynamics": dynamics.describe(),
            "steps": trace.horizon,
            "initial": trace.initial_total,
            "total": [str(v) for v in trace.total],
            "fit": None
            if fit is None
            else {
                "exponent": fit.exponent,
                "offset": fit.offset,
                "residual": fit.residual,
                "window": list(fit.window),
            },
        }
        if histogram is not None:
            doc["histogram"] = {
                "base": histogram.base,
                "counts": [
                    {"digit": d, "count": histogram.counts[d]}
                    for d in range(histogram.base)
                ],
            }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"dynamics = {dynamics.describe()}")
    print(f"steps = {trace.horizon}")
    print(f"initial = {trace.initial_total}")
    print(f"dividing = {_seq_line(trace.dividing)}")
    print(f"totals = {_seq_line(trace.total)}")
    print(f"final total = {trace.total[-1]}")
    if fit is None:
        print(f"fit = unavailable ({fit_note})")
    else:
        print(f"fit window = [{fit.window[0]}, {fit.window[1]}]")
        print(f"fit exponent = {fit.exponent:.6f}")
        print(f"fit offset = {fit.offset:.6f}")
        print(f"fit residual = {fit.residual:.6f}")
    if histogram is not None:
        print(f"units digit counts (base {histogram.base}):")
        print(f"{'digit':>5}  count")
        for d in range(histogram.base):
            print(f"{d:>5}  {histogram.counts[d]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tridigits",
        description="Triangular numbers and the structure of their units digits.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tri", help="triangular number for an index n")
    p.add_argument("n", help="index as a decimal string (any length)")
    p.add_argument("--base", type=int, help="also show base-L digits and units digit")
    p.set_defaults(func=cmd_tri)

    p = sub.add_parser("residues", help="exact units-digit profile of one base")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_residues)

    p = sub.add_parser("classify", help="gappy/non-gappy classification of bases")
    p.add_argument("--bases", required=True, help="e.g. 10, 3..16, or 4,8,16")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("prove", help="case-enumeration proof transcript for one base")
    p.add_argument("--base", type=int, required=True)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("freq", help="empirical units-digit counts vs exact frequencies")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--count", type=int, default=DEFAULT_SAMPLE_SIZE)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("simulate", help="cumulative-sum growth trace and power-law fit")
    p.add_argument("--dynamics", required=True, help="linear | constant:c | decline:D,a")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--base", type=int, help="also show units-digit histogram of totals")
    p.add_argument("--initial", type=int, default=0, help="starting total (default 0)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv: list[str] | None = None) -> int:
    # Lift the int<->str conversion cap (Python 3.11+) so decimal input
    # of unbounded length is accepted and huge values print.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
