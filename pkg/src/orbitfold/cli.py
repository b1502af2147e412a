"""Command-line front door.

Subcommands: construct, decompose, bounds-check, zeta, rationality,
example, growth.  Inputs are headered CSV files; outputs are CSV or JSON
tables (plus the line-oriented system dump for construct).  Exit codes:
0 success, 2 validation failure, 3 internal assertion breach.  Every
error path prints a single machine-parsable `error-code:` line to stderr
followed by the human-readable diagnostic.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .arith import CountSequence
from .combinatorics import (
    GrowthSpec,
    big_system_counts,
    check_bounds,
    check_constraints,
    decompose,
    growth_sequences,
    quotient_counts,
)
from .errors import (
    GoldenMismatch,
    InternalCheckError,
    OracleMismatch,
    OrbitfoldError,
    ParseError,
    ValidationError,
)
from .examples import EXAMPLES, build_example_report
from .formats import (
    parse_count_sequence_csv,
    parse_decomposition_csv,
    parse_series_csv,
    render_count_sequence,
    render_decomposition,
    render_series,
)
from .probe import rationality_probe
from .simulator import build_system, classify_orbits, count_orbits, dump_system, quotient
from .zeta import zeta_from_fixed_points, zeta_from_orbits


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _fraction(raw: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {raw!r}")


def cmd_construct(args) -> int:
    dec = parse_decomposition_csv(_read(args.decomposition))
    system = build_system(dec)
    simulated = count_orbits(system)
    analytic = big_system_counts(dec, 2 * dec.horizon)
    if simulated.extended(2 * dec.horizon) != analytic:
        raise OracleMismatch(
            f"simulated big counts {list(simulated)} != analytic {list(analytic)}"
        )
    folded = quotient(system)
    simulated_quot = count_orbits(folded)
    analytic_quot = quotient_counts(dec)
    if simulated_quot.extended(dec.horizon) != analytic_quot:
        raise OracleMismatch(
            f"simulated quotient counts {list(simulated_quot)} "
            f"!= analytic {list(analytic_quot)}"
        )
    raw = classify_orbits(system)
    expected_raw = dec.raw_sequences()
    if tuple(s.extended(2 * dec.horizon) for s in raw) != tuple(expected_raw):
        raise OracleMismatch("classified behaviors disagree with the decomposition")
    violations = check_constraints(raw.halving, raw.glued)
    if violations:
        raise OracleMismatch(f"constraint violations: {violations}")
    sections: list[str] = []
    if args.format == "json":
        sections.append(
            json.dumps(
                {
                    "big_counts": [str(v) for v in analytic],
                    "quotient_counts": [str(v) for v in analytic_quot],
                    "surviving_raw": [str(v) for v in raw.surviving],
                    "glued_raw": [str(v) for v in raw.glued],
                    "halving_raw": [str(v) for v in raw.halving],
                },
                indent=2,
            )
            + "\n"
        )
    else:
        sections.append("# big-system orbit counts\n" + render_count_sequence(analytic))
        sections.append(
            "# quotient orbit counts\n" + render_count_sequence(analytic_quot)
        )
        rows = ["n,surviving,glued,halving"]
        for n in range(1, raw.surviving.horizon + 1):
            rows.append(f"{n},{raw.surviving[n]},{raw.glued[n]},{raw.halving[n]}")
        sections.append("# orbit classification (raw counts)\n" + "\n".join(rows) + "\n")
    sections.append("# system dump\n" + dump_system(system))
    _emit("".join(sections), args.output)
    return 0


def cmd_decompose(args) -> int:
    big = parse_count_sequence_csv(_read(args.big))
    quot = parse_count_sequence_csv(_read(args.quotient))
    dec = decompose(big, quot, args.threshold)
    horizon = dec.horizon
    if big_system_counts(dec) != big.truncated(horizon) or quotient_counts(
        dec
    ) != quot.truncated(horizon):
        raise OracleMismatch("decomposition fails to reproduce its inputs")
    _emit(render_decomposition(dec, args.format), args.output)
    return 0


def cmd_bounds_check(args) -> int:
    big = parse_count_sequence_csv(_read(args.big))
    quot = parse_count_sequence_csv(_read(args.quotient))
    violations = check_bounds(big, quot)
    if args.format == "json":
        payload = [
            {"constraint": v.constraint, "n": v.index, "value": str(v.value)}
            for v in violations
        ]
        text = json.dumps({"violations": payload}, indent=2) + "\n"
    else:
        lines = ["constraint,n,value"]
        lines += [f"{v.constraint},{v.index},{v.value}" for v in violations]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    if violations:
        print("error-code: bounds-violated", file=sys.stderr)
        print(f"{len(violations)} bound violation(s) found", file=sys.stderr)
        return 2
    return 0


def cmd_zeta(args) -> int:
    counts = parse_count_sequence_csv(_read(args.counts))
    if args.form == "fixed-points":
        series = zeta_from_fixed_points(counts, args.degree)
    else:
        series = zeta_from_orbits(counts, args.degree)
    _emit(render_series(series, args.format), args.output)
    return 0


def cmd_rationality(args) -> int:
    series = parse_series_csv(_read(args.series))
    report = rationality_probe(series, args.max_order, args.fit_fraction)
    recurrence = (
        None
        if report.recurrence is None
        else [str(c) for c in report.recurrence]
    )
    if args.format == "json":
        text = (
            json.dumps(
                {
                    "verdict": report.verdict,
                    "order": report.order,
                    "recurrence": recurrence,
                    "fit_degree": report.fit_degree,
                    "validation_degree": report.validation_degree,
                    "numerator_degree": report.numerator_degree,
                    "denominator_degree": report.denominator_degree,
                    "linear_complexity_profile": list(
                        report.linear_complexity_profile
                    ),
                },
                indent=2,
            )
            + "\n"
        )
    else:
        lines = [
            "key,value",
            f"verdict,{report.verdict}",
            f"order,{report.order if report.order is not None else ''}",
            f"recurrence,{';'.join(recurrence) if recurrence else ''}",
            f"fit_degree,{report.fit_degree}",
            f"validation_degree,{report.validation_degree}",
            f"numerator_degree,{report.numerator_degree if report.numerator_degree is not None else ''}",
            f"denominator_degree,{report.denominator_degree if report.denominator_degree is not None else ''}",
            "profile_prefix_length,order",
        ]
        lines += [
            f"{k + 1},{order}"
            for k, order in enumerate(report.linear_complexity_profile)
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def cmd_example(args) -> int:
    report = build_example_report(args.name)
    golden = resources.files("orbitfold").joinpath(f"golden/{args.name}.txt")
    expected = golden.read_text()
    if report != expected:
        diff = [
            f"line {i + 1}: got {got!r}, want {want!r}"
            for i, (got, want) in enumerate(
                zip(report.splitlines(), expected.splitlines())
            )
            if got != want
        ][:5]
        raise GoldenMismatch(
            f"report for {args.name!r} drifted from its golden copy: "
            + "; ".join(diff or ["length changed"])
        )
    _emit(report, args.output)
    return 0


def cmd_growth(args) -> int:
    spec = GrowthSpec(
        args.big_rate, args.quotient_rate, args.scale, args.horizon, args.threshold
    )
    big, quot = growth_sequences(spec)
    if args.format == "json":
        text = (
            json.dumps(
                {
                    "big": [str(v) for v in big],
                    "quotient": [str(v) for v in quot],
                },
                indent=2,
            )
            + "\n"
        )
    else:
        lines = ["n,big,quotient"]
        lines += [f"{n},{big[n]},{quot[n]}" for n in range(1, spec.horizon + 1)]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitfold",
        description="Exact closed-orbit bookkeeping for involution-folded systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", metavar="PATH", default=None)

    p = sub.add_parser("construct", help="realize a decomposition as a finite system")
    p.add_argument("--decomposition", required=True, metavar="PATH")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", help="split a big/quotient count pair")
    p.add_argument("--big", required=True, metavar="PATH")
    p.add_argument("--quotient", required=True, metavar="PATH")
    p.add_argument("--threshold", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("bounds-check", help="check the fold bounds on a count pair")
    p.add_argument("--big", required=True, metavar="PATH")
    p.add_argument("--quotient", required=True, metavar="PATH")
    common(p)
    p.set_defaults(func=cmd_bounds_check)

    p = sub.add_parser("zeta", help="expand a zeta function from counts")
    p.add_argument("--counts", required=True, metavar="PATH")
    p.add_argument("--form", choices=("fixed-points", "orbits"), default="fixed-points")
    p.add_argument("--degree", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("rationality", help="probe a series for a short recurrence")
    p.add_argument("--series", required=True, metavar="PATH")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--fit-fraction", type=_fraction, default=Fraction(1, 2))
    common(p)
    p.set_defaults(func=cmd_rationality)

    p = sub.add_parser("example", help="reproduce a worked example and diff golden")
    p.add_argument("--name", required=True, choices=sorted(EXAMPLES))
    p.add_argument("--output", metavar="PATH", default=None)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("growth", help="generate sequences with given growth rates")
    p.add_argument("--big-rate", type=_fraction, required=True)
    p.add_argument("--quotient-rate", type=_fraction, required=True)
    p.add_argument("--scale", type=_fraction, required=True)
    p.add_argument("--threshold", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_growth)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error-code: {exc.code}", file=sys.stderr)
        print(str(exc), file=sys.stderr)
        return exc.exit_code
    except InternalCheckError as exc:
        print(f"error-code: {exc.code}", file=sys.stderr)
        print(str(exc), file=sys.stderr)
        return exc.exit_code
    except OrbitfoldError as exc:
        print(f"error-code: {exc.code}", file=sys.stderr)
        print(str(exc), file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
