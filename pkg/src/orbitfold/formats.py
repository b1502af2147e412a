"""Delimited text formats for sequences, decompositions, and series.

Inputs are headered CSV; outputs are CSV or JSON.  Big integers travel as
decimal strings in both directions, rationals as "num/den".  Everything
is rendered with a fixed ordering so identical inputs produce
byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .arith import CountSequence
from .combinatorics import BehaviorDecomposition
from .errors import ParseError
from .series import FormalPowerSeries

__all__ = [
    "parse_count_sequence_csv",
    "render_count_sequence",
    "parse_decomposition_csv",
    "render_decomposition",
    "parse_series_csv",
    "render_series",
]

_DECOMPOSITION_SECTIONS = ("surviving", "glued_pairs", "halving")


def _rows(text: str, expected_header: tuple[str, ...]) -> list[tuple[int, list[str]]]:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input")
    header = tuple(field.strip() for field in lines[0].split(","))
    if header != expected_header:
        raise ParseError(
            f"expected header {','.join(expected_header)!r}, got {lines[0]!r}"
        )
    out = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        out.append((lineno, [field.strip() for field in line.split(",")]))
    return out


def _int_field(raw: str, lineno: int, what: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"line {lineno}: bad {what} {raw!r}") from None


def parse_count_sequence_csv(text: str) -> CountSequence:
    """Parse `n,value` rows; indices must run 1..N in order."""
    values = []
    for lineno, fields in _rows(text, ("n", "value")):
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 2 fields")
        n = _int_field(fields[0], lineno, "index")
        if n != len(values) + 1:
            raise ParseError(f"line {lineno}: expected index {len(values) + 1}, got {n}")
        values.append(_int_field(fields[1], lineno, "value"))
    return CountSequence(tuple(values))


def render_count_sequence(seq: CountSequence, fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps(
            {"horizon": seq.horizon, "values": [str(v) for v in seq]},
            indent=2,
        ) + "\n"
    lines = ["n,value"] + [f"{n},{v}" for n, v in seq.items()]
    return "\n".join(lines) + "\n"


def parse_decomposition_csv(text: str) -> BehaviorDecomposition:
    """Parse `section,n,value` rows into a behavior decomposition.

    Sections are surviving, glued_pairs, and halving; within a section
    the indices must run 1..N in order.  Shorter sections are
    zero-padded to the longest.
    """
    sections: dict[str, list[int]] = {name: [] for name in _DECOMPOSITION_SECTIONS}
    for lineno, fields in _rows(text, ("section", "n", "value")):
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 3 fields")
        name = fields[0]
        if name not in sections:
            raise ParseError(f"line {lineno}: unknown section {name!r}")
        n = _int_field(fields[1], lineno, "index")
        if n != len(sections[name]) + 1:
            raise ParseError(
                f"line {lineno}: expected index {len(sections[name]) + 1} "
                f"in section {name}, got {n}"
            )
        sections[name].append(_int_field(fields[2], lineno, "value"))
    return BehaviorDecomposition.from_sequences(
        sections["surviving"], sections["glued_pairs"], sections["halving"]
    )


def render_decomposition(dec: BehaviorDecomposition, fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps(
            {
                "horizon": dec.horizon,
                "surviving": [str(v) for v in dec.surviving],
                "glued_pairs": [str(v) for v in dec.glued_pairs],
                "halving": [str(v) for v in dec.halving],
            },
            indent=2,
        ) + "\n"
    lines = ["section,n,value"]
    for name in _DECOMPOSITION_SECTIONS:
        seq = getattr(dec, name)
        lines += [f"{name},{n},{v}" for n, v in seq.items()]
    return "\n".join(lines) + "\n"


def parse_series_csv(text: str) -> FormalPowerSeries:
    """Parse `degree,numerator,denominator` rows; degrees must run 0..D."""
    coeffs = []
    for lineno, fields in _rows(text, ("degree", "numerator", "denominator")):
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 3 fields")
        degree = _int_field(fields[0], lineno, "degree")
        if degree != len(coeffs):
            raise ParseError(f"line {lineno}: expected degree {len(coeffs)}, got {degree}")
        num = _int_field(fields[1], lineno, "numerator")
        den = _int_field(fields[2], lineno, "denominator")
        if den == 0:
            raise ParseError(f"line {lineno}: zero denominator")
        coeffs.append(Fraction(num, den))
    if not coeffs:
        raise ParseError("series needs at least the constant term")
    return FormalPowerSeries(tuple(coeffs))


def render_series(series: FormalPowerSeries, fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps(
            {
                "degree": series.degree,
                "coefficients": [
                    [str(c.numerator), str(c.denominator)]
                    for c in series.coefficients
                ],
            },
            indent=2,
        ) + "\n"
    lines = ["degree,numerator,denominator"]
    lines += [
        f"{n},{c.numerator},{c.denominator}"
        for n, c in enumerate(series.coefficients)
    ]
    return "\n".join(lines) + "\n"
