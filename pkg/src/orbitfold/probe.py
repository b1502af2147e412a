"""Heuristic linear-recurrence probing for exact coefficient sequences.

A truncated power series is (heuristically) rational exactly when its
coefficients satisfy a short linear recurrence.  The probe fits a minimal
recurrence on a leading window with Berlekamp-Massey over the rationals
and only reports a find if the recurrence reproduces every remaining
coefficient exactly.  A negative verdict never claims irrationality; it
says no recurrence of order <= max_order fits the supplied window, and
backs that with the linear-complexity profile.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadArgument, TooFewCoefficients
from .series import FormalPowerSeries

__all__ = [
    "RECURRENCE_FOUND",
    "NO_SHORT_RECURRENCE",
    "berlekamp_massey",
    "RationalityReport",
    "rationality_probe",
]

RECURRENCE_FOUND = "recurrence_found"
NO_SHORT_RECURRENCE = "no_short_recurrence"


def berlekamp_massey(sequence) -> tuple[list[Fraction], int, list[int]]:
    """Minimal LFSR for a sequence over the rationals.

    Returns (connection, order, profile): connection[0] = 1 and
    sum(connection[i] * s[n-i] for i = 0..order) = 0 for all n >= order;
    profile[k] is the minimal order after seeing the first k+1 terms.
    """
    seq = [Fraction(x) for x in sequence]
    connection = [Fraction(1)]
    previous = [Fraction(1)]
    order = 0
    gap = 1
    last_discrepancy = Fraction(1)
    profile: list[int] = []
    for n, s_n in enumerate(seq):
        discrepancy = s_n
        for i in range(1, order + 1):
            if connection[i]:
                discrepancy += connection[i] * seq[n - i]
        if discrepancy == 0:
            gap += 1
        elif 2 * order <= n:
            stashed = connection[:]
            ratio = discrepancy / last_discrepancy
            shifted = [Fraction(0)] * gap + [ratio * c for c in previous]
            width = max(len(connection), len(shifted))
            connection = [
                (connection[i] if i < len(connection) else Fraction(0))
                - (shifted[i] if i < len(shifted) else Fraction(0))
                for i in range(width)
            ]
            order = n + 1 - order
            previous = stashed
            last_discrepancy = discrepancy
            gap = 1
        else:
            ratio = discrepancy / last_discrepancy
            shifted = [Fraction(0)] * gap + [ratio * c for c in previous]
            width = max(len(connection), len(shifted))
            connection = [
                (connection[i] if i < len(connection) else Fraction(0))
                - (shifted[i] if i < len(shifted) else Fraction(0))
                for i in range(width)
            ]
            gap += 1
        profile.append(order)
    connection = connection + [Fraction(0)] * (order + 1 - len(connection))
    return connection[: order + 1], order, profile


def _satisfies(seq, recurrence, start: int) -> bool:
    order = len(recurrence)
    for n in range(max(start, order), len(seq)):
        predicted = sum(recurrence[i] * seq[n - 1 - i] for i in range(order))
        if predicted != seq[n]:
            return False
    return True


@dataclass(frozen=True)
class RationalityReport:
    """Outcome of a probe: a validated recurrence or a complexity profile.

    When the verdict is RECURRENCE_FOUND, `recurrence` holds q_1..q_L
    with s_n = sum(q_i * s_{n-i}), validated against every supplied
    coefficient from index L through validation_degree.  The profile is
    the minimal recurrence order as a function of prefix length over the
    whole input, found or not.  The verdict is heuristic evidence about
    rationality at this horizon, never a proof either way.
    """

    verdict: str
    recurrence: tuple[Fraction, ...] | None
    fit_degree: int
    validation_degree: int
    linear_complexity_profile: tuple[int, ...]
    numerator_degree: int | None = None
    denominator_degree: int | None = None

    @property
    def order(self) -> int | None:
        return None if self.recurrence is None else len(self.recurrence)


def rationality_probe(
    series: FormalPowerSeries,
    max_order: int,
    fit_fraction: Fraction = Fraction(1, 2),
) -> RationalityReport:
    """Probe a truncated series for a short, fully validated recurrence.

    Fits on the leading fit_fraction of the coefficients and demands
    exact agreement on everything after; max_order caps how long a
    recurrence is even considered.  Needs degree >= 2 * max_order so the
    fit window can pin recurrences up to the cap.
    """
    if max_order < 1:
        raise BadArgument("max_order must be >= 1")
    fraction = Fraction(fit_fraction)
    if not 0 < fraction <= 1:
        raise BadArgument("fit_fraction must be in (0, 1]")
    degree = series.degree
    if degree < 2 * max_order:
        raise TooFewCoefficients(
            f"need degree >= {2 * max_order}, got {degree}"
        )
    coeffs = list(series.coefficients)
    _, _, full_profile = berlekamp_massey(coeffs)
    fit_count = max(int((degree + 1) * fraction), 1)
    connection, order, _ = berlekamp_massey(coeffs[:fit_count])
    base = dict(
        fit_degree=fit_count - 1,
        validation_degree=degree,
        linear_complexity_profile=tuple(full_profile),
    )
    if order > max_order:
        return RationalityReport(NO_SHORT_RECURRENCE, None, **base)
    recurrence = tuple(-c for c in connection[1:])
    if not _satisfies(coeffs, recurrence, order):
        return RationalityReport(NO_SHORT_RECURRENCE, None, **base)
    # numerator/denominator degrees of the rational function the
    # recurrence certifies: denominator is the connection polynomial,
    # numerator the finite product series * connection
    den_degree = max((i for i, c in enumerate(connection) if c != 0), default=0)
    num_degree = 0
    for idx in range(min(order, degree + 1)):
        value = sum(
            connection[i] * coeffs[idx - i] for i in range(0, idx + 1) if i <= order
        )
        if value != 0:
            num_degree = idx
    return RationalityReport(
        RECURRENCE_FOUND,
        recurrence,
        numerator_degree=num_degree,
        denominator_degree=den_degree,
        **base,
    )
