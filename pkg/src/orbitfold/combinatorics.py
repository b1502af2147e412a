"""Behavior decompositions and the counting identities they must satisfy.

A closed orbit of the big system can survive the involution pointwise,
glue to a partner orbit of the same length, or fold to half its length.
The decomposition type stores, per quotient length n: surviving orbit
counts, glued PAIR counts (half the raw glued count), and halving counts
indexed so that halving[n] is the number of big-system orbits of length
2n.  Storing pairs and half-indexed halving counts makes the two parity
constraints unrepresentable rather than checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .arith import CountSequence, fixed_points_from_orbits
from .errors import (
    BadArgument,
    EmptyFixedPoint,
    HorizonMismatch,
    HypothesisViolated,
    InvalidGrowthSpec,
    NegativeCount,
)

__all__ = [
    "BehaviorDecomposition",
    "RawBehaviorCounts",
    "Violation",
    "GrowthSpec",
    "big_system_counts",
    "quotient_counts",
    "check_constraints",
    "check_bounds",
    "existence_hypothesis_violations",
    "decompose",
    "growth_sequences",
]


@dataclass(frozen=True)
class Violation:
    """One failed constraint: which one, at which index, with what value."""

    constraint: str
    index: int
    value: object

    def __str__(self) -> str:
        return f"{self.constraint} at n={self.index}: {self.value}"


class RawBehaviorCounts(NamedTuple):
    """Per-length orbit counts in raw form (glued counts orbits, not pairs)."""

    surviving: CountSequence
    glued: CountSequence
    halving: CountSequence


@dataclass(frozen=True)
class BehaviorDecomposition:
    """Per-length behavior counts for a big system under its involution.

    surviving[n] and glued_pairs[n] refer to big-system orbits of length
    n; halving[n] counts big-system orbits of length 2n (which fold to
    quotient orbits of length n).  The quotient needs a fixed point, so
    surviving[1] >= 1 is required.
    """

    surviving: CountSequence
    glued_pairs: CountSequence
    halving: CountSequence

    def __post_init__(self) -> None:
        horizons = {
            self.surviving.horizon,
            self.glued_pairs.horizon,
            self.halving.horizon,
        }
        if len(horizons) != 1:
            raise BadArgument(f"component horizons differ: {sorted(horizons)}")
        if self.surviving.horizon < 1 or self.surviving[1] < 1:
            raise EmptyFixedPoint("surviving[1] must be >= 1")

    @classmethod
    def from_sequences(cls, surviving, glued_pairs, halving) -> "BehaviorDecomposition":
        """Build from plain value lists, zero-padding to a common horizon."""
        seqs = [CountSequence(tuple(v)) for v in (surviving, glued_pairs, halving)]
        horizon = max(s.horizon for s in seqs)
        return cls(*(s.extended(horizon) for s in seqs))

    @property
    def horizon(self) -> int:
        return self.surviving.horizon

    def raw_sequences(self) -> RawBehaviorCounts:
        """Raw per-length counts out to twice the horizon.

        Glued pairs double into raw orbit counts; halving[n] lands at
        length 2n.  By construction the raw halving counts vanish at odd
        lengths and the raw glued counts are even.
        """
        n = self.horizon
        surviving = list(self.surviving) + [0] * n
        glued = [2 * g for g in self.glued_pairs] + [0] * n
        halving = [0] * (2 * n)
        for k, h in self.halving.items():
            halving[2 * k - 1] = h
        return RawBehaviorCounts(
            CountSequence(tuple(surviving)),
            CountSequence(tuple(glued)),
            CountSequence(tuple(halving)),
        )


def big_system_counts(
    dec: BehaviorDecomposition, horizon: int | None = None
) -> CountSequence:
    """Orbit counts of the big system: a_n = s_n + 2*g_n + h_{n/2}.

    The halving term appears only at even n.  Entries beyond the stored
    horizon (up to 2*horizon is meaningful) treat surviving and glued
    counts as zero, which is exact for the finite systems built from the
    decomposition.
    """
    n_max = dec.horizon if horizon is None else horizon
    out = []
    for n in range(1, n_max + 1):
        total = 0
        if n <= dec.horizon:
            total += dec.surviving[n] + 2 * dec.glued_pairs[n]
        if n % 2 == 0 and n // 2 <= dec.horizon:
            total += dec.halving[n // 2]
        out.append(total)
    return CountSequence(tuple(out))


def quotient_counts(dec: BehaviorDecomposition) -> CountSequence:
    """Orbit counts of the folded system: b_n = s_n + g_n + h_n."""
    return CountSequence(
        tuple(
            dec.surviving[n] + dec.glued_pairs[n] + dec.halving[n]
            for n in range(1, dec.horizon + 1)
        )
    )


def check_constraints(
    halving_raw: CountSequence, glued_raw: CountSequence
) -> list[Violation]:
    """Check the two parity constraints on raw behavior counts.

    Raw halving counts must vanish at odd lengths; raw glued counts must
    be even everywhere.  Returns one violation per failing entry.
    """
    violations = []
    for n, value in halving_raw.items():
        if n % 2 == 1 and value != 0:
            violations.append(Violation("halving-at-odd-length", n, value))
    for n, value in glued_raw.items():
        if value % 2 != 0:
            violations.append(Violation("odd-glued-count", n, value))
    return violations


def check_bounds(big: CountSequence, quotient: CountSequence) -> list[Violation]:
    """Check the fixed-point and orbit-count bounds a fold must satisfy.

    For every n up to the quotient horizon:
      * F_quot(n) is between F_big(n)/2 and (F_big(n) + F_big(2n))/2,
      * quot(n) <= big(n) + big(2n),
      * for odd n, quot(n) >= big(n)/2.
    The big sequence must extend to twice the quotient horizon because
    the length-2n terms enter.  Equality is allowed everywhere.
    """
    n_max = quotient.horizon
    if big.horizon < 2 * n_max:
        raise HorizonMismatch(
            f"big horizon {big.horizon} < 2 * quotient horizon {n_max}"
        )
    fixed_big = fixed_points_from_orbits(big)
    fixed_quot = fixed_points_from_orbits(quotient)
    violations = []
    for n in range(1, n_max + 1):
        if 2 * fixed_quot[n] < fixed_big[n]:
            violations.append(
                Violation(
                    "fixed-point-lower", n, (fixed_quot[n], fixed_big[n])
                )
            )
        if 2 * fixed_quot[n] > fixed_big[n] + fixed_big[2 * n]:
            violations.append(
                Violation(
                    "fixed-point-upper",
                    n,
                    (fixed_quot[n], fixed_big[n], fixed_big[2 * n]),
                )
            )
        if quotient[n] > big[n] + big[2 * n]:
            violations.append(
                Violation("orbit-upper", n, (quotient[n], big[n], big[2 * n]))
            )
        if n % 2 == 1 and 2 * quotient[n] < big[n]:
            violations.append(
                Violation("orbit-lower-odd", n, (quotient[n], big[n]))
            )
    return violations


def existence_hypothesis_violations(
    big: CountSequence, quotient: CountSequence, threshold: int
) -> list[Violation]:
    """Check the sufficient conditions under which `decompose` succeeds.

    With N0 = threshold: big[1] >= 1; quotient[1] > big[1]/2 strictly;
    big[2n] >= big[n]/2 for n >= N0; big[n]/2 <= quotient[n] <= big[n]
    for n < N0 and big[n]/2 <= quotient[n] <= big[2n] for n >= N0.  The
    checks run as far as the horizons allow; entries past them are taken
    on trust, which is the documented truncation.
    """
    if threshold < 1:
        raise BadArgument("threshold must be >= 1")
    violations = []
    common = min(big.horizon, quotient.horizon)
    if big.horizon < 1 or quotient.horizon < 1:
        return [Violation("empty-sequence", 1, (big.horizon, quotient.horizon))]
    if big[1] < 1:
        violations.append(Violation("big-fixed-point", 1, big[1]))
    if 2 * quotient[1] <= big[1]:
        violations.append(
            Violation("quotient-fixed-point-strict", 1, (quotient[1], big[1]))
        )
    for n in range(1, common + 1):
        if 2 * quotient[n] < big[n]:
            violations.append(Violation("lower-half", n, (quotient[n], big[n])))
        if n < threshold:
            if quotient[n] > big[n]:
                violations.append(
                    Violation("upper-below-threshold", n, (quotient[n], big[n]))
                )
        elif 2 * n <= big.horizon and quotient[n] > big[2 * n]:
            violations.append(
                Violation("upper-at-double", n, (quotient[n], big[2 * n]))
            )
    for n in range(threshold, big.horizon // 2 + 1):
        if 2 * big[2 * n] < big[n]:
            violations.append(Violation("big-growth", n, (big[2 * n], big[n])))
    return violations


def decompose(
    big: CountSequence, quotient: CountSequence, threshold: int
) -> BehaviorDecomposition:
    """Split a pair of orbit-count sequences into behavior counts.

    Runs the recursion: at each k, if quotient[k] fits under
    big[k] - h_{k/2} everything left over glues, otherwise nothing glues
    and the excess halves.  Below the threshold the first branch is
    always taken, so no halving appears there.  Raises
    HypothesisViolated when the sufficient conditions fail; the produced
    decomposition reproduces both input sequences on the common horizon.
    """
    violations = existence_hypothesis_violations(big, quotient, threshold)
    if violations:
        raise HypothesisViolated(violations)
    horizon = min(big.horizon, quotient.horizon)
    surviving: list[int] = []
    glued: list[int] = []
    halving: list[int] = []
    for k in range(1, horizon + 1):
        carried = halving[k // 2 - 1] if k % 2 == 0 else 0
        if quotient[k] <= big[k] - carried:
            g = big[k] - quotient[k] - carried
            s = quotient[k] - g
            h = 0
        else:
            g = 0
            s = big[k] - carried
            h = quotient[k] - s
        if s < 0 or g < 0 or h < 0:
            raise NegativeCount(
                f"recursion produced negative count at k={k}: s={s} g={g} h={h}"
            )
        surviving.append(s)
        glued.append(g)
        halving.append(h)
    return BehaviorDecomposition(
        CountSequence(tuple(surviving)),
        CountSequence(tuple(glued)),
        CountSequence(tuple(halving)),
    )


def _as_exact(value, name: str) -> Fraction:
    if isinstance(value, float):
        raise InvalidGrowthSpec(f"{name} must be exact (int, Fraction, or string)")
    return Fraction(value)


@dataclass(frozen=True)
class GrowthSpec:
    """Exact-rational growth rates for a big/quotient sequence pair.

    big_rate is the per-length growth of the big system's orbit counts;
    quotient_rate and scale shape the quotient counts from `threshold`
    onward.  Admissible shapes: quotient_rate equal to big_rate with
    scale >= 1/2, strictly between big_rate and its square with any
    positive scale, or equal to the square with scale in (0, 1].  The
    threshold must additionally satisfy
    scale * quotient_rate**threshold < big_rate**(2*threshold).
    """

    big_rate: Fraction
    quotient_rate: Fraction
    scale: Fraction
    horizon: int
    threshold: int

    def __post_init__(self) -> None:
        lam = _as_exact(self.big_rate, "big_rate")
        eta = _as_exact(self.quotient_rate, "quotient_rate")
        c = _as_exact(self.scale, "scale")
        object.__setattr__(self, "big_rate", lam)
        object.__setattr__(self, "quotient_rate", eta)
        object.__setattr__(self, "scale", c)
        if lam <= 1:
            raise InvalidGrowthSpec(f"big_rate must exceed 1, got {lam}")
        if eta <= 0 or c <= 0:
            raise InvalidGrowthSpec("quotient_rate and scale must be positive")
        if self.horizon < 1:
            raise InvalidGrowthSpec("horizon must be >= 1")
        if self.threshold < 1:
            raise InvalidGrowthSpec("threshold must be >= 1")
        square = lam * lam
        if eta == lam:
            if c < Fraction(1, 2):
                raise InvalidGrowthSpec(
                    "scale must be >= 1/2 when the rates are equal"
                )
        elif eta == square:
            if c > 1:
                raise InvalidGrowthSpec(
                    "scale must be <= 1 when quotient_rate is the square"
                )
        elif not lam < eta < square:
            raise InvalidGrowthSpec(
                f"quotient_rate {eta} outside [{lam}, {square}]"
            )
        if c * eta**self.threshold >= lam ** (2 * self.threshold):
            raise InvalidGrowthSpec(
                "need scale * quotient_rate**threshold < big_rate**(2*threshold)"
            )


def growth_sequences(spec: GrowthSpec) -> tuple[CountSequence, CountSequence]:
    """Integer sequences realizing the spec's growth rates.

    big[n] = ceil(big_rate**n); quotient[n] copies big below the
    threshold and is ceil(scale * quotient_rate**n) from it onward.
    Ceilings are taken on exact rationals, so there is no rounding
    drift.
    """
    big, quotient = [], []
    lam_power = Fraction(1)
    eta_power = Fraction(1)
    for n in range(1, spec.horizon + 1):
        lam_power *= spec.big_rate
        eta_power *= spec.quotient_rate
        a = math.ceil(lam_power)
        big.append(a)
        if n < spec.threshold:
            quotient.append(a)
        else:
            quotient.append(math.ceil(spec.scale * eta_power))
    return CountSequence(tuple(big)), CountSequence(tuple(quotient))
