"""Dynamical zeta functions and their exact series ingredients.

The zeta function of a system packages its periodic-point counts,
exp(sum F(n) z^n / n), and equivalently expands as the product over orbit
lengths of (1 - z^n)^(-O(n)).  Both forms are computed here with exact
rational coefficients, together with the divisor-sum theta series, the
odd-divisor phi series, the doubling identity, and the congruence-driven
auxiliary sequence that powers the natural-boundary construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import (
    CountSequence,
    divisors,
    is_prime,
    mobius,
    prime_factors,
    sigma,
)
from .errors import (
    BadArgument,
    HorizonTooSmall,
    IntegralityFailure,
    NegativityFailure,
    NoSolution,
    NotRealizable,
)
from .series import FormalPowerSeries, series_exp

__all__ = [
    "zeta_from_fixed_points",
    "zeta_from_orbits",
    "log_derivative_counts",
    "theta_series",
    "euler_product",
    "pentagonal_signs",
    "phi_series",
    "doubled_fixed_point_counts",
    "doubling_zeta_identity_check",
    "AuxiliarySequence",
    "c_sequence",
    "natural_boundary_sequences",
]


def zeta_from_fixed_points(fixed: CountSequence, degree: int) -> FormalPowerSeries:
    """exp(sum fixed[n] * z^n / n), exact to the given degree."""
    if degree < 0:
        raise BadArgument("degree must be >= 0")
    if fixed.horizon < degree:
        raise HorizonTooSmall(
            f"need counts up to {degree}, have horizon {fixed.horizon}"
        )
    log_terms = [Fraction(0)] + [
        Fraction(fixed[n], n) for n in range(1, degree + 1)
    ]
    return series_exp(FormalPowerSeries(tuple(log_terms)))


def zeta_from_orbits(orbits: CountSequence, degree: int) -> FormalPowerSeries:
    """Product over n of (1 - z^n)^(-orbits[n]), exact to the given degree.

    Factors beyond the degree cannot contribute, so the horizon only has
    to reach the degree.  Agrees coefficientwise with the exponential
    form applied to the derived fixed-point counts.
    """
    if degree < 0:
        raise BadArgument("degree must be >= 0")
    if orbits.horizon < degree:
        raise HorizonTooSmall(
            f"need counts up to {degree}, have horizon {orbits.horizon}"
        )
    out: list[int] = [1] + [0] * degree
    for n in range(1, degree + 1):
        multiplicity = orbits[n]
        if multiplicity == 0:
            continue
        # (1 - z^n)^(-m) has coefficient C(m + k - 1, k) at z^(n*k)
        factor = [0] * (degree + 1)
        for k in range(0, degree // n + 1):
            factor[n * k] = comb(multiplicity + k - 1, k)
        merged = [0] * (degree + 1)
        for i, ci in enumerate(out):
            if ci == 0:
                continue
            for j in range(0, (degree - i) // n + 1):
                fj = factor[n * j]
                if fj:
                    merged[i + n * j] += ci * fj
        out = merged
    return FormalPowerSeries(tuple(out))


def log_derivative_counts(zeta: FormalPowerSeries) -> CountSequence:
    """Recover fixed-point counts from a zeta series: inverse of the exp form.

    Reads off F with z * zeta'/zeta = sum F(n) z^n via the recurrence
    F(n) = n*c_n - sum(F(k) * c_{n-k}, k < n) for a series with constant
    term 1.  Raises NotRealizable when an entry is negative or
    fractional, i.e. the series is not the zeta function of any map.
    """
    if zeta.coefficients[0] != 1:
        raise BadArgument("log derivative needs constant term 1")
    c = [x.numerator if x.denominator == 1 else x for x in zeta.coefficients]
    counts: list[int] = []
    recovered: list[int | Fraction] = [0]
    for n in range(1, zeta.degree + 1):
        value = n * c[n] - sum(
            recovered[k] * c[n - k] for k in range(1, n) if recovered[k] != 0
        )
        recovered.append(value)
        if isinstance(value, Fraction):
            raise NotRealizable(n, value)
        if value < 0:
            raise NotRealizable(n, value)
        counts.append(value)
    return CountSequence(tuple(counts))


def theta_series(degree: int) -> FormalPowerSeries:
    """exp(sum sigma(n) z^n / n): the reciprocal of the Euler product."""
    if degree < 0:
        raise BadArgument("degree must be >= 0")
    fixed = CountSequence(tuple(sigma(n) for n in range(1, degree + 1)))
    return zeta_from_fixed_points(fixed, degree)


def euler_product(degree: int) -> FormalPowerSeries:
    """prod(1 - z^n for n = 1..degree), truncated; all-integer expansion."""
    if degree < 0:
        raise BadArgument("degree must be >= 0")
    out = [0] * (degree + 1)
    out[0] = 1
    for n in range(1, degree + 1):
        for j in range(degree, n - 1, -1):
            out[j] -= out[j - n]
    return FormalPowerSeries(tuple(out))


def pentagonal_signs(degree: int) -> dict[int, int]:
    """Nonzero coefficients of the Euler product: index (3k^2 +- k)/2 -> (-1)^k."""
    signs = {0: 1}
    k = 1
    while (3 * k * k - k) // 2 <= degree:
        sign = -1 if k % 2 else 1
        signs[(3 * k * k - k) // 2] = sign
        if (3 * k * k + k) // 2 <= degree:
            signs[(3 * k * k + k) // 2] = sign
        k += 1
    return signs


def phi_series(degree: int) -> FormalPowerSeries:
    """Odd-length proper-divisor weight series.

    The coefficient at odd n is sum(d * 2^((d-1)/2)) over divisors d of n
    other than 1 and n itself; every other coefficient is zero.  The
    coefficient therefore vanishes exactly at even indices and at odd
    primes (and below 3, where no proper middle divisor exists).
    """
    if degree < 0:
        raise BadArgument("degree must be >= 0")
    out = [0] * (degree + 1)
    for n in range(3, degree + 1, 2):
        out[n] = sum(
            d * 2 ** ((d - 1) // 2) for d in divisors(n) if d not in (1, n)
        )
    return FormalPowerSeries(tuple(out))


def doubled_fixed_point_counts(fixed: CountSequence, horizon: int) -> CountSequence:
    """Fixed-point counts after doubling: zero at odd n, 2*F(n) at even n."""
    if fixed.horizon < horizon:
        raise HorizonTooSmall(
            f"need counts up to {horizon}, have horizon {fixed.horizon}"
        )
    return CountSequence(
        tuple(2 * fixed[n] if n % 2 == 0 else 0 for n in range(1, horizon + 1))
    )


def doubling_zeta_identity_check(fixed: CountSequence, degree: int) -> bool:
    """Check zeta_doubled(z) = zeta(z) * zeta(-z) coefficientwise.

    The doubled system's fixed-point counts vanish at odd lengths and
    double at even ones, which matches multiplying the base zeta by its
    sign-alternated twin.  Expected true for every input sequence.
    """
    if fixed.horizon < degree:
        raise HorizonTooSmall(
            f"need counts up to {degree}, have horizon {fixed.horizon}"
        )
    doubled = doubled_fixed_point_counts(fixed, degree)
    lhs = zeta_from_fixed_points(doubled, degree)
    base = zeta_from_fixed_points(fixed, degree)
    rhs = base * base.substitute_negated()
    return lhs == rhs


@dataclass(frozen=True)
class AuxiliarySequence:
    """The congruence-pinned sequence driving the natural-boundary pair.

    values[n] is zero at n = 1 and at primes; at composite n it is the
    unique integer in [n, 2n) congruent to values[n/p] modulo
    p^ord_p(n) for every prime p dividing n.
    """

    values: tuple[int, ...]

    @property
    def horizon(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"index {n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def items(self):
        return enumerate(self.values, start=1)

    def verify(self) -> list[str]:
        """Re-check every defining property directly; [] when all hold."""
        problems = []
        for n, value in self.items():
            if n == 1 or is_prime(n):
                if value != 0:
                    problems.append(f"c[{n}] = {value}, expected 0")
                continue
            if not n <= value < 2 * n:
                problems.append(f"c[{n}] = {value} outside [{n}, {2 * n})")
            for p, multiplicity in prime_factors(n).items():
                modulus = p**multiplicity
                if (value - self[n // p]) % modulus != 0:
                    problems.append(
                        f"c[{n}] = {value} != c[{n // p}] = {self[n // p]} "
                        f"mod {modulus}"
                    )
        return problems


def _crt(congruences: list[tuple[int, int]]) -> tuple[int, int]:
    """Combine (residue, modulus) pairs with pairwise coprime moduli."""
    residue, modulus = 0, 1
    for r, m in congruences:
        try:
            lift = (r - residue) * pow(modulus, -1, m) % m
        except ValueError as exc:
            raise NoSolution(f"moduli not coprime: {exc}") from None
        residue += modulus * lift
        modulus *= m
    return residue, modulus


def c_sequence(horizon: int) -> AuxiliarySequence:
    """Build the auxiliary sequence bottom-up out to the horizon.

    The prime-power moduli of a composite n multiply to n itself, so the
    congruences pin a single residue class mod n and the window [n, 2n)
    contains exactly one representative.
    """
    if horizon < 1:
        raise BadArgument("horizon must be >= 1")
    values: list[int] = []
    for n in range(1, horizon + 1):
        if n == 1 or is_prime(n):
            values.append(0)
            continue
        congruences = [
            (values[n // p - 1] % p**multiplicity, p**multiplicity)
            for p, multiplicity in prime_factors(n).items()
        ]
        residue, modulus = _crt(congruences)
        if modulus != n:
            raise NoSolution(f"moduli of {n} multiply to {modulus}")
        values.append(n + residue)
    return AuxiliarySequence(tuple(values))


def natural_boundary_sequences(
    horizon: int,
) -> tuple[CountSequence, CountSequence]:
    """The orbit-count pair whose quotient zeta has a boundary circle.

    big[n] is the orbit count of a system with 2^n points of period n;
    quotient[n] adds the Moebius transform of c_d * 2^d.  Divisibility
    and non-negativity of both are re-verified at runtime even though
    the congruence construction guarantees them.
    """
    if horizon < 1:
        raise BadArgument("horizon must be >= 1")
    aux = c_sequence(horizon)
    big: list[int] = []
    quot: list[int] = []
    for n in range(1, horizon + 1):
        base_total = sum(mobius(n // d) * 2**d for d in divisors(n))
        base, remainder = divmod(base_total, n)
        if remainder:
            raise IntegralityFailure(f"{n} does not divide {base_total}")
        if base < 0:
            raise NegativityFailure(f"orbit count {base} < 0 at n={n}")
        extra_total = sum(mobius(n // d) * aux[d] * 2**d for d in divisors(n))
        extra, remainder = divmod(extra_total, n)
        if remainder:
            raise IntegralityFailure(
                f"{n} does not divide the auxiliary transform {extra_total}"
            )
        if extra < 0:
            raise NegativityFailure(f"auxiliary excess {extra} < 0 at n={n}")
        big.append(base)
        quot.append(base + extra)
    return CountSequence(tuple(big)), CountSequence(tuple(quot))
