"""Exact integer arithmetic on closed-orbit and periodic-point counts.

Counts are plain Python integers: 2**n shows up immediately and the
divisibility tests below are semantic, so machine words and floats are
both out.  Sequences are dense, 1-indexed, and carry an explicit horizon.
Factoring uses deterministic trial division, which is plenty at the
horizons this package targets (a few thousand).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator

from .errors import BadArgument, InvalidSequence, NotRealizable

__all__ = [
    "CountSequence",
    "mobius",
    "sigma",
    "divisors",
    "prime_factors",
    "is_prime",
    "prime_power_in",
    "fixed_points_from_orbits",
    "orbits_from_fixed_points",
    "euler_congruence_holds",
]


@dataclass(frozen=True)
class CountSequence:
    """Non-negative integer counts indexed by orbit length n = 1..horizon.

    Which role an instance plays (orbit counts, fixed-point counts, big
    system, quotient system) is contextual; operations document what they
    expect.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        for n, v in enumerate(vals, start=1):
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidSequence(f"entry at n={n} is not an integer: {v!r}")
            if v < 0:
                raise InvalidSequence(f"entry at n={n} is negative: {v}")
        object.__setattr__(self, "values", vals)

    @property
    def horizon(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"index {n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def items(self) -> Iterator[tuple[int, int]]:
        """Pairs (n, count) for n = 1..horizon."""
        return enumerate(self.values, start=1)

    def extended(self, horizon: int) -> "CountSequence":
        """Zero-pad out to `horizon`; no-op when already long enough."""
        if horizon <= len(self.values):
            return self
        return CountSequence(self.values + (0,) * (horizon - len(self.values)))

    def truncated(self, horizon: int) -> "CountSequence":
        """Keep only entries up to `horizon`; no-op when already short."""
        if horizon >= len(self.values):
            return self
        return CountSequence(self.values[:horizon])


def _require_positive(n: int, what: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadArgument(f"{what} must be a positive integer, got {n!r}")


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization {p: multiplicity} by trial division."""
    _require_positive(n)
    factors: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power_in(p: int, n: int) -> int:
    """Multiplicity of the prime p in n (ord_p(n))."""
    _require_positive(n)
    if not is_prime(p):
        raise BadArgument(f"{p} is not prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    _require_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def mobius(n: int) -> int:
    """The Moebius function: 0 on non-squarefree n, else (-1)**#primes."""
    _require_positive(n)
    result = 1
    for multiplicity in prime_factors(n).values():
        if multiplicity > 1:
            return 0
        result = -result
    return result


def sigma(n: int) -> int:
    """Sum of the divisors of n."""
    _require_positive(n)
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            if d != n // d:
                total += n // d
    return total


def fixed_points_from_orbits(orbits: CountSequence) -> CountSequence:
    """Count points of period n from closed-orbit counts.

    Entry n of the result is sum(d * orbits[d] for d | n); an orbit of
    length d contributes its d points to every period it divides.  The
    horizon is preserved: entry n only needs orbit counts at divisors
    of n.
    """
    horizon = orbits.horizon
    fixed = [0] * (horizon + 1)
    for d, count in orbits.items():
        if count == 0:
            continue
        contribution = d * count
        for m in range(d, horizon + 1, d):
            fixed[m] += contribution
    return CountSequence(tuple(fixed[1:]))


def orbits_from_fixed_points(fixed: CountSequence) -> CountSequence:
    """Invert `fixed_points_from_orbits` by Moebius inversion.

    Entry n is (1/n) * sum(mobius(n/d) * fixed[d] for d | n).  Raises
    NotRealizable, carrying the offending index and witness value, when
    some entry comes out negative or non-integral; such an input is not
    the fixed-point sequence of any map.
    """
    counts = []
    for n in range(1, fixed.horizon + 1):
        total = sum(mobius(n // d) * fixed[d] for d in divisors(n))
        if total < 0:
            raise NotRealizable(n, total)
        orbit_count, remainder = divmod(total, n)
        if remainder:
            raise NotRealizable(n, Fraction(total, n))
        counts.append(orbit_count)
    return CountSequence(tuple(counts))


def euler_congruence_holds(r: int, m: int, p: int) -> bool:
    """Check r**m == r**(m/p) modulo p**ord_p(m) for a prime p dividing m.

    This is the congruence behind the divisibility certificates used by
    the natural-boundary sequences; it is expected to hold for every
    admissible (r, m, p).
    """
    _require_positive(m, "m")
    if not is_prime(p):
        raise BadArgument(f"{p} is not prime")
    if m % p != 0:
        raise BadArgument(f"{p} does not divide {m}")
    modulus = p ** prime_power_in(p, m)
    return pow(r, m, modulus) == pow(r, m // p, modulus)
