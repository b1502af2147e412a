"""Truncated formal power series with exact rational coefficients.

Coefficients are stored as Fraction, never floats.  The hot loops (exp,
inverse, product) unwrap integer-valued coefficients to plain ints first,
so the common all-integer case runs on native bigint arithmetic; degree
2000 stays in seconds.  Every operation truncates to the degree of its
shortest operand and is exact at every kept coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadArgument

__all__ = ["FormalPowerSeries", "series_exp", "rational_series"]


def _lift(c: Fraction) -> int | Fraction:
    """Integer-valued Fractions become ints for fast arithmetic."""
    return c.numerator if c.denominator == 1 else c


def _coerce(value) -> Fraction:
    if isinstance(value, float):
        raise BadArgument("floating point coefficients are not allowed")
    return Fraction(value)


def _exact_div(value: int | Fraction, by: int) -> int | Fraction:
    if isinstance(value, int):
        q, r = divmod(value, by)
        return q if r == 0 else Fraction(value, by)
    return value / by


@dataclass(frozen=True)
class FormalPowerSeries:
    """A power series known exactly through its truncation degree."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(_coerce(c) for c in self.coefficients)
        if not coeffs:
            raise BadArgument("a series needs at least its constant term")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_coefficients(cls, values) -> "FormalPowerSeries":
        return cls(tuple(values))

    @classmethod
    def constant(cls, value, degree: int) -> "FormalPowerSeries":
        if degree < 0:
            raise BadArgument("degree must be >= 0")
        return cls((Fraction(value),) + (Fraction(0),) * degree)

    @classmethod
    def one(cls, degree: int) -> "FormalPowerSeries":
        return cls.constant(1, degree)

    @classmethod
    def zero(cls, degree: int) -> "FormalPowerSeries":
        return cls.constant(0, degree)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.degree:
            raise IndexError(f"degree {n} outside 0..{self.degree}")
        return self.coefficients[n]

    def truncated(self, degree: int) -> "FormalPowerSeries":
        if degree >= self.degree:
            return self
        if degree < 0:
            raise BadArgument("degree must be >= 0")
        return FormalPowerSeries(self.coefficients[: degree + 1])

    def nonzero_degrees(self) -> list[int]:
        return [n for n, c in enumerate(self.coefficients) if c != 0]

    def _lifted(self) -> list[int | Fraction]:
        return [_lift(c) for c in self.coefficients]

    def __add__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        d = min(self.degree, other.degree)
        return FormalPowerSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))[: d + 1]
        )

    def __sub__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        d = min(self.degree, other.degree)
        return FormalPowerSeries(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients))[: d + 1]
        )

    def __neg__(self) -> "FormalPowerSeries":
        return FormalPowerSeries(tuple(-c for c in self.coefficients))

    def scaled(self, factor) -> "FormalPowerSeries":
        f = _coerce(factor)
        return FormalPowerSeries(tuple(c * f for c in self.coefficients))

    def __mul__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        degree = min(self.degree, other.degree)
        a = self._lifted()
        b = other._lifted()
        out: list[int | Fraction] = [0] * (degree + 1)
        for i, ai in enumerate(a[: degree + 1]):
            if ai == 0:
                continue
            top = degree - i
            for j, bj in enumerate(b[: top + 1]):
                if bj != 0:
                    out[i + j] += ai * bj
        return FormalPowerSeries(tuple(out))

    def inverse(self) -> "FormalPowerSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self._lifted()
        if a[0] == 0:
            raise BadArgument("cannot invert a series with zero constant term")
        inv0 = _lift(Fraction(1, 1) / a[0])
        out: list[int | Fraction] = [inv0]
        for n in range(1, len(a)):
            acc: int | Fraction = 0
            for k in range(1, n + 1):
                ak = a[k]
                if ak != 0:
                    acc += ak * out[n - k]
            out.append(-acc * inv0)
        return FormalPowerSeries(tuple(out))

    def substitute_negated(self) -> "FormalPowerSeries":
        """The series with z replaced by -z."""
        return FormalPowerSeries(
            tuple(c if n % 2 == 0 else -c for n, c in enumerate(self.coefficients))
        )

    def __str__(self) -> str:
        head = ", ".join(str(c) for c in self.coefficients[:8])
        tail = ", ..." if self.degree >= 8 else ""
        return f"series[deg {self.degree}]({head}{tail})"


def series_exp(series: FormalPowerSeries) -> FormalPowerSeries:
    """exp of a series with zero constant term, truncated to its degree.

    Uses the derivative relation E' = S'E, i.e.
    n*e_n = sum(k * s_k * e_{n-k} for k = 1..n), run over ints whenever
    the weighted coefficients k*s_k are integral.
    """
    if series.coefficients[0] != 0:
        raise BadArgument("series_exp needs a zero constant term")
    degree = series.degree
    weighted = [0] + [_lift(k * c) for k, c in enumerate(series.coefficients) if k]
    out: list[int | Fraction] = [1]
    for n in range(1, degree + 1):
        acc: int | Fraction = 0
        for k in range(1, n + 1):
            wk = weighted[k]
            if wk != 0:
                acc += wk * out[n - k]
        out.append(_exact_div(acc, n) if acc != 0 else 0)
    return FormalPowerSeries(tuple(out))


def rational_series(numerator, denominator, degree: int) -> FormalPowerSeries:
    """Expand numerator(z)/denominator(z) to the given degree.

    Both polynomials are given as coefficient sequences from the constant
    term up; the denominator needs a nonzero constant term.
    """
    if degree < 0:
        raise BadArgument("degree must be >= 0")
    num = list(numerator) or [0]
    den = list(denominator) or [0]
    pad = lambda p: tuple(p) + (0,) * (degree + 1 - len(p))
    top = FormalPowerSeries(pad(num[: degree + 1]))
    bottom = FormalPowerSeries(pad(den[: degree + 1]))
    return top * bottom.inverse()
