"""Exception hierarchy shared across the package.

Two families matter to callers.  ValidationError means the caller handed
in something that cannot be processed (bad sequence, violated hypothesis,
unparseable file); the CLI maps it to exit code 2.  InternalCheckError
means a cross-check that should be unreachable for valid inputs fired;
the CLI maps it to exit code 3.
"""

from __future__ import annotations


class OrbitfoldError(Exception):
    code = "error"
    exit_code = 1


class ValidationError(OrbitfoldError):
    code = "validation"
    exit_code = 2


class InternalCheckError(OrbitfoldError):
    code = "internal"
    exit_code = 3


class BadArgument(ValidationError):
    """An argument fails an operation's stated precondition."""

    code = "bad-argument"


class InvalidSequence(ValidationError):
    code = "invalid-sequence"


class NotRealizable(ValidationError):
    """The input is not the fixed-point sequence of any map."""

    code = "not-realizable"

    def __init__(self, index, witness, message=None):
        self.index = index
        self.witness = witness
        super().__init__(
            message
            or f"no orbit count exists at n={index}: witness value {witness}"
        )


class HorizonMismatch(ValidationError):
    code = "horizon-mismatch"


class HorizonTooSmall(ValidationError):
    code = "horizon-too-small"


class EmptyFixedPoint(ValidationError):
    """A decomposition has no surviving fixed point (surviving[1] = 0)."""

    code = "empty-fixed-point"


class HypothesisViolated(ValidationError):
    """Sequence pair fails the existence hypotheses for a decomposition."""

    code = "hypothesis-violated"

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0]
        extra = len(self.violations) - 1
        tail = f" (+{extra} more)" if extra else ""
        super().__init__(f"{first}{tail}")


class InvalidGrowthSpec(ValidationError):
    code = "invalid-growth-spec"


class InvalidSystem(ValidationError):
    code = "invalid-system"


class TooFewCoefficients(ValidationError):
    code = "too-few-coefficients"


class ParseError(ValidationError):
    code = "parse"


class NegativeCount(InternalCheckError):
    code = "negative-count"


class InvariantBreach(InternalCheckError):
    code = "invariant-breach"


class IllDefined(InternalCheckError):
    code = "ill-defined"


class NoSolution(InternalCheckError):
    code = "no-solution"


class IntegralityFailure(InternalCheckError):
    code = "integrality-failure"


class NegativityFailure(InternalCheckError):
    code = "negativity-failure"


class OracleMismatch(InternalCheckError):
    code = "oracle-mismatch"


class GoldenMismatch(InternalCheckError):
    code = "golden-mismatch"
