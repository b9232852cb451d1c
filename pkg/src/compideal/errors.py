"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
2 for hypothesis violations (the input is outside a result's hypotheses),
3 for parse/usage problems, 4 for resource guards.
"""


class IdealError(Exception):
    exit_code = 2


class EmptyGeneratorSet(IdealError, ValueError):
    exit_code = 3


class DimensionMismatch(IdealError, ValueError):
    exit_code = 3


class UnitIdeal(IdealError, ValueError):
    pass


class NotMPrimary(IdealError, ValueError):
    pass


class NotFinitelySupported(IdealError):
    """Raised when a transform has a positive-dimensional cosupport on the
    exceptional divisor.

    ``path`` is the chart sequence leading to the offending transform and
    ``direction`` the coordinate with no pure power in it.
    """

    def __init__(self, path, direction, ideal=None):
        self.path = tuple(path)
        self.direction = direction
        self.ideal = ideal
        super().__init__(
            f"not finitely supported: transform along charts {list(self.path)} "
            f"has no pure power of coordinate {direction}"
        )


class DepthExceeded(IdealError):
    exit_code = 4


class DegreeBlowup(IdealError):
    exit_code = 4


class NotZeroDimensional(IdealError, ValueError):
    pass


class InsufficientData(IdealError, ValueError):
    exit_code = 3


class NonPolynomialTail(IdealError):
    pass


class HypothesisViolation(IdealError):
    pass


class HypothesisFails(HypothesisViolation):
    """A numerical hypothesis was checked and does not hold."""


class NotContained(IdealError, ValueError):
    pass


class WrongGeneratorCount(IdealError, ValueError):
    pass


class ParseError(IdealError, ValueError):
    exit_code = 3

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class VerificationFailure(IdealError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 1
