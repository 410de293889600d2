"""Exception hierarchy.

Every error raised on purpose by the library derives from ``RankMetricError``
so callers (notably the CLI) can map families of failures to exit codes.
"""

from __future__ import annotations


class RankMetricError(Exception):
    """Base class for all library errors."""


# input / parameter errors (CLI exit code 2)


class InputError(RankMetricError, ValueError):
    pass


class NotPrime(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class BasisMismatch(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class AmbientMismatch(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class InconsistentInput(InputError):
    pass


class NegativeCount(InconsistentInput):
    pass


class PrefixMissing(InputError):
    pass


class NotApplicable(InputError):
    pass


class NotQMRD(InputError):
    pass


class HypothesisFailed(InputError):
    pass


class DependentPoints(InputError):
    pass


class DimensionTooLarge(InputError):
    pass


class DividesM(InputError):
    pass


# resource caps (exit code 3)


class EnumerationTooLarge(RankMetricError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"enumeration of {size} elements exceeds cap {cap}")
        self.size = size
        self.cap = cap


class TooLarge(RankMetricError):
    pass


# trivial codes (exit code 4)


class TrivialCode(RankMetricError):
    pass


class ZeroCode(TrivialCode):
    pass


# a proven identity failed to hold (exit code 1)


class InvariantViolation(RankMetricError, AssertionError):
    pass
