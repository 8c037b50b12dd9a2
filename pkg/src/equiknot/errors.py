"""Exception hierarchy shared by every module.

Each error carries a stable ``name`` that the command line echoes back in its
structured error document.
"""


class EquiknotError(Exception):
    """Base class; ``name`` is the identifier reported to callers."""

    @property
    def name(self) -> str:
        return type(self).__name__


class ComputationError(EquiknotError):
    pass


class NonSymmetric(ComputationError):
    pass


class ShapeMismatch(ComputationError):
    pass


class DimensionMismatch(ComputationError):
    pass


class ZeroPolynomial(ComputationError):
    pass


class NotSymmetric(ComputationError):
    pass


class OddResult(ComputationError):
    pass


class ExcludedPoint(ComputationError):
    pass


class NotNormalizable(ComputationError):
    pass


class FactorizationLimit(ComputationError):
    """Input is beyond the degree or candidate budget of the factorizer."""


class InvalidInput(ComputationError):
    pass


class BoundTooLargeForBudget(ComputationError):
    pass


class SingularSymmetrization(ComputationError):
    pass


class NonInvertibleBeta(ComputationError):
    pass


class NotPrimary(ComputationError):
    pass


class NotReduced(ComputationError):
    pass


class NonnegativeLambda(ComputationError):
    pass


class NoExpansion(ComputationError):
    pass


class OracleMismatch(ComputationError):
    pass


class HypothesisFailure(ComputationError):
    pass
