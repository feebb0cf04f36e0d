"""Exception hierarchy shared by every module of the package."""


class NormBrauerError(Exception):
    """Base class for all errors raised by normbrauer."""


class GroupTableError(NormBrauerError, ValueError):
    """A multiplication table fails the group axioms."""


class ScenarioError(NormBrauerError, ValueError):
    """A scenario (group plus factor data) violates a validation rule."""


class ScenarioParseError(ScenarioError):
    """A scenario file could not be read as JSON or has the wrong layout."""


class NormalizationError(ScenarioError):
    """A scenario is not normalized and normalization was disabled."""


class CapacityError(NormBrauerError):
    """An enumeration would exceed the configured bound."""


class ContainmentError(NormBrauerError, ArithmeticError):
    """A generator expected to lie in a subgroup does not."""

    def __init__(self, message, generator=None, index=None):
        super().__init__(message)
        self.generator = generator
        self.index = index


class InvariantViolation(NormBrauerError, AssertionError):
    """An internal consistency check failed.

    Seeing this means either a bug or that a precondition such as
    ``n | m`` was bypassed by the caller.
    """
