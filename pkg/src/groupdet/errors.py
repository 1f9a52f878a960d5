"""Exception types shared across the package."""


class GroupDetError(Exception):
    """Base class for all library errors."""


class UnsupportedGroup(GroupDetError):
    """The requested group/family is outside the supported set."""


class LengthMismatch(GroupDetError):
    """A coefficient vector does not match the group order."""


class ModulusMismatch(GroupDetError):
    """A Laurent polynomial has the wrong modulus for an operation."""


class NotPrime(GroupDetError):
    """A prime was required."""


class NoSolution(GroupDetError):
    """A bounded norm-form search found nothing.

    For inputs satisfying the documented preconditions this signals a
    defect, not a domain condition.
    """


class TooLarge(GroupDetError):
    """Input exceeds the desk-scale factorization cap."""


class ZeroInput(GroupDetError):
    """Zero passed where a nonzero integer is required."""


class NotInSet(GroupDetError):
    """Witness requested for a value the classifier rejects."""


class ConstructionGap(GroupDetError):
    """No catalogued construction covers this value at this scale."""


class BudgetExceeded(GroupDetError):
    """An enumeration job exceeds the configured vector budget."""


class UndecidableAtScale(GroupDetError):
    """Membership needs factorization data beyond the cap; verdict withheld."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class Inconclusive(GroupDetError):
    """An enumeration radius was too small to confirm the expected value."""
