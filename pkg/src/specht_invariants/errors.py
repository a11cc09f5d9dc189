"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class SizeBoundError(ValueError):
    """A requested size exceeds the configured enumeration bound."""


class InternalInvariantError(AssertionError):
    """An exactness or consistency check failed; indicates a bug."""


class VerificationFailure(Exception):
    """Brute-force computation disagrees with a closed-form prediction.

    The offending report is attached as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
