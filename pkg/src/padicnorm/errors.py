"""Exception types shared across the package.

The split between DocumentError and DomainError mirrors the CLI exit
codes: a document that cannot be parsed into a valid object is a
different failure from a well-formed request whose preconditions do not
hold.
"""


class DomainError(Exception):
    """A well-formed request violates a precondition."""


class DimensionMismatchError(DomainError):
    pass


class ConfigMismatchError(DomainError):
    pass


class SingularMatrixError(DomainError):
    pass


class RankDeficiencyError(DomainError):
    pass


class PreconditionError(DomainError):
    pass


class DocumentError(Exception):
    """A serialized document is malformed or fails validation."""


class SelfCheckError(RuntimeError):
    """An internal consistency check failed.  Must not occur."""
