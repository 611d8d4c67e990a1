"""Exception types shared across the library.

The CLI maps these onto exit codes: guard exhaustion is reported as
"inconclusive" (exit 2), never silently coerced to a negative verdict.
"""


class GridlabError(Exception):
    """Base class for all library errors."""


class ContractViolation(GridlabError):
    """An argument breaks a documented precondition or invariant."""


class GuardExceeded(GridlabError):
    """A size or work guard was hit before the operation could finish."""


class DomainError(GridlabError):
    """The input is structurally outside the operation's domain."""


class InvalidInput(GridlabError):
    """A file or serialized payload failed validation."""


class ChainStepFailure(GridlabError):
    """A witness chain step did not deliver its guaranteed structure."""
