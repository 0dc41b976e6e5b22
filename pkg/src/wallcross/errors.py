"""Exception types shared across the package.

Validation errors mean the caller handed us something outside an operation's
contract (bad surface, non-forward class, missing bounds, degenerate input).
Consistency errors mean an internal cross-check failed and indicate a bug.
The CLI maps them to exit codes 2 and 3 respectively.
"""


class ValidationError(ValueError):
    """Input rejected by an operation's precondition."""


class DegenerateSegmentError(ValidationError):
    """A segment endpoint lies on a wall of a crossed class."""


class MissingBoundsError(ValidationError):
    """An unbounded enumeration was requested where no finiteness bound exists."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; this is a bug, not a user error."""
