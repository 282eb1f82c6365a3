"""Exception types shared across the package.

The CLI maps these onto exit codes: format errors -> 1, precondition
violations (disconnected input, size guards, incomplete clique family)
-> 2, internal verification failures -> 4.
"""


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class SizeGuardError(PreconditionError):
    """Input exceeds a desk-scale guard and force was not requested."""


class InternalVerificationError(RuntimeError):
    """A constructed root failed its own defensive verification.

    This is never a property of the input; it indicates a bug and is
    surfaced loudly instead of being folded into a false decision.
    """
