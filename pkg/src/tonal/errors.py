class DomainError(ValueError):
    """Arguments outside the range where an operation is defined."""


class SizeLimitError(ValueError):
    """Input exceeds a brute-force guard."""


class TheoremViolation(RuntimeError):
    """A construction that is guaranteed to succeed did not; indicates a bug."""
