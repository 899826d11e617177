class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this indicates a bug, not bad input."""
