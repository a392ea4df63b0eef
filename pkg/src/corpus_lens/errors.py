class ValidationError(ValueError):
    """Bad input data or parameters (as opposed to I/O failures)."""
