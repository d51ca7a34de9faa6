"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input failed one of its documented invariants.

    The message always names the violated check and carries the offending
    value, so callers (and the CLI) can report precisely what went wrong.
    """
