"""Exception types shared across the package."""


class DomainError(ValueError):
    """A value or operation violates a library precondition or invariant."""


class ParseError(ValueError):
    """An input document is malformed; the message names the location."""
