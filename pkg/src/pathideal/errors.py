"""Shared error types."""


class BoundExceededError(RuntimeError):
    """A configured size bound (vertex count, facet count, ...) was exceeded."""
