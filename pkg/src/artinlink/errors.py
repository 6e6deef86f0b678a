"""Exceptions shared across more than one module."""


class InternalInconsistencyError(RuntimeError):
    """A cross-module structural invariant failed at runtime.

    Raised, for instance, when a link that must be simple acquires a
    parallel edge.  Seeing this means a bug, not bad user input.
    """
