"""Exception types shared across the package.

The CLI maps these onto exit codes: InputError -> 2,
ModelInconsistencyError -> 3, InternalInvariantError -> 4.
"""


class InputError(ValueError):
    """User-supplied data is malformed or out of range."""


class ModelInconsistencyError(ValueError):
    """Analytic data contradicts a constraint it is required to satisfy."""


class InternalInvariantError(RuntimeError):
    """A computed quantity violates an identity that must always hold."""
