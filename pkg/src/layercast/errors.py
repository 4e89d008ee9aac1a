"""Exception types shared across the package."""


class LayercastError(Exception):
    """Base class for all package errors."""


class InputError(LayercastError):
    """Caller-supplied values violate a documented precondition."""


class ContractError(LayercastError):
    """An internal contract between components was violated."""


class GenerationError(LayercastError):
    """A random-graph generator exhausted its retry budget."""


class NumericError(LayercastError):
    """An iterative numeric procedure failed to converge."""

    def __init__(self, message, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class DegenerateSampleError(InputError):
    """A statistical sample carries no usable signal (e.g. all-zero differences)."""
