"""Exception types shared across the package."""


class InputError(Exception):
    """A problem document or fan file could not be parsed."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; the computation cannot be trusted."""
