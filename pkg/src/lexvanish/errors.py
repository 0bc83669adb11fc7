"""Exception hierarchy.

The CLI maps these onto exit codes: ValidationError -> 1,
PreconditionError -> 2, InvariantError -> 3.
"""


class LexVanishError(Exception):
    pass


class ValidationError(LexVanishError, ValueError):
    """Malformed or inconsistent input (bad rational, non-lower-set, ...)."""


class DimensionError(ValidationError):
    pass


class PreconditionError(LexVanishError, ValueError):
    """Input is well formed but outside what the algorithm handles."""


class InvariantError(LexVanishError, AssertionError):
    """An internal guarantee failed; always a bug or a bad oracle result."""
