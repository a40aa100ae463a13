"""Exception types.

Every error carries a stable string ``code`` (``E_FULL_SIMPLEX`` ...) so the
CLI can map it to an exit status without parsing messages.
"""


class TorbordError(Exception):
    code = "E_GENERIC"

    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


class InputError(TorbordError, ValueError):
    """Bad user input: malformed complex, wrong dimension, unsupported range."""


class RangeError(InputError):
    """Request outside the supported size range (CLI exit status 3)."""


class InternalMismatch(TorbordError, AssertionError):
    """Two independent routes disagreed. Always a bug, never bad input."""
