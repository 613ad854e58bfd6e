"""Exception types shared across the package."""

__all__ = [
    "WidthGamesError",
    "GroundMismatchError",
    "LimitExceededError",
    "NotWeaklySubmodularError",
    "ValidationError",
    "ParseError",
]


class WidthGamesError(Exception):
    pass


class GroundMismatchError(WidthGamesError):
    """Two objects over different ground sets were combined."""


class LimitExceededError(WidthGamesError):
    """An enumeration limit (ground size, partition count) was exceeded."""


class NotWeaklySubmodularError(WidthGamesError):
    """No redirect witness exists for a pair that needs one."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ValidationError(WidthGamesError):
    """A constructed artifact failed its own validator."""


class ParseError(WidthGamesError):
    """Malformed textual input."""
