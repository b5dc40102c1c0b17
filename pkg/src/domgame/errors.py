"""Exception types shared across the package."""


class DomGameError(Exception):
    """Base class for package-specific errors."""


class ParseError(DomGameError):
    """Malformed edge-list input; ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IllegalMoveError(DomGameError):
    """A move that violates the game rules (vertex not playable)."""


class ClaimViolationError(DomGameError):
    """A structural property that must hold at a phase boundary failed.

    Carries a snapshot of the offending residual state so the failure can
    be replayed and inspected.
    """

    def __init__(self, message: str, snapshot: str):
        super().__init__(message)
        self.snapshot = snapshot


class ResourceLimitError(DomGameError):
    """Instance exceeds a configured size cap."""


class ConfigError(DomGameError):
    """Invalid corpus specification or CLI configuration."""
