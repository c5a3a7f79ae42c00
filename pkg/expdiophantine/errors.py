"""Exception hierarchy shared by the library and the command line.

Every error carries a one-line ``detail`` and the process exit code the CLI
maps it to. Counterexamples to a known result are not errors; they travel as data.
"""


class VerifierError(Exception):
    """Base error with a detail message and an exit code."""

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail

    def __str__(self) -> str:
        return self.detail


class PreconditionError(VerifierError, ValueError):
    """An operation was called outside its documented domain."""


class RingMismatchError(PreconditionError):
    """Two quadratic integers from different rings were combined."""


class UsageError(VerifierError):
    """Unknown subcommand or malformed command-line argument."""


class ConfigError(VerifierError):
    """The environment configuration could not be parsed."""


def require(condition: bool, detail: str) -> None:
    """Raise ``PreconditionError(detail)`` unless ``condition`` holds."""
    if not condition:
        raise PreconditionError(detail)
