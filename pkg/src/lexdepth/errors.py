"""Exception types shared across modules; the CLI maps them to exit codes."""


class DomainError(ValueError):
    """Input lies outside an operation's mathematical domain (CLI exit 1)."""

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class GuardrailError(RuntimeError):
    """A configured size limit was exceeded (CLI exit 3)."""
