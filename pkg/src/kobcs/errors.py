"""Exception hierarchy shared by every module of the package."""


class KobcsError(Exception):
    """Base class for all errors raised by kobcs."""


class ParseError(KobcsError):
    """A graph or solution file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ParseError):
    """Input parsed but violates a graph invariant (self-loop, duplicate edge, bad weight)."""


class DomainError(KobcsError, ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(DomainError):
    """A solution handed to an operation is not feasible for the stated k."""


class UnsupportedParameterError(DomainError):
    pass


class SizeGuardError(KobcsError):
    """Refusing to run an exponential procedure on an instance above the configured limit."""


class ConfigurationError(KobcsError):
    """An experiment specification is inconsistent."""


class BoundViolation(KobcsError, AssertionError):
    """A proven inequality failed at runtime. Always a bug."""
