"""Exception hierarchy shared by every module."""


class FlowGraphError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FlowGraphError, ValueError):
    pass


class FormatError(FlowGraphError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(FlowGraphError, ValueError):
    pass


class SearchBudgetExceeded(FlowGraphError, RuntimeError):
    pass


class NotASplittingVertex(FlowGraphError, ValueError):
    pass


class CoreUndefined(FlowGraphError, ValueError):
    pass


class UnknownLaw(FlowGraphError, KeyError):
    pass
