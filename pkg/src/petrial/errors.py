"""Exception hierarchy shared by every module."""


class PetrialError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(PetrialError, ValueError):
    """An argument names an unknown vertex/label or is otherwise malformed."""


class PreconditionError(PetrialError, ValueError):
    """An operation was called outside its documented domain."""


class ResourceLimitError(PetrialError, RuntimeError):
    """An exhaustive enumeration would exceed the configured size guard."""


class InternalInvariantError(PetrialError, RuntimeError):
    """A construction that should always succeed did not."""


class ParseError(InvalidInputError):
    def __init__(self, message, line=None, column=None, token=None):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        text = f"{prefix}: {message}" if prefix else message
        if token is not None:
            text += f" (token {token!r})"
        super().__init__(text)
