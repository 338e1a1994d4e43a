"""Exception hierarchy shared by every module."""


class MatroidError(Exception):
    """Base class for all errors raised by matroidlab."""


class InputError(MatroidError, ValueError):
    """Malformed or inconsistent input (bad ids, missing elements, negative costs...)."""


class ParseError(InputError):
    """Input text that does not follow the file grammar."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractError(MatroidError):
    """A precondition or invariant of an algorithm was violated.

    Usually this means an oracle does not describe the structure it claims to
    (for example a "matroid" oracle that fails augmentation).
    """
