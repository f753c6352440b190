"""Exception hierarchy shared by the library and the CLI."""


class NdlrsError(Exception):
    """Base class for all library errors."""


class DomainError(NdlrsError, ValueError):
    """A precondition of an operation does not hold."""


class WindowError(DomainError, IndexError):
    """A finite-window sequence was evaluated outside its window."""


class ParseError(NdlrsError, ValueError):
    """Malformed input (JSON payloads, polynomial text, scalars)."""
