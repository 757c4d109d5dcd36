"""Exception types raised by the library."""


class FiniteSpaceError(Exception):
    """Base class for all library errors."""


class NotATopology(FiniteSpaceError):
    """A family of subsets is not closed under the topology axioms.

    ``witness`` holds the offending pair of members (or the missing set).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidRelation(FiniteSpaceError):
    """A relation matrix is not a preorder (or a strict order is not strict)."""


class NotT0(FiniteSpaceError):
    pass


class EmptySpace(FiniteSpaceError):
    pass


class InvalidExtension(FiniteSpaceError):
    """A level partition is not a standard linear extension of the given space."""


class Unsupported(FiniteSpaceError):
    """Requested size is above the default enumeration cap."""


class UnitNotAllowed(FiniteSpaceError):
    """Half-shuffle of the unit with the unit is undefined."""


class EmptyWord(FiniteSpaceError):
    pass


class ParseError(FiniteSpaceError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class IndexOutOfRange(FiniteSpaceError, IndexError):
    pass
