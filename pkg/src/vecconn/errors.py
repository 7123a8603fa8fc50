"""Exception hierarchy shared by all modules."""


class InputError(ValueError):
    """Malformed or out-of-range input supplied by a caller."""


class ContractError(RuntimeError):
    """A documented precondition or internal invariant was violated."""


class CapacityError(RuntimeError):
    """An exhaustive routine was asked to run beyond its configured size cap."""


class ParseError(InputError):
    """Base class for instance-file syntax errors; carries a position."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", col {col}"
            where += ": "
        super().__init__(where + message)


class HeaderError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class DemandBoundError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass
