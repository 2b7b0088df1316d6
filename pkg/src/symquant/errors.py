"""Exception hierarchy shared by every module."""


class SymQuantError(Exception):
    """Base class for all errors raised by symquant."""


class ContextMismatchError(SymQuantError, ValueError):
    """Operands live over different generator (or parameter) sets."""


class CapExceededError(SymQuantError):
    """A degree cap or Sym_k cap would be exceeded; the expansion is refused."""

    def __init__(self, kind: str, requested: int, cap: int):
        self.kind = kind
        self.requested = requested
        self.cap = cap
        super().__init__(f"{kind} {requested} exceeds cap {cap}")


class RelationError(SymQuantError, ValueError):
    """Malformed relation system (bad names, indices or case data)."""


class CaseError(SymQuantError):
    """Operation is not defined for the relation system's bracket case."""


class UnknownBracketError(SymQuantError):
    """A bracket that the relation system does not determine was required."""


class ParseError(SymQuantError, ValueError):
    def __init__(self, message: str, src: str = "", pos: int = 0):
        line = src.count("\n", 0, pos) + 1
        col = pos - (src.rfind("\n", 0, pos) + 1) + 1
        self.line = line
        self.column = col
        self.message = message
        super().__init__(f"{message} (line {line}, column {col})")
