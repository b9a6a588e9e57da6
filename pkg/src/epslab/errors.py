"""Exception types shared across the package."""


class EpslabError(Exception):
    """Base class for all errors raised by epslab."""


class ArityMismatch(EpslabError, ValueError):
    pass


class UnitIdealError(EpslabError, ValueError):
    """Raised where a proper ideal is required (e.g. dimension of the zero ring)."""


class RingMismatch(EpslabError, ValueError):
    pass


class ContainmentError(EpslabError, ValueError):
    """The smaller ideal of a pair is not contained in the larger one."""


class InfiniteLength(EpslabError, ArithmeticError):
    """The quotient module is not supported at the maximal ideal."""


class HypothesisViolation(EpslabError):
    """The nilradical has the same dimension as the ring."""


class ParseError(EpslabError, ValueError):
    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)
