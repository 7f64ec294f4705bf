"""Exception hierarchy shared by every stairwords module."""


class StairwordsError(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(StairwordsError, ZeroDivisionError):
    pass


class MismatchedDiscriminant(StairwordsError, ValueError):
    pass


class LetterOutOfRange(StairwordsError, ValueError):
    pass


class InstanceTooLarge(StairwordsError):
    pass


class ZeroModulus(StairwordsError, ValueError):
    pass


class InvalidState(StairwordsError, ValueError):
    pass


class InvalidParams(StairwordsError, ValueError):
    pass


class PoleAtOrigin(StairwordsError, ValueError):
    pass


class InsufficientTerms(StairwordsError, ValueError):
    pass


class DenominatorVanishes(StairwordsError):
    """The assembled closed form has an identically zero denominator."""


class NonzeroRadicalPart(StairwordsError):
    """A quantity expected to be rational kept a nonzero sqrt component."""


class UnsupportedL(StairwordsError, ValueError):
    pass


class SingularSystem(StairwordsError):
    pass


class LimitDoesNotCancel(StairwordsError):
    pass


class ParseError(StairwordsError, ValueError):
    pass
