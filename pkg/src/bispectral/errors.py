"""Exception types raised across the engine."""


class BispectralError(Exception):
    """Base class for all engine errors."""


class ZeroVector(BispectralError):
    pass


class NotDivisible(BispectralError):
    """Exact division failed; carries the nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NotHolomorphic(NotDivisible):
    """A difference operator produced a pole on an input that was supposed
    to satisfy the quasi-invariance conditions."""


class InvalidParams(BispectralError):
    pass


class TooLarge(BispectralError):
    pass


class NotMinuscule(BispectralError):
    pass


class UnsupportedFamily(BispectralError):
    pass


class ChainDegreeViolation(BispectralError):
    pass


class NonzeroTail(BispectralError):
    pass


class NormalizerMismatch(BispectralError):
    pass


class RecurrenceMismatch(BispectralError):
    pass


class NotInRing(BispectralError):
    pass
