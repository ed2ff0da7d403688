"""Exception types raised by mixedmoore."""


class MixedMooreError(Exception):
    """Base class for all library errors."""


class NotPrimePower(MixedMooreError, ValueError):
    pass


class DivisionByZero(MixedMooreError, ZeroDivisionError):
    pass


class EvenQ(MixedMooreError, ValueError):
    pass


class TOutOfRange(MixedMooreError, ValueError):
    pass


class DegreeTooSmall(MixedMooreError, ValueError):
    pass


class VertexNotFound(MixedMooreError, KeyError):
    pass


class MalformedFile(MixedMooreError, ValueError):
    pass


class CertificateFailure(MixedMooreError, RuntimeError):
    pass
