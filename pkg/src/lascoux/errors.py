"""Exception hierarchy shared by all lascoux modules."""


class LascouxError(Exception):
    """Base class for every error raised by this package."""


class NonzeroRemainder(LascouxError, ArithmeticError):
    """Exact polynomial division left a remainder."""


class DuplicateAbscissa(LascouxError, ValueError):
    pass


class NonIntegerPsi(LascouxError, ArithmeticError):
    """The psi recursion produced a total not divisible by the set size."""


class UndefinedExtension(LascouxError, ValueError):
    """A two-index psi lookup outside the extended conventions."""


class InvalidIndexSet(LascouxError, ValueError):
    pass


class DegreeBoundViolated(LascouxError, ArithmeticError):
    """Interpolated Lascoux polynomial disagrees with a check point."""


class UnsupportedSize(LascouxError, ValueError):
    pass


class CacheFormatError(LascouxError, ValueError):
    def __init__(self, path, lineno, reason):
        super().__init__(f"{path}:{lineno}: {reason}")
        self.path = path
        self.lineno = lineno
        self.reason = reason
