"""Exception hierarchy shared by every module of the package."""


class PfaffError(Exception):
    """Base class for all errors raised by pfaffcubic."""


class DivisionByZero(PfaffError, ZeroDivisionError):
    pass


class FieldMismatch(PfaffError, ValueError):
    pass


class ReducibleModulus(PfaffError, ValueError):
    pass


class DegreeCapExceeded(PfaffError):
    pass


class ZeroPolynomial(PfaffError, ValueError):
    pass


class ZeroForm(PfaffError, ValueError):
    pass


class NotHomogeneous(PfaffError, ValueError):
    pass


class SingularMatrix(PfaffError, ValueError):
    pass


class DegenerateLine(PfaffError):
    """The line meets the surface only at the base point, or lies on it."""


class OddSize(PfaffError, ValueError):
    pass


class NotSkew(PfaffError, ValueError):
    pass


class WrongSize(PfaffError, ValueError):
    pass


class VerificationFailed(PfaffError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotGeneralPosition(PfaffError, ValueError):
    pass


class PointNotOnSurface(PfaffError, ValueError):
    pass


class SingularPoint(PfaffError, ValueError):
    pass


class TPointStart(PfaffError):
    pass


class SearchExhausted(PfaffError):
    def __init__(self, message, log=None):
        super().__init__(message)
        self.log = list(log or [])


class NotCubic(PfaffError, ValueError):
    pass


class FactorMismatch(PfaffError, ValueError):
    pass
