"""Exception hierarchy shared by every module."""


class DeltaKoszulError(Exception):
    pass


class ValidationError(DeltaKoszulError):
    """A presentation that does not define a graded quotient."""


class NonHomogeneous(ValidationError):
    pass


class NonParallel(ValidationError):
    pass


class UnknownSymbol(ValidationError):
    pass


class CapTooSmall(DeltaKoszulError):
    pass


class HorizonExceeded(DeltaKoszulError):
    """Raised when a computation would need degrees beyond the truncation cap.

    ``step`` is the homological step that could not be certified (or None)
    and ``suggested_cap`` a cap that would make progress possible.
    """

    def __init__(self, message, step=None, suggested_cap=None):
        super().__init__(message)
        self.step = step
        self.suggested_cap = suggested_cap


class InsufficientRange(DeltaKoszulError):
    pass


class MissingD(DeltaKoszulError):
    pass


class BadN0(ValueError, DeltaKoszulError):
    pass


class BadD(ValueError, DeltaKoszulError):
    pass
