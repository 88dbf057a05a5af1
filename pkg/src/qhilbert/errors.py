"""Exception hierarchy shared by every module."""


class QHilbertError(Exception):
    """Base class for library errors."""


class ContextMismatch(QHilbertError, ValueError):
    """Two field elements with square-root parts over different radicands."""


class DivisionByZero(QHilbertError, ZeroDivisionError):
    pass


class DegenerateDenominator(QHilbertError, ZeroDivisionError):
    """A product formula hit a vanishing denominator (q near a root of unity)."""


class RootOfUnity(QHilbertError, ValueError):
    """q is a root of unity of an order the computation cannot tolerate."""

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"q is a root of unity of order {order}")


class SingularMatrix(QHilbertError, ZeroDivisionError):
    pass


class CertificationError(QHilbertError, AssertionError):
    """An identity that must hold exactly did not. Always a bug."""


class BridgeViolation(CertificationError):
    pass


class IdentityViolation(CertificationError):
    pass
