"""Exception types raised by the series and walk layers."""


class SeriesError(ArithmeticError):
    pass


class ZeroConstantTerm(SeriesError):
    """Division by a series whose constant term is zero."""


class NonSquareConstant(SeriesError):
    """Square root requested of a series whose constant term is not a rational square."""


class InexactCancellation(SeriesError):
    """A division by z**k was requested but a low coefficient is nonzero.

    Inside the kernel pipelines this always means the data fed in is
    inconsistent (a wrong formula or a perturbed boundary series).
    """


class NonzeroInnerConstant(SeriesError):
    pass


class NotRevertible(SeriesError):
    pass


class SingularSystem(SeriesError):
    """The 2x2 boundary system has a determinant that is not a unit."""


class ParityViolation(ValueError):
    pass


class CrossCheckError(ArithmeticError):
    """Two independent routes to the same quantity disagree."""
