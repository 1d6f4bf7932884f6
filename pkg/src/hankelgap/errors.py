"""Exception hierarchy shared by all hankelgap modules."""


class HankelGapError(ValueError):
    """Base class for every error raised by this package."""


class DuplicateRoot(HankelGapError):
    pass


class ZeroPolynomial(HankelGapError):
    pass


class NotSquareFree(HankelGapError):
    pass


class NotEven(HankelGapError):
    pass


class NotHermitian(HankelGapError):
    pass


class NotEnoughSums(HankelGapError):
    pass


class NotRealRooted(HankelGapError):
    """The Hankel determinant ladder does not have the sign pattern of a
    polynomial whose roots are all real."""

    def __init__(self, message, index=None, value=None):
        super().__init__(message)
        self.index = index
        self.value = value


class InconsistentRank(HankelGapError):
    pass


class SingularHankel(HankelGapError):
    pass


class MultiplicityUnresolved(HankelGapError):
    pass


class TooFewRoots(HankelGapError):
    pass


class PoleHit(HankelGapError):
    pass


class ZeroEpsilon(HankelGapError):
    pass


class NegativeRadicand(HankelGapError):
    pass


class BadDegree(HankelGapError):
    pass


class BadEpsilon(HankelGapError):
    pass


class InternalInvariantError(HankelGapError):
    """Two independent computation paths disagreed, or a proven invariant
    was violated. Always a bug, never a user error."""
