"""Exception hierarchy shared by every module of the package."""


class FreeConvError(ValueError):
    """Base class; all errors are ValueErrors so callers can catch broadly."""


class DegreeExceedsAmbient(FreeConvError):
    pass


class ZeroPolynomial(FreeConvError):
    pass


class EndpointIsRoot(FreeConvError):
    pass


class NotRealRooted(FreeConvError):
    pass


class DegreeMismatch(FreeConvError):
    pass


class DegreeZero(FreeConvError):
    pass


class NonpositiveOmega(FreeConvError):
    pass


class LengthMismatch(FreeConvError):
    pass


class CrossingPinch(FreeConvError):
    pass


class UnsupportedSize(FreeConvError):
    pass


class IndexOutOfRange(FreeConvError):
    pass


class DegreeDeficient(FreeConvError):
    pass


class PreconditionNotCertified(FreeConvError):
    pass


class DegreeConditionViolated(FreeConvError):
    pass


class SingleDistinctRoot(FreeConvError):
    pass


class MuOutOfRange(FreeConvError):
    pass


class IrrationalPivot(FreeConvError):
    """The pinch pivots (largest root and the next distinct one) are not rational."""


class GammaMismatch(FreeConvError):
    pass


class NotMultiaffine(FreeConvError):
    pass


class StabilityNotCertified(FreeConvError):
    pass


class PoleAtPoint(FreeConvError):
    pass


class UnknownStatement(FreeConvError):
    pass


class ParseError(FreeConvError):
    pass
