"""Exception types raised across the package."""


class CanonRieszError(ValueError):
    """Base class for all domain errors."""


class DetNotOne(CanonRieszError):
    def __init__(self, det):
        super().__init__(f"parameter matrix determinant is {det!r}, expected 1")
        self.det = det


class ZeroB(CanonRieszError):
    def __init__(self, msg="parameter matrix has b = 0 (delta-kernel branch is not supported)"):
        super().__init__(msg)


class ZeroC(CanonRieszError):
    def __init__(self, msg="sharpness b/c is undefined for c = 0"):
        super().__init__(msg)


class GridTooSmall(CanonRieszError):
    pass


class GridMismatch(CanonRieszError):
    pass


class HypothesisViolated(CanonRieszError):
    pass


class NotNormalized(CanonRieszError):
    pass


class DimensionMismatch(CanonRieszError):
    pass


class TooSmall(CanonRieszError):
    pass


class UnsupportedFormat(CanonRieszError):
    pass


class CorruptHeader(CanonRieszError):
    pass


class PayloadTruncated(CanonRieszError):
    pass


class ChannelMismatch(CanonRieszError):
    pass


class IoFailure(CanonRieszError, OSError):
    pass
