"""Exception hierarchy for rank-metric coding operations."""


class RankCodeError(Exception):
    """Base class for all errors raised by this package."""


class NoSolution(RankCodeError):
    pass


class InvalidEpsilon(RankCodeError, ValueError):
    pass


class InvalidDimension(RankCodeError, ValueError):
    pass


class UnsupportedParity(RankCodeError, ValueError):
    pass


class SamplingFailed(RankCodeError):
    pass


class Inconsistent(RankCodeError):
    """The key equation has no solution for the requested error rank."""


class NullityTooHigh(RankCodeError):
    """The key equation solution space has dimension two or more."""


class DecodeFailure(RankCodeError):
    pass


class DecodeAmbiguous(RankCodeError):
    """Two or more candidates passed every verification gate.

    ``candidates`` holds one :class:`~mrdcodes.decoders.DecodeReport` per
    surviving candidate.
    """

    def __init__(self, message, candidates):
        super().__init__(message)
        self.candidates = candidates


class CapacityExceeded(RankCodeError, ValueError):
    pass


class TooLarge(RankCodeError, ValueError):
    pass
