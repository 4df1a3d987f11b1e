"""Exception types raised across the package."""


class LechError(Exception):
    """Base class for every error raised by lechlab."""

    kind = "LechError"

    def to_dict(self):
        return {"error": self.kind, "message": str(self)}


class InvalidGenerator(LechError):
    kind = "InvalidGenerator"


class InvalidPoint(LechError):
    kind = "InvalidPoint"


class ZeroIdeal(LechError):
    kind = "ZeroIdeal"


class RingMismatch(LechError):
    kind = "RingMismatch"


class BaseMismatch(RingMismatch):
    kind = "BaseMismatch"


class InfiniteColength(LechError):
    kind = "InfiniteColength"


class NotNormal(LechError):
    kind = "NotNormal"


class InvalidRing(LechError):
    kind = "InvalidRing"


class NotStabilized(LechError):
    kind = "NotStabilized"

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class NonIntegerResult(LechError):
    kind = "NonIntegerResult"


class DimensionUnsupported(LechError):
    kind = "DimensionUnsupported"


class HypothesisNotMet(LechError):
    kind = "HypothesisNotMet"


class BadGeneratorChoice(LechError):
    kind = "BadGeneratorChoice"


class ParseError(LechError):
    """Malformed ideal expression; ``position`` is a 0-based column."""

    kind = "SyntaxError"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position

    def to_dict(self):
        d = super().to_dict()
        d["position"] = self.position
        return d


class UnknownVariable(ParseError):
    kind = "UnknownVariable"


class ExponentOverflow(ParseError):
    kind = "ExponentOverflow"
