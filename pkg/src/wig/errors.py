"""Exception hierarchy shared by every module in the package."""


class WigError(Exception):
    """Base class for all errors raised by wig."""


class InvalidInput(WigError, ValueError):
    """A representation or argument violates its contract."""


class InvalidVertex(InvalidInput, IndexError):
    """A vertex id outside 1..n."""


class NotConnected(InvalidInput):
    """A cactus edge list whose underlying graph is not connected."""


class NotCactus(InvalidInput):
    """A block that is neither a single edge nor a simple cycle."""


class BadWeight(InvalidInput):
    """An edge weight that is not an integer >= 1."""


class ParseError(InvalidInput):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class DisconnectedGraph(WigError):
    """The Wiener index is undefined because some pair is unreachable."""


class WienerOverflow(WigError, OverflowError):
    pass


class GenerationFailed(WigError):
    pass
