"""Exception types raised by detourlab."""

from __future__ import annotations


class DetourLabError(Exception):
    """Base class for all detourlab errors."""


class InvalidVertex(DetourLabError):
    """A vertex id is outside 0..n-1."""


class InvalidEdge(DetourLabError):
    """An edge argument does not exist in the graph (or is degenerate)."""


class LoopRejected(DetourLabError):
    """Self-loops are not representable."""


class OrderCapExceeded(DetourLabError):
    """Graph order above the fixed word-size cap."""


class EmptyGraph(DetourLabError):
    """Operation undefined on the order-0 graph."""


class TooSmall(DetourLabError):
    """Graph below the minimum order for the requested property."""


class InvalidParameter(DetourLabError):
    """Parameter outside its documented domain."""


class InvalidSpec(DetourLabError):
    """Inconsistent search specification."""


class CheckpointMismatch(DetourLabError):
    """Checkpoint file does not belong to this search specification."""


class ParseError(DetourLabError):
    """Malformed graph6 input.

    `offset` is the byte offset of the offending character within the
    input string handed to the decoder.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
