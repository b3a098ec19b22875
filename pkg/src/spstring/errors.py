"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class SPStringError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SPStringError):
    """Malformed input file; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphFormatError(ParseError):
    pass


class RepresentationFormatError(ParseError):
    pass


class NotBiconnected(SPStringError):
    pass


class NotSeriesParallel(SPStringError):
    pass


class NotSeparationPair(SPStringError):
    pass


class InstanceTooLarge(SPStringError):
    pass


class ShapeViolation(SPStringError):
    """A light component matched none of the three admissible shapes."""


class TransitiveEdgesPresent(SPStringError):
    def __init__(self, edges) -> None:
        self.edges = sorted(edges)
        super().__init__(f"graph has transitive edges: {self.edges}")


class TooHeavy(SPStringError):
    """The graph has a separation pair with three or more heavy components."""

    def __init__(self, poles, lengths) -> None:
        self.poles = poles
        self.lengths = list(lengths)
        super().__init__(
            f"separation pair {poles} has {sum(x > 3 for x in self.lengths)} heavy components "
            f"(pole-path lengths {self.lengths})"
        )


class NoSeparationPair(SPStringError):
    pass


class NotInduced(SPStringError):
    pass


class NestingViolation(SPStringError):
    pass


class InsertionFailure(SPStringError):
    pass


class DegeneratePosition(SPStringError):
    pass


class VertexMismatch(SPStringError):
    pass
