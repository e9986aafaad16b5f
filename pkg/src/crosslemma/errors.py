"""Exception hierarchy shared by all modules."""


class CrossLemmaError(Exception):
    pass


class GeometryError(CrossLemmaError):
    pass


class NotClosed(GeometryError):
    pass


class NotSimple(GeometryError):
    pass


class InvariantViolation(CrossLemmaError):
    """A structural invariant of a drawing (or its file) does not hold.

    ``findings`` holds the validator entries when the violation comes from
    the general-position check.
    """

    def __init__(self, message, findings=()):
        super().__init__(message)
        self.findings = tuple(findings)


class InvalidDrawing(InvariantViolation):
    pass


class UnknownEdge(CrossLemmaError, KeyError):
    pass


class UnknownVertex(CrossLemmaError, KeyError):
    pass


class NotParallel(CrossLemmaError):
    pass


class StyleViolation(CrossLemmaError):
    pass


class MissingParameter(CrossLemmaError, ValueError):
    pass


class DomainError(CrossLemmaError, ValueError):
    pass


class NonContiguousGroups(CrossLemmaError):
    pass


class ClearanceViolation(CrossLemmaError):
    pass


class IterationLimitExceeded(CrossLemmaError):
    pass


class TooLargeForOracle(CrossLemmaError):
    pass


class NoFeasibleBipartition(CrossLemmaError):
    pass


class ResolutionTooCoarse(CrossLemmaError):
    pass


class GenerationFailed(CrossLemmaError):
    pass


class ParseError(CrossLemmaError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column
