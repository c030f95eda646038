"""Exception hierarchy.

Every error raised by the library derives from :class:`MinRankError`.
``ResourceLimit`` subclasses mark refusals caused by enumeration caps; the
CLI maps those to exit code 3 and everything else to exit code 2.
"""


class MinRankError(Exception):
    """Base class for all library errors."""


class ResourceLimit(MinRankError):
    """An enumeration would exceed its configured cap."""


class Singular(MinRankError):
    pass


class Inconsistent(MinRankError):
    pass


class DimensionMismatch(MinRankError):
    pass


class NotStaircase(MinRankError):
    pass


class NotBanded(MinRankError):
    pass


class TooLarge(ResourceLimit):
    pass


class TooManyAssignments(ResourceLimit):
    pass


class FieldNotFinite(MinRankError):
    pass


class NoCover(MinRankError):
    pass


class OverlapSingular(MinRankError):
    pass


class IncompleteCoverLines(MinRankError):
    pass


class SpecifiedOutsideCover(MinRankError):
    pass


class CoverFillFailed(MinRankError):
    pass


class BadPartition(MinRankError):
    pass


class BadSplit(MinRankError):
    pass


class NotLowerTriangularPattern(MinRankError):
    pass


class RegionRankTooHigh(MinRankError):
    pass


class NotHessenberg(MinRankError):
    pass


class DegenerateField(MinRankError):
    pass


class ConsistencyError(MinRankError):
    """Two independent computations that must agree did not.

    Raised only when a theorem-backed identity fails, which points at a bug.
    """


class ParseError(MinRankError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class FieldMismatch(ParseError):
    pass


class BadDimensions(ParseError):
    pass
