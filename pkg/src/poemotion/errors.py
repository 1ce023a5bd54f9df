"""Exception types shared across the pipeline stages."""


class PoemotionError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(PoemotionError):
    """Malformed input line (bad column count, non-numeric field, ...)."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class TreeError(PoemotionError):
    """Dependency heads do not form a single rooted tree."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class RangeError(PoemotionError):
    """A numeric field lies outside its documented interval."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DomainError(PoemotionError):
    """Argument outside the function's numeric domain."""


class EmptyPoolError(PoemotionError):
    """The segment pool has no entries to rank."""


class RatioOutOfRangeError(PoemotionError):
    """keep_ratio must lie in (0, 1]."""


class EmptyInputError(PoemotionError):
    """An operation that needs at least one sample got an empty list."""


class NeutralQuadrantError(PoemotionError):
    """Stroke synthesis is undefined for the neutral quadrant."""


class DegeneratePathError(PoemotionError):
    """Stroke path too short or zero-length to build a contour."""


class ZeroAreaError(PoemotionError):
    """Contour polygon encloses (numerically) no area."""


class SchemaError(PoemotionError):
    """Stroke index fails validation (version, missing asset, invariant)."""


class EmptyQuadrantError(PoemotionError):
    """Stroke database holds no strokes for the requested quadrant."""


class ProtocolError(PoemotionError):
    """External scorer violated the wire protocol."""


class ScorerTimeoutError(PoemotionError):
    """External scorer did not answer within the configured timeout."""


class LaunchError(PoemotionError):
    """External scorer process could not be started."""


class PipelineError(PoemotionError):
    """Invalid pipeline configuration or stage-level failure."""
