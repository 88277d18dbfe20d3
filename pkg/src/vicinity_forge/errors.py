"""Exception hierarchy.

``UsageError`` means the caller asked for something inconsistent (bad flag
combination, bad configuration); ``DataError`` means an input file or value
is malformed.  The CLI maps these onto distinct exit codes.
"""


class VicinityForgeError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(VicinityForgeError):
    """Invalid configuration or flag combination."""


class DataError(VicinityForgeError):
    """Malformed or inconsistent input data."""


class CorpusError(DataError):
    """Corpus file violates the JSONL schema or an invariant."""


class EmbeddingError(DataError):
    """Embedding table file or vector input is invalid."""


class DimensionMismatch(EmbeddingError):
    """Vectors of incompatible dimension were combined or compared."""


class ZeroVector(EmbeddingError):
    """An operation that needs a direction received the zero vector."""


class DegenerateAngle(VicinityForgeError):
    """The two parent vectors are colinear, so no angle-based blend exists."""


class OutOfRangeTheta(VicinityForgeError):
    """Requested target angle lies outside the open interval (0, alpha)."""


class ExhaustedPairs(VicinityForgeError):
    """More schedule iterations requested than distinct pairings exist."""


class SplitError(DataError):
    """Few-shot split cannot produce at least one instance per domain."""


class UndefinedCorrelation(VicinityForgeError):
    """Pearson correlation is undefined (a constant series)."""


class StatsError(DataError):
    """Statistics input is empty or structurally invalid."""


class ReconstructorError(VicinityForgeError):
    """A mask-filling backend failed or returned a malformed response."""
