"""Exception types shared across the package.

Every error raised on purpose derives from LboError so the CLI can map
library failures to exit codes uniformly.
"""


class LboError(Exception):
    pass


class ParseError(LboError):
    """Malformed table / diagram / partition syntax."""


class RangeError(LboError):
    """A table entry lies outside 0..n-1."""


class OrderMismatch(LboError):
    """Two tables of different order where equal order is required."""


class DegreeMismatch(LboError):
    """Tuple length does not match the requested chain degree."""


class IneligibleTable(LboError):
    """Table does not satisfy the axioms required by the chosen theory."""


class NotAZero(LboError):
    """Degeneracy maps need a two-sided zero element."""


class ResourceLimit(LboError):
    """A configured size cap (matrix columns, diagram strands) was exceeded."""


class Unsupported(LboError):
    """Requested exhaustive search is too large by design."""


class StrandMismatch(LboError):
    """Diagrams with different strand counts cannot be composed."""


class PartitionMismatch(LboError):
    """Partition does not sum to the diagram's strand count."""


class InvalidPartition(LboError):
    """Partition violates the parts <= 3 requirement of the sub-monoid family."""


class NotClosed(LboError):
    """A diagram set is not closed under composition."""


class UnknownFormat(LboError):
    """Unknown export format name."""
