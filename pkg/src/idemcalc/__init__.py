"""Universal semiring algorithms.

One set of routines (matrix products, closures, Bellman solvers, integrals,
the Legendre transform) that runs over max-plus, min-plus, max-min, the
ordinary reals, the deformed log-sum-exp algebra, or idempotent intervals,
depending only on the :class:`~idemcalc.semirings.Semiring` passed in.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AlgebraError,
    DimensionMismatch,
    DomainError,
    GridMismatch,
    NonStabilizing,
    ParseError,
    SemiringMismatch,
    StarUndefined,
    UnknownNode,
    UnsupportedOperation,
)
from .semirings import (  # noqa: E402
    FIELD,
    INTERVAL_MAX_PLUS,
    INTERVAL_MIN_PLUS,
    MAX_MIN,
    MAX_PLUS,
    MIN_PLUS,
    Interval,
    Semiring,
    deformed,
    parse_semiring,
)
from .matrices import Matrix  # noqa: E402

__all__ = [
    "AlgebraError", "DimensionMismatch", "DomainError", "GridMismatch", "NonStabilizing",
    "ParseError", "SemiringMismatch", "StarUndefined", "UnknownNode", "UnsupportedOperation",
    "FIELD", "INTERVAL_MAX_PLUS", "INTERVAL_MIN_PLUS", "MAX_MIN", "MAX_PLUS", "MIN_PLUS",
    "Interval", "Semiring", "deformed", "parse_semiring", "Matrix",
]
