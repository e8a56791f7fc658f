"""Exceptions shared across the package."""


class InfeasibleSequenceError(ValueError):
    """Raised when an operation requires a feasible score sequence but the
    input fails the feasibility test."""


class AlgorithmInvariantError(RuntimeError):
    """Raised when an internal invariant of the reconstruction algorithm is
    violated.  Seeing this exception means a bug, not bad input."""


class EnumerationBudgetError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its work budget.

    The enumeration oracles refuse rather than return a partial answer.
    """
