"""Exception hierarchy shared by the library and the command-line tool.

Each library error maps to a stable process exit code so shell callers can
distinguish bad input, oversized requests, and numerical failures.
"""


class QaflowError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class GraphFormatError(QaflowError):
    """Malformed graph input: bad JSON, bad fields, or invalid edges."""

    exit_code = 2


class BudgetError(QaflowError):
    """Request exceeds a hard size budget (vertex count, matrix dimension)."""

    exit_code = 3


class NumericalError(QaflowError):
    """A numerical routine failed or produced an inconsistent result."""

    exit_code = 4


class DegenerateGapError(NumericalError):
    """The reference line for the intersection index cannot be placed
    because the final Hamiltonian has no gap above its ground manifold."""
