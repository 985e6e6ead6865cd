"""Exception hierarchy.

Everything raised deliberately by the library derives from ``ExchangeUnivError`` so
the CLI can map it to the "input rejected" exit code.
"""


class ExchangeUnivError(Exception):
    """Base class for all library errors."""


class ParseError(ExchangeUnivError, ValueError):
    pass


class NotDecreasing(ParseError):
    pass


class SizeLimit(ExchangeUnivError):
    pass


class IndexOutOfRange(ExchangeUnivError, IndexError):
    pass


class DegreeMismatch(ExchangeUnivError, ValueError):
    pass


class Inconsistent(ExchangeUnivError, ValueError):
    """No standard tableau realizes the given content vector."""


class HypothesisViolated(ExchangeUnivError, ValueError):
    pass


class TrivialPartition(ExchangeUnivError, ValueError):
    """A one-dimensional (single row or single column) partition where a nontrivial one is required."""


class RowBound(ExchangeUnivError, ValueError):
    pass


class SingleMember(ExchangeUnivError, ValueError):
    pass


class BudgetExceeded(ExchangeUnivError):
    pass


class Degenerate(ExchangeUnivError):
    """A solution space that should be one-dimensional was not."""
