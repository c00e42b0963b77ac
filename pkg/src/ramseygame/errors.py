"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """A graph description could not be parsed; the message names the offending token."""


class DomainError(ValueError):
    """An operation was called outside its stated domain."""


class BudgetExceededError(RuntimeError):
    """An exact computation exceeded its configured budget."""
