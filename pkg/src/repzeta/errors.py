"""Shared exception types.

Precondition violations raise plain ValueError throughout the package;
budget exhaustion gets its own type so callers (and the CLI exit-code
mapping) can tell the two apart.
"""


class BudgetExceededError(RuntimeError):
    """A configured enumeration or work budget was exceeded."""
