"""Exception types shared across the package."""


class RskError(Exception):
    """Base class for all errors raised by rsklab."""


class InputError(RskError, ValueError):
    """Malformed or inconsistent user input (bad index, bad file, bad flag)."""


class CapacityError(RskError):
    """An exhaustive operation was asked to exceed the configured size bound."""


class PreconditionError(RskError):
    """An operation was applied outside its stated domain."""


class NoWitnessError(RskError):
    """A witness construction was requested for a relation that has no violation."""
