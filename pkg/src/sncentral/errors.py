"""Exception types raised by the library."""


class ContractViolation(ValueError):
    """An operation was called with arguments outside its precondition."""


class DomainError(ValueError):
    """A closed-form formula was asked for a value outside its stated range."""


class IntegralityError(ArithmeticError):
    """An exact division left a remainder, or a multiplicity came out negative.

    Inner products of characters are integers, so this always means a bug
    upstream rather than bad input.
    """


class CacheConsistencyError(RuntimeError):
    """Two writers stored different values under the same memo key."""
