#!/usr/bin/env python3
"""
Exception hierarchy for braidrep.

Every exception carries the process exit code the CLI uses for it:
2 for bad input, 3 for an exceeded computation cap, 4 for an internal
algebraic inconsistency.
"""


class BraidRepError(Exception):
    """Base class for all braidrep errors."""

    exit_code = 1


class InputError(BraidRepError):
    exit_code = 2


class BraidSyntaxError(InputError):
    """A braid word token does not match 'sK' or 'sK^-1'."""


class IndexOutOfRangeError(InputError):
    """A generator index or tensor site lies outside the allowed range."""


class ParityError(InputError):
    """An odd/even constraint on strands or rank is violated."""


class ParameterMismatchError(InputError):
    """Elements of groups with different (m, nu) were combined."""


class CapExceededError(BraidRepError):
    """A configured computation cap was exceeded."""

    exit_code = 3

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what}={value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class AlgebraError(BraidRepError):
    exit_code = 4


class DimensionMismatchError(AlgebraError):
    pass


class SingularMatrixError(AlgebraError):
    pass


class InvariantMismatchError(AlgebraError):
    """An internal consistency check failed (e.g. J4 depends on alpha)."""


def check_cap(what: str, value: int, cap: int) -> None:
    """Raise CapExceededError when value > cap."""
    if value > cap:
        raise CapExceededError(what, value, cap)
