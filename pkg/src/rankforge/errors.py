"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ``InvalidParameter`` and its relatives
exit with 2, ``BudgetExceeded`` with 3 and ``InconsistentInput`` with 4.
"""

from __future__ import annotations


class RankForgeError(Exception):
    """Base class for all library errors."""


class InvalidParameter(RankForgeError, ValueError):
    """A parameter violates an operation's precondition."""


class SpecMismatch(InvalidParameter):
    """Operands belong to different fields or ambient spaces."""


class NotABasis(InvalidParameter):
    """Elements that should form a basis are dependent or too few."""


class NotApplicable(InvalidParameter):
    """The hypothesis of a closed-form result does not hold for the input."""


class UndefinedDistance(InvalidParameter):
    """Minimum distance requested for a code with fewer than two words."""


class IncompleteFunction(InvalidParameter):
    """A lattice function is missing a value it needs."""


class FieldZeroDivision(RankForgeError, ZeroDivisionError):
    """Inversion of the zero element."""


class BudgetExceeded(RankForgeError):
    """An enumeration would visit more objects than the configured budget."""


class InconsistentInput(RankForgeError, ValueError):
    """Input data cannot come from a valid code (non-integral or bad checksum)."""
