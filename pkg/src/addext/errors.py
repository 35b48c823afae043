"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`AddExtError`, so callers (and the CLI) can separate mathematical
refusals from programming mistakes.
"""


class AddExtError(Exception):
    pass


# field construction
class NotPrime(AddExtError, ValueError):
    pass


class Reducible(AddExtError, ValueError):
    pass


class DegreeMismatch(AddExtError, ValueError):
    pass


class DivisionByZero(AddExtError, ZeroDivisionError):
    pass


# shapes
class LengthMismatch(AddExtError, ValueError):
    pass


class AmbientMismatch(AddExtError, ValueError):
    pass


class ShapeMismatch(AddExtError, ValueError):
    pass


class FieldMismatch(AddExtError, ValueError):
    pass


# enumeration guards
class TooLarge(AddExtError):
    pass


class BudgetExceeded(AddExtError):
    pass


# codes
class DependentRows(AddExtError, ValueError):
    pass


class EmptyCode(AddExtError, ValueError):
    pass


class EmptyIndexSet(AddExtError, ValueError):
    pass


class DuplicatePoints(AddExtError, ValueError):
    pass


class BadDimensions(AddExtError, ValueError):
    pass


class NoProperExtension(AddExtError, ValueError):
    pass


# decisions
class NotAnIsometry(AddExtError):
    pass


class CriterionFails(AddExtError):
    pass


class Degenerate(AddExtError, ValueError):
    pass


class HypothesisViolated(AddExtError, ValueError):
    pass


class MalformedInput(AddExtError, ValueError):
    """Input file does not follow the documented JSON layout."""
