"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GaloisHullError(Exception):
    """Base class for all errors raised by galois_hull."""


# finite fields
class NotPrime(GaloisHullError, ValueError):
    pass


class ReducibleModulus(GaloisHullError, ValueError):
    pass


class DegreeMismatch(GaloisHullError, ValueError):
    pass


class FieldMismatch(GaloisHullError, TypeError):
    pass


class NotASubfield(GaloisHullError, ValueError):
    pass


class DivisionByZero(GaloisHullError, ZeroDivisionError):
    pass


# linear algebra
class NotSquare(GaloisHullError, ValueError):
    pass


class AmbientMismatch(GaloisHullError, ValueError):
    pass


class Singular(GaloisHullError, ValueError):
    pass


# codes
class ZeroCode(GaloisHullError, ValueError):
    pass


class SOutOfRange(GaloisHullError, ValueError):
    pass


class LengthMismatch(GaloisHullError, ValueError):
    pass


class InternalInvariantViolation(GaloisHullError, AssertionError):
    """A mathematically guaranteed property failed; always indicates a bug."""


class RequiresExactDistance(GaloisHullError, ValueError):
    pass


# constructions
class RootOrderMismatch(GaloisHullError, ValueError):
    pass


class EvenExponent(GaloisHullError, ValueError):
    pass


class NotClosedUnderFrobenius(GaloisHullError, ValueError):
    pass


class CoefficientsNotInBaseField(GaloisHullError, ValueError):
    pass


class NotABasis(GaloisHullError, ValueError):
    pass


class NotExists(GaloisHullError, LookupError):
    pass


class SearchBudgetExceeded(GaloisHullError, RuntimeError):
    pass


class NotFRR(GaloisHullError, ValueError):
    pass


class GramNotDiagonal(GaloisHullError, ValueError):
    pass


class ClosureEnlarged(UserWarning):
    """Emitted when a defining set had to be enlarged to become q-closed."""


# eaqec
class NotLCD(GaloisHullError, ValueError):
    pass


class PreconditionViolated(GaloisHullError, ValueError):
    pass


class BranchAmbiguous(GaloisHullError, ValueError):
    pass


# cli / catalog
class RecipeInvalid(GaloisHullError, ValueError):
    """``path`` names the offending recipe field, e.g. ``constituents[1].n``."""

    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class CatalogCorrupt(GaloisHullError, ValueError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
