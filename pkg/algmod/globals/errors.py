"""Exceptions raised by the algmod engines.

Value-like problems (bad input data) derive from ValueError, failures of a
randomised or budgeted computation derive from RuntimeError. Every class
also derives from AlgmodError so the command line can catch them together.
"""


class AlgmodError(Exception):
    pass


# ---------------------------------------------------------------- input errors


class NotPrime(AlgmodError, ValueError):
    pass


class ReduciblePoly(AlgmodError, ValueError):
    pass


class SizeOverflow(AlgmodError, ValueError):
    pass


class FieldMismatch(AlgmodError, ValueError):
    pass


class NotSquare(AlgmodError, ValueError):
    pass


class SizeMismatch(AlgmodError, ValueError):
    pass


class ZeroPoly(AlgmodError, ValueError):
    pass


class GroupMismatch(AlgmodError, ValueError):
    pass


class BadWord(AlgmodError, ValueError):
    pass


class ExponentTooLarge(AlgmodError, ValueError):
    pass


class NoRealization(AlgmodError, ValueError):
    pass


class NotPGroup(AlgmodError, ValueError):
    pass


class OrderCapExceeded(AlgmodError, ValueError):
    pass


class LevelOutOfRange(AlgmodError, ValueError):
    pass


class MissingPIM(AlgmodError, ValueError):
    pass


class NotKleinFour(AlgmodError, ValueError):
    pass


class OutOfRange(AlgmodError, ValueError):
    pass


class SizeCap(AlgmodError, ValueError):
    pass


class ParseError(AlgmodError, ValueError):
    def __init__(self, msg: str, line: int = 0) -> None:
        self.line = line
        if line:
            msg = "line {}: {}".format(line, msg)
        super().__init__(msg)


# -------------------------------------------------------- computation failures


class CertificationFailed(AlgmodError, RuntimeError):
    pass


class IsoUnknown(AlgmodError, RuntimeError):
    pass


class CharMismatch(AlgmodError, RuntimeError):
    pass


class NegativeCoefficient(AlgmodError, RuntimeError):
    pass


class BudgetExceeded(AlgmodError, RuntimeError):
    pass
