"""Exception hierarchy for the torsion computations."""


class TorsionError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(TorsionError, ValueError):
    """The surgery triple (p, q, n) violates the torus-knot hypotheses."""


class NonOdd(ParameterError):
    pass


class NonCoprime(ParameterError):
    pass


class NonPositive(ParameterError):
    pass


class InvalidPair(TorsionError, ValueError):
    """(a, b) is not an admissible odd pair for the knot."""


class NonAcyclicRep(TorsionError, ValueError):
    pass


class UnsupportedKnot(TorsionError, ValueError):
    pass


class InexactDivision(TorsionError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class OddTermPresent(TorsionError, ValueError):
    pass


class DegenerateDenominator(TorsionError, ArithmeticError):
    pass


class SizeMismatch(TorsionError, AssertionError):
    pass


class PrecisionExhausted(TorsionError, ArithmeticError):
    """Certified integer rounding failed at every precision up to the cap.

    ``index`` and ``value`` identify the worst coefficient at the last level
    tried.
    """

    def __init__(self, message, index=None, value=None, precision_bits=None):
        super().__init__(message)
        self.index = index
        self.value = value
        self.precision_bits = precision_bits
