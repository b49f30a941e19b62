"""Exception taxonomy for the toolkit.

Every error carries enough context in its message to identify the offending
input; check runners map hypothesis-style failures to SKIP verdicts and the
rest to ERROR.
"""


class SuperconError(Exception):
    """Base class for all toolkit errors."""


class NotInvertible(SuperconError):
    """Element shares a factor with the modulus."""


class NotCoprime(SuperconError):
    """Argument must be coprime to p."""


class NonResidue(SuperconError):
    """Quadratic non-residue where a square root was required."""


class ZeroInput(SuperconError):
    """Zero (mod p) where a unit or nonzero value was required."""


class DivisionByZero(SuperconError):
    """Division by an exact p-adic zero."""


class PrecisionExhausted(SuperconError):
    """Tracked p-adic precision fell below what the caller needs."""


class NegativeValuation(SuperconError):
    """Value has a pole at p; cannot be reduced to a residue."""


class NotRepresentable(SuperconError):
    """p has no representation x^2 + d*y^2."""


class RamifiedPrime(SuperconError):
    """p divides d; the form degenerates."""


class ConventionUnachievable(SuperconError):
    """Requested sign/parity convention cannot be met by any sign choice."""


class DenominatorDivisible(SuperconError):
    """Summation denominator m is divisible by p."""


class DiscriminantNonResidue(SuperconError):
    """Quadratic resolvent has no root mod p; instance must be skipped."""


class IndexOutOfRange(SuperconError):
    """Sequence index outside the range where the recurrence is invertible."""


class UnknownCheckId(SuperconError):
    """Check id not present in the registry."""
