"""Exception types shared across the package."""


class AddBasisError(Exception):
    """Base class for all package errors."""


class HoleAboveThreshold(AddBasisError):
    """An exceptional element at or above the threshold disobeys the periodic
    rule. The representation cannot express holes above the threshold; raise
    the threshold first."""


class EmptyOperand(AddBasisError):
    """A sumset operand is empty."""


class EmptySet(AddBasisError):
    """Operation needs a nonempty set."""


class ModulusMismatch(AddBasisError):
    """Residue sets live in different groups Z/g."""


class PreconditionViolated(AddBasisError):
    """A stated precondition does not hold for the given arguments."""


class NotSaturable(AddBasisError):
    """No modulus g satisfies S ~ saturate_mod(S, g)."""


class FiniteSet(AddBasisError):
    """Operation needs an infinite set."""


class NotABasis(AddBasisError):
    """The set provably fails to be an additive basis (eventual gcd > 1 or
    bounded above)."""


class CapExceeded(AddBasisError):
    """No order was certified within the iteration cap. Never a claim that
    the set is not a basis."""

    def __init__(self, cap: int, message: str | None = None):
        self.cap = cap
        super().__init__(message or f"no order certified within cap {cap}")


class XNotSubset(AddBasisError):
    """The removal set is not contained in the base set."""


class ParseError(AddBasisError):
    """Corpus file is not syntactically valid."""


class ValidationError(AddBasisError):
    """Corpus entry violates a structural constraint."""


class UnknownFormat(AddBasisError):
    """Unsupported report format name."""
