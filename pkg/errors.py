"""Exception hierarchy for frobnil.

All library errors derive from FrobnilError so the CLI can map them to
exit status 1 in one place.
"""

from typing import Optional


class FrobnilError(Exception):
    """Base error for frobnil."""

    pass


class FieldError(FrobnilError):
    """Modulus is not prime, or operands live over different primes."""

    pass


class DimensionError(FrobnilError):
    """Matrix shapes do not fit the requested operation."""

    pass


class RingSpecError(FrobnilError):
    """Malformed hypersurface description or twist multiplier."""

    pass


class ProfileError(FrobnilError):
    """Profile document does not match the profile schema."""

    pass


class HypothesisError(FrobnilError):
    """A theorem hypothesis required by a calculator does not hold.

    Attributes:
        quantity: Name of the quantity that was requested
        hypothesis: The hypothesis that failed, quoted
    """

    def __init__(
        self, quantity: str, hypothesis: str, detail: Optional[str] = None
    ) -> None:
        self.quantity = quantity
        self.hypothesis = hypothesis
        message = f"{quantity}: hypothesis not satisfied: \"{hypothesis}\""
        if detail:
            message += f" ({detail})"
        super().__init__(message)
