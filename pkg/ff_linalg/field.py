"""Prime field arithmetic and modular multinomials.

Elements carry their modulus so mixing primes is caught early. Multinomial
coefficients are reduced digit-wise in base p (Lucas), so exponents of size
about p never produce big factorials.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Union

from sympy import isprime

from errors import FieldError

# Factorial tables above this size are not cached
FACTORIAL_TABLE_LIMIT: int = 1 << 16

IntLike = Union[int, "PrimeFieldElement"]


@lru_cache(maxsize=None)
def _validated_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or p < 2 or not isprime(p):
        raise FieldError(f"modulus {p!r} is not prime")
    return p


def require_prime(p: int) -> int:
    """Return p if it is prime.

    Raises:
        FieldError: If p is not a prime integer
    """
    return _validated_prime(p)


@dataclass(frozen=True, eq=False)
class PrimeFieldElement:
    """Element of F_p with canonical representative in [0, p)."""

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _coerce(self, other: IntLike) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldError(f"cannot combine elements of F_{self.p} and F_{other.p}")
            return other.value
        return int(other) % self.p

    def __add__(self, other: IntLike) -> "PrimeFieldElement":
        return PrimeFieldElement(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> "PrimeFieldElement":
        return PrimeFieldElement(self.value - self._coerce(other), self.p)

    def __rsub__(self, other: IntLike) -> "PrimeFieldElement":
        return PrimeFieldElement(self._coerce(other) - self.value, self.p)

    def __mul__(self, other: IntLike) -> "PrimeFieldElement":
        return PrimeFieldElement(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self) -> "PrimeFieldElement":
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, exponent: int) -> "PrimeFieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElement(pow(self.value, exponent, self.p), self.p)

    def __truediv__(self, other: IntLike) -> "PrimeFieldElement":
        divisor = PrimeFieldElement(self._coerce(other), self.p)
        return self * divisor.inverse()

    def inverse(self) -> "PrimeFieldElement":
        """Multiplicative inverse via Fermat's little theorem.

        Raises:
            ZeroDivisionError: If the element is zero
        """
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


@dataclass(frozen=True)
class PrimeField:
    """Validated F_p context.

    Example:
        field = PrimeField(7)
        field(10)  # 3 (mod 7)
    """

    p: int

    def __post_init__(self) -> None:
        require_prime(self.p)

    def __call__(self, value: int) -> PrimeFieldElement:
        return PrimeFieldElement(value, self.p)

    def inverse(self, value: int) -> int:
        """Inverse of a nonzero integer modulo p."""
        return int(self(value).inverse())


@lru_cache(maxsize=64)
def _factorial_table(p: int) -> List[int]:
    table = [1] * p
    for k in range(1, p):
        table[k] = table[k - 1] * k % p
    return table


def _factorial_mod(k: int, p: int) -> int:
    if p <= FACTORIAL_TABLE_LIMIT:
        return _factorial_table(p)[k]
    acc = 1
    for i in range(2, k + 1):
        acc = acc * i % p
    return acc


def _base_p_digits(value: int, p: int) -> List[int]:
    digits = []
    while value:
        value, r = divmod(value, p)
        digits.append(r)
    return digits


def multinomial_mod_p(parts: Sequence[int], p: int) -> PrimeFieldElement:
    """Compute (sum parts)! / prod(parts!) modulo p.

    Works one base-p digit at a time: a carry in any position makes the
    coefficient vanish (Kummer), and otherwise the coefficient is the
    product of the digit-level multinomials (Lucas).

    Args:
        parts: Nonnegative integers, at least one
        p: Prime modulus

    Returns:
        The multinomial coefficient as an element of F_p

    Raises:
        ValueError: If parts is empty or contains a negative entry
    """
    require_prime(p)
    if len(parts) == 0:
        raise ValueError("multinomial_mod_p needs at least one part")
    if any(k < 0 for k in parts):
        raise ValueError(f"parts must be nonnegative, got {tuple(parts)}")

    digit_rows = [_base_p_digits(int(k), p) for k in parts]
    width = max((len(row) for row in digit_rows), default=0)

    result = 1
    for position in range(width):
        column = [row[position] if position < len(row) else 0 for row in digit_rows]
        total = sum(column)
        if total >= p:
            return PrimeFieldElement(0, p)
        numerator = _factorial_mod(total, p)
        denominator = 1
        for digit in column:
            denominator = denominator * _factorial_mod(digit, p) % p
        result = result * numerator * pow(denominator, p - 2, p) % p
    return PrimeFieldElement(result, p)


def binomial_mod_p(n: int, k: int, p: int) -> PrimeFieldElement:
    """Binomial coefficient C(n, k) mod p; zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return PrimeFieldElement(0, p)
    return multinomial_mod_p((k, n - k), p)

