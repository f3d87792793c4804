"""Frobenius test exponent bounds as binomially weighted HSL sums."""

from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Union

from fmodule_calculus import HslValue, exponent_escaping

HslLike = Union[int, HslValue, None]


def f_exp(a_j: Optional[int], p: int) -> int:
    """Least e with p^e > a_j; None stands for a_j = -infinity.

    Classes of positive degree at most a_j die after this many steps.
    """
    if a_j is None or a_j < 1:
        return 0
    return exponent_escaping(a_j, p)


def least_exponent_reaching(target: Union[int, Fraction], p: int) -> int:
    """Least e with p^e >= target (0 when target <= 1)."""
    e = 0
    while p**e < target:
        e += 1
    return e


def binomial_sum(values: Sequence[HslLike], d: int, start: int = 0, stop: Optional[int] = None) -> HslValue:
    """Sum of C(d, j) * values[j] for start <= j <= stop.

    Entries missing from values count as 0. Unknown entries make the sum
    unknown; upper bounds make it an upper bound.
    """
    stop = d if stop is None else stop
    total = HslValue.exact(0)
    for j in range(start, stop + 1):
        raw = values[j] if 0 <= j < len(values) else 0
        total = total + HslValue.coerce(raw).scale(comb(d, j))
    return total


def quy_fte_bound(h: Sequence[HslLike], d: int) -> HslValue:
    """Fte R <= sum_j C(d, j) h_j for a weakly F-nilpotent R of dimension d.

    Raises:
        ValueError: If the list does not have d + 1 entries
    """
    if len(h) != d + 1:
        raise ValueError(f"expected {d + 1} HSL values, got {len(h)}")
    return binomial_sum(h, d)


def maddox_e1(d: int, n: int, p: int) -> int:
    """Least e with p^e >= 2^(d-1) * N."""
    if n < 0:
        raise ValueError(f"N must be nonnegative, got {n}")
    return least_exponent_reaching(Fraction(2) ** (d - 1) * n, p)


def maddox_fte_bound(h: Sequence[HslLike], d: int, n: int, p: int) -> HslValue:
    """Fte R <= e_1 + sum_j C(d, j) h_j for a generalized weakly F-nilpotent R."""
    return quy_fte_bound(h, d) + HslValue.exact(maddox_e1(d, n, p))
