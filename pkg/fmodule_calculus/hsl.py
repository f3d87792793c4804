"""HSL numbers with explicit exactness.

An HSL value is exact, an upper bound, or unknown. Arithmetic keeps the
weakest status of its inputs, so an upper bound is never reported as exact.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union

from fmodule_calculus.nilsupport import DegreeSupport


class HslKind(str, Enum):
    EXACT = "exact"
    UPPER = "upper"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class HslValue:
    """Hartshorne-Speiser-Lyubeznik number or a bound for it."""

    kind: HslKind
    value: Optional[int] = None

    def __post_init__(self) -> None:
        kind = HslKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind == HslKind.UNKNOWN:
            object.__setattr__(self, "value", None)
        elif self.value is None or self.value < 0:
            raise ValueError(f"{kind.value} HSL value needs a nonnegative integer")

    @classmethod
    def exact(cls, value: int) -> "HslValue":
        return cls(kind=HslKind.EXACT, value=value)

    @classmethod
    def upper(cls, value: int) -> "HslValue":
        # HSL <= 0 pins the value
        if value == 0:
            return cls(kind=HslKind.EXACT, value=0)
        return cls(kind=HslKind.UPPER, value=value)

    @classmethod
    def unknown(cls) -> "HslValue":
        return cls(kind=HslKind.UNKNOWN)

    @classmethod
    def coerce(cls, value: Union[int, "HslValue", None]) -> "HslValue":
        """Accept plain ints (exact) and None (unknown)."""
        if isinstance(value, HslValue):
            return value
        if value is None:
            return cls.unknown()
        return cls.exact(int(value))

    @property
    def is_exact(self) -> bool:
        return self.kind == HslKind.EXACT

    @property
    def is_known(self) -> bool:
        return self.kind != HslKind.UNKNOWN

    def weakened(self) -> "HslValue":
        """The same number, demoted to an upper bound."""
        if self.kind == HslKind.EXACT:
            return HslValue.upper(self.value)
        return self

    def __add__(self, other: "HslValue") -> "HslValue":
        other = HslValue.coerce(other)
        if not (self.is_known and other.is_known):
            return HslValue.unknown()
        total = self.value + other.value
        if self.is_exact and other.is_exact:
            return HslValue.exact(total)
        return HslValue.upper(total)

    def scale(self, factor: int) -> "HslValue":
        if not self.is_known:
            return self
        return HslValue(kind=self.kind, value=self.value * factor) if factor else HslValue.exact(0)

    def __str__(self) -> str:
        if self.kind == HslKind.UNKNOWN:
            return "unknown"
        return str(self.value) if self.is_exact else f"<= {self.value}"


def hsl_max(values: Iterable[Union[int, HslValue]]) -> HslValue:
    """Maximum of HSL values; exact only if every input is exact.

    This is the HSL number of a finite direct sum.
    """
    items = [HslValue.coerce(v) for v in values]
    if not items:
        return HslValue.exact(0)
    if any(not v.is_known for v in items):
        return HslValue.unknown()
    top = max(v.value for v in items)
    if all(v.is_exact for v in items):
        return HslValue.exact(top)
    return HslValue.upper(top)


def hsl_direct_sum(values: Iterable[Union[int, HslValue]]) -> HslValue:
    """HSL of a finite direct sum of the given summands."""
    return hsl_max(values)


def hsl_min(values: Iterable[Union[int, HslValue]]) -> HslValue:
    """Minimum of bounds; an upper bound on any input bounds the minimum."""
    items = [HslValue.coerce(v) for v in values]
    known = [v for v in items if v.is_known]
    if not known:
        return HslValue.unknown()
    smallest = min(v.value for v in known)
    if len(known) == len(items) and all(v.is_exact for v in items):
        return HslValue.exact(smallest)
    return HslValue.upper(smallest)


def hsl_ses_bound(a: HslValue, c: HslValue, split: bool = False) -> HslValue:
    """HSL of the middle term B of 0 -> A -> B -> C -> 0.

    Args:
        a: HSL of A
        c: HSL of C
        split: The sequence splits, so HSL B = max(HSL A, HSL C)
    """
    a, c = HslValue.coerce(a), HslValue.coerce(c)
    if split:
        return hsl_max([a, c])
    total = a + c
    return total.weakened() if total.is_known else total


def exponent_escaping(bound: int, p: int) -> int:
    """Least e with p^e > bound (0 when bound < 1)."""
    e = 0
    while p**e <= bound:
        e += 1
    return e


def hsl_window_bound(
    degsupp_window: DegreeSupport, hsl_deg0: Union[int, HslValue], p: int
) -> HslValue:
    """Bound HSL M from a finite degree support and HSL [M]_0.

    Classes of nonzero degree t leave (-p^e0, p^e0) after e0 steps and die
    there, so every nonzero degree is cleared after e0 steps; the degree-0
    part needs HSL [M]_0 steps. The bound is the larger of the two; a zero
    degree-0 piece contributes nothing.

    Args:
        degsupp_window: Interval containing degsupp M
        hsl_deg0: HSL of the degree-0 piece
        p: Characteristic

    Returns:
        Upper bound; unknown for an infinite window
    """
    if degsupp_window.empty:
        return HslValue.exact(0)
    if not degsupp_window.finite:
        return HslValue.unknown()
    lo, hi = degsupp_window.lo, degsupp_window.hi
    e0 = exponent_escaping(max(abs(lo), abs(hi)), p)
    deg0 = HslValue.coerce(hsl_deg0) if lo <= 0 <= hi else HslValue.exact(0)
    if not deg0.is_known:
        return HslValue.unknown()
    return HslValue.upper(max(deg0.value, e0)) if (e0 or deg0.value) else HslValue.exact(0)
