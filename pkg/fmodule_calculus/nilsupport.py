"""Nilsupport descriptors, degree supports and base-nilpotent indices.

A descriptor records what is *certified* about the set of degrees where a
graded F-module is not nilpotent:

* inside the window [lo, hi] every degree is a member, a non-member, or
  undecided;
* everything above hi is a non-member;
* below lo the tail is EMPTY (non-members), DENSE (all members) or UNKNOWN.

Intersection and union act degree by degree with three-valued logic, so
they are exactly commutative and associative and never turn an undecided
degree into a decided one.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, FrozenSet, Iterable, Optional

from errors import FieldError

Truth = Optional[bool]


class Tail(str, Enum):
    """What is known about degrees below the window."""

    EMPTY = "empty"
    DENSE = "dense"
    UNKNOWN = "unknown"


class DescriptorKind(str, Enum):
    EMPTY = "Empty"
    ZERO_ONLY = "ZeroOnly"
    EXPLICIT = "Explicit"
    INFINITE_SUP_BOUNDED = "InfiniteSupBounded"


class Trichotomy(str, Enum):
    """Nilpotent, generalized nilpotent only, or infinite nilsupport."""

    NILPOTENT = "Nilpotent"
    GENERALIZED_NILPOTENT_ONLY = "GeneralizedNilpotentOnly"
    INFINITE_NILSUPPORT = "InfiniteNilsupport"
    UNKNOWN = "Unknown"


def _tail_truth(tail: Tail) -> Truth:
    return {Tail.EMPTY: False, Tail.DENSE: True, Tail.UNKNOWN: None}[tail]


def _truth_tail(value: Truth) -> Tail:
    if value is True:
        return Tail.DENSE
    if value is False:
        return Tail.EMPTY
    return Tail.UNKNOWN


@dataclass(frozen=True)
class NilSupport:
    """Certified knowledge of nilsupp M.

    Build instances through the classmethods. The constructor trims the
    window to a canonical form, so equal knowledge compares equal.

    Attributes:
        lo: Lowest degree of the window (lo = hi + 1 means no window)
        hi: Highest degree of the window
        members: Certified members, inside [lo, hi]
        undecided: Degrees inside [lo, hi] with no certificate either way
        tail: Knowledge below lo
        infinite: Certified infinite even where no member shows it
        p: Characteristic, when known
    """

    lo: int
    hi: int
    members: FrozenSet[int] = field(default_factory=frozenset)
    undecided: FrozenSet[int] = field(default_factory=frozenset)
    tail: Tail = Tail.UNKNOWN
    infinite: bool = False
    p: Optional[int] = None

    def __post_init__(self) -> None:
        members = frozenset(int(m) for m in self.members)
        undecided = frozenset(int(u) for u in self.undecided) - members
        lo, hi = self.lo, self.hi
        tail = Tail(self.tail)
        if lo > hi + 1:
            raise ValueError(f"window [{lo}, {hi}] is not an interval")
        if any(t < lo or t > hi for t in members | undecided):
            raise ValueError(f"decided degrees must lie inside [{lo}, {hi}]")

        def state(t: int) -> Truth:
            if t in members:
                return True
            if t in undecided:
                return None
            return False

        while hi >= lo and state(hi) is False:
            hi -= 1
        tail_state = _tail_truth(tail)
        while lo <= hi and state(lo) is tail_state:
            members = members - {lo}
            undecided = undecided - {lo}
            lo += 1
        if lo > hi:
            lo, hi = (1, 0) if tail == Tail.EMPTY else (hi + 1, hi)

        infinite = (
            bool(self.infinite) or tail == Tail.DENSE or any(m != 0 for m in members)
        )
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "undecided", undecided)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "infinite", infinite)

    @classmethod
    def empty(cls, p: Optional[int] = None) -> "NilSupport":
        return cls(lo=1, hi=0, tail=Tail.EMPTY, p=p)

    @classmethod
    def zero_only(cls, p: Optional[int] = None) -> "NilSupport":
        return cls(lo=0, hi=0, members=frozenset({0}), tail=Tail.EMPTY, p=p)

    @classmethod
    def explicit(
        cls,
        lo: int,
        hi: int,
        members: Iterable[int],
        tail_known: bool,
        undecided: Iterable[int] = (),
        p: Optional[int] = None,
    ) -> "NilSupport":
        """Finite window with certified members.

        Args:
            lo: Lowest degree of the window
            hi: Highest degree; degrees above are non-members
            members: Certified members inside the window
            tail_known: Every degree below lo is a non-member
            undecided: Window degrees without a certificate
        """
        return cls(
            lo=lo,
            hi=hi,
            members=frozenset(members),
            undecided=frozenset(undecided),
            tail=Tail.EMPTY if tail_known else Tail.UNKNOWN,
            p=p,
        )

    @classmethod
    def infinite_sup_bounded(
        cls,
        sup_bound: int,
        exact: bool,
        dense: bool = False,
        p: Optional[int] = None,
    ) -> "NilSupport":
        """Infinite nilsupport whose supremum is at most sup_bound.

        Args:
            sup_bound: Upper bound for the supremum
            exact: sup_bound itself is a member
            dense: Every degree <= sup_bound is a member
        """
        if dense:
            return cls(lo=sup_bound + 1, hi=sup_bound, tail=Tail.DENSE, p=p)
        members = frozenset({sup_bound}) if exact else frozenset()
        lo = sup_bound if exact else sup_bound + 1
        return cls(
            lo=lo, hi=sup_bound, members=members, tail=Tail.UNKNOWN, infinite=True, p=p
        )

    @property
    def kind(self) -> DescriptorKind:
        if self.tail == Tail.EMPTY and not self.undecided:
            if not self.members:
                return DescriptorKind.EMPTY
            if self.members == frozenset({0}):
                return DescriptorKind.ZERO_ONLY
        if self.tail == Tail.DENSE or (self.infinite and not self.members):
            return DescriptorKind.INFINITE_SUP_BOUNDED
        return DescriptorKind.EXPLICIT

    @property
    def tail_known(self) -> bool:
        return self.tail != Tail.UNKNOWN

    def membership(self, t: int) -> Truth:
        """Three-valued membership of degree t."""
        if t > self.hi:
            return False
        if t >= self.lo:
            if t in self.members:
                return True
            return None if t in self.undecided else False
        return _tail_truth(self.tail)

    def check_p_closure(self, p: int) -> list:
        """Members t != 0 whose multiple t*p is certified absent.

        Returns:
            Offending members; empty when the closure property holds
        """
        return [t for t in sorted(self.members) if t != 0 and self.membership(t * p) is False]

    def __str__(self) -> str:
        kind = self.kind
        if kind in (DescriptorKind.EMPTY, DescriptorKind.ZERO_ONLY):
            return kind.value
        parts = [f"window=[{self.lo},{self.hi}]", f"members={sorted(self.members)}"]
        if self.undecided:
            parts.append(f"undecided={sorted(self.undecided)}")
        parts.append(f"tail={self.tail.value}")
        return f"{kind.value}({', '.join(parts)})"


def _combine_p(d1: NilSupport, d2: NilSupport) -> Optional[int]:
    if d1.p is not None and d2.p is not None and d1.p != d2.p:
        raise FieldError(f"descriptors over different primes {d1.p} and {d2.p}")
    return d1.p if d1.p is not None else d2.p


def _and3(a: Truth, b: Truth) -> Truth:
    if a is False or b is False:
        return False
    if a is True and b is True:
        return True
    return None


def _or3(a: Truth, b: Truth) -> Truth:
    if a is True or b is True:
        return True
    if a is False and b is False:
        return False
    return None


def _pointwise(
    d1: NilSupport,
    d2: NilSupport,
    op: Callable[[Truth, Truth], Truth],
    infinite: bool,
) -> NilSupport:
    p = _combine_p(d1, d2)
    hi = max(d1.hi, d2.hi)
    lo = min(d1.lo, d2.lo, hi + 1)
    members, undecided = set(), set()
    for t in range(lo, hi + 1):
        value = op(d1.membership(t), d2.membership(t))
        if value is True:
            members.add(t)
        elif value is None:
            undecided.add(t)
    tail = _truth_tail(op(_tail_truth(d1.tail), _tail_truth(d2.tail)))
    return NilSupport(
        lo=lo,
        hi=hi,
        members=frozenset(members),
        undecided=frozenset(undecided),
        tail=tail,
        infinite=infinite,
        p=p,
    )


def nilsupp_intersect(d1: NilSupport, d2: NilSupport) -> NilSupport:
    """Nilsupport of a Segre product of modules: nilsupp M and nilsupp N.

    A degree is a member only if both sides certify it and a non-member if
    either side excludes it.
    """
    return _pointwise(d1, d2, _and3, infinite=False)


def nilsupp_union(d1: NilSupport, d2: NilSupport) -> NilSupport:
    """Nilsupport of a direct sum: a degree is a member if either side is."""
    return _pointwise(d1, d2, _or3, infinite=d1.infinite or d2.infinite)


def nonnegative_part(d: NilSupport) -> NilSupport:
    """Intersect with the degrees >= 0.

    This is nilsupp(H # S) for a reduced ring S generated in degree 1, whose
    Frobenius is injective in every degree >= 0.
    """
    hi = max(d.hi, 0)
    nonneg = NilSupport.explicit(lo=0, hi=hi, members=range(0, hi + 1), tail_known=True, p=d.p)
    return nilsupp_intersect(d, nonneg)


def veronese_restrict(d: NilSupport, v: int) -> NilSupport:
    """Nilsupport of the v-th Veronese submodule in its standard grading.

    Keeps the degrees divisible by v and divides them by v.
    """
    if v < 1:
        raise ValueError(f"Veronese index must be positive, got {v}")
    if v == 1:
        return d
    lo = -((-d.lo) // v)
    hi = d.hi // v
    return NilSupport(
        lo=lo,
        hi=hi,
        members=frozenset(m // v for m in d.members if m % v == 0),
        undecided=frozenset(u // v for u in d.undecided if u % v == 0),
        tail=d.tail,
        p=d.p,
    )


def classify_trichotomy(d: NilSupport, piecewise_finite: bool = True) -> Trichotomy:
    """Place a module in the nilpotent / generalized / infinite trichotomy.

    Args:
        d: Nilsupport descriptor
        piecewise_finite: Every graded piece is finite-dimensional

    Raises:
        ValueError: If piecewise_finite is False
    """
    if not piecewise_finite:
        raise ValueError("trichotomy needs every graded piece to be finite-dimensional")
    kind = d.kind
    if kind == DescriptorKind.EMPTY:
        return Trichotomy.NILPOTENT
    if kind == DescriptorKind.ZERO_ONLY:
        return Trichotomy.GENERALIZED_NILPOTENT_ONLY
    if d.infinite:
        return Trichotomy.INFINITE_NILSUPPORT
    return Trichotomy.UNKNOWN


def is_nilpotent(d: NilSupport) -> Truth:
    """Three-valued test nilsupp M = {} (M nilpotent)."""
    if d.members or d.tail == Tail.DENSE:
        return False
    if d.kind == DescriptorKind.EMPTY:
        return True
    return None


def generalized_nilpotent(d: NilSupport) -> Truth:
    """Three-valued test nilsupp M within {0} (M generalized nilpotent)."""
    if any(m != 0 for m in d.members) or d.tail == Tail.DENSE:
        return False
    if d.tail == Tail.EMPTY and d.undecided <= frozenset({0}):
        return True
    return None


@dataclass(frozen=True)
class BValue:
    """Base-nilpotent index b(M) = sup nilsupp M.

    Attributes:
        value: The supremum, or None for -infinity
        exact: False when value is only an upper bound
    """

    value: Optional[int]
    exact: bool = True

    @classmethod
    def neg_inf(cls) -> "BValue":
        return cls(value=None, exact=True)

    @classmethod
    def upper(cls, value: int) -> "BValue":
        return cls(value=value, exact=False)

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def is_zero(self) -> Truth:
        """Three-valued test b == 0."""
        if self.value is None:
            return False
        if self.exact:
            return self.value == 0
        if self.value < 0:
            return False
        return None

    def as_number(self) -> float:
        return -math.inf if self.value is None else float(self.value)

    def __str__(self) -> str:
        if self.value is None:
            return "-inf"
        return str(self.value) if self.exact else f"<= {self.value}"


def b_invariant(d: NilSupport) -> BValue:
    """Supremum of the nilsupport, exact when certified."""
    certified = set(d.members)
    possible = set(d.undecided)
    if d.tail == Tail.DENSE:
        certified.add(d.lo - 1)
    elif d.tail == Tail.UNKNOWN:
        possible.add(d.lo - 1)

    top_certified = max(certified) if certified else None
    top_possible = max(possible) if possible else None
    if top_certified is None and top_possible is None:
        return BValue.neg_inf()
    if top_possible is None or (top_certified is not None and top_certified > top_possible):
        return BValue(value=top_certified)
    return BValue.upper(top_possible)


@dataclass(frozen=True)
class DegreeSupport:
    """Interval of degrees containing degsupp M; None ends are infinite.

    An empty support is represented with empty=True.
    """

    lo: Optional[int] = None
    hi: Optional[int] = None
    empty: bool = False

    def __post_init__(self) -> None:
        if not self.empty and self.lo is not None and self.hi is not None and self.lo > self.hi:
            object.__setattr__(self, "empty", True)
        if self.empty:
            object.__setattr__(self, "lo", None)
            object.__setattr__(self, "hi", None)

    @classmethod
    def nothing(cls) -> "DegreeSupport":
        return cls(empty=True)

    @property
    def finite(self) -> bool:
        return self.empty or (self.lo is not None and self.hi is not None)

    def contains(self, t: int) -> bool:
        if self.empty:
            return False
        return (self.lo is None or t >= self.lo) and (self.hi is None or t <= self.hi)

    def hull(self, other: "DegreeSupport") -> "DegreeSupport":
        """Smallest interval containing both supports."""
        if self.empty:
            return other
        if other.empty:
            return self
        lo = None if self.lo is None or other.lo is None else min(self.lo, other.lo)
        hi = None if self.hi is None or other.hi is None else max(self.hi, other.hi)
        return DegreeSupport(lo=lo, hi=hi)

    def __str__(self) -> str:
        if self.empty:
            return "{}"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"[{lo},{hi}]"


def degsupp_intersect(s1: DegreeSupport, s2: DegreeSupport) -> DegreeSupport:
    """Intersection of two degree supports."""
    if s1.empty or s2.empty:
        return DegreeSupport.nothing()
    los = [x for x in (s1.lo, s2.lo) if x is not None]
    his = [x for x in (s1.hi, s2.hi) if x is not None]
    return DegreeSupport(lo=max(los) if los else None, hi=min(his) if his else None)


def veronese_degsupp(s: DegreeSupport, v: int) -> DegreeSupport:
    """Degree support of the v-th Veronese submodule, standard grading."""
    if s.empty:
        return s
    lo = None if s.lo is None else -((-s.lo) // v)
    hi = None if s.hi is None else s.hi // v
    return DegreeSupport(lo=lo, hi=hi)
