"""Ring profiles: everything the construction calculators know about a ring.

A profile holds one cohomology record per index j in [0, dim] plus
hypothesis flags. F-depth, gF-depth, b(R) and the nilpotence verdicts are
derived from the records when the profile is built, then tightened by any
theorem bounds the caller supplies.
"""

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from errors import ProfileError
from fmodule_calculus import (
    BValue,
    DegreeSupport,
    HslValue,
    NilSupport,
    b_invariant,
    generalized_nilpotent,
    hsl_max,
    is_nilpotent,
)
from logging_config import get_logger

logger = get_logger(__name__)

INF = math.inf

Number = Union[int, float]


class Verdict(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, value: Optional[bool]) -> "Verdict":
        if value is None:
            return cls.UNKNOWN
        return cls.TRUE if value else cls.FALSE

    @property
    def known(self) -> bool:
        return self != Verdict.UNKNOWN

    def as_bool(self) -> Optional[bool]:
        if self == Verdict.UNKNOWN:
            return None
        return self == Verdict.TRUE


@dataclass(frozen=True)
class NatInterval:
    """Closed interval [lo, hi] in N with infinity allowed at either end."""

    lo: Number = 0
    hi: Number = INF

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        if self.lo < 0:
            raise ValueError(f"interval [{self.lo}, {self.hi}] leaves N")

    @classmethod
    def exactly(cls, value: Number) -> "NatInterval":
        return cls(lo=value, hi=value)

    @classmethod
    def at_least(cls, value: Number) -> "NatInterval":
        return cls(lo=max(value, 0), hi=INF)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Optional[Number]:
        return self.lo if self.exact else None

    def meets(self, other: "NatInterval") -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)

    def tighten(self, other: Optional["NatInterval"]) -> "NatInterval":
        """Intersection; raises ProfileError when the intervals are disjoint."""
        if other is None:
            return self
        if not self.meets(other):
            raise ProfileError(f"interval {self} contradicts {other}")
        return NatInterval(lo=max(self.lo, other.lo), hi=min(self.hi, other.hi))

    def capped(self, top: Number) -> "NatInterval":
        return NatInterval(lo=min(self.lo, top), hi=min(self.hi, top))

    def __str__(self) -> str:
        def show(x: Number) -> str:
            return "inf" if x == INF else str(int(x))

        if self.exact:
            return show(self.lo)
        return f"[{show(self.lo)}, {show(self.hi)}]"


@dataclass(frozen=True)
class CohomologyRecord:
    """What is known about H^j_m(R).

    Attributes:
        index: Cohomological index j
        is_zero: Whether H^j vanishes (None when unknown)
        a_j: Top degree, None for a zero module
        a_known: False when a_j carries no information
        nilsupport: Certified nilsupport descriptor
        degsupp: Interval containing the degree support
        hsl: HSL number of H^j
        hsl_deg0: HSL number of the degree-0 piece
        dim_g0: Dimension of the degree-0 non-nilpotent quotient
    """

    index: int
    is_zero: Optional[bool] = None
    a_j: Optional[int] = None
    a_known: bool = False
    nilsupport: NilSupport = field(default_factory=lambda: NilSupport(lo=1, hi=0))
    degsupp: DegreeSupport = field(default_factory=DegreeSupport)
    hsl: HslValue = field(default_factory=HslValue.unknown)
    hsl_deg0: HslValue = field(default_factory=HslValue.unknown)
    dim_g0: Optional[int] = None

    @classmethod
    def zero(cls, index: int, p: Optional[int] = None) -> "CohomologyRecord":
        return cls(
            index=index,
            is_zero=True,
            a_j=None,
            a_known=True,
            nilsupport=NilSupport.empty(p),
            degsupp=DegreeSupport.nothing(),
            hsl=HslValue.exact(0),
            hsl_deg0=HslValue.exact(0),
            dim_g0=0,
        )

    @classmethod
    def unknown(cls, index: int, p: Optional[int] = None) -> "CohomologyRecord":
        return cls(index=index, nilsupport=NilSupport(lo=1, hi=0, p=p))

    @property
    def b(self) -> BValue:
        """b_j = sup nilsupp H^j."""
        if self.is_zero:
            return BValue.neg_inf()
        return b_invariant(self.nilsupport)

    @property
    def nilpotent(self) -> Optional[bool]:
        if self.is_zero:
            return True
        return is_nilpotent(self.nilsupport)

    @property
    def generalized_nilpotent(self) -> Optional[bool]:
        if self.is_zero:
            return True
        return generalized_nilpotent(self.nilsupport)

    @property
    def fexp_input(self) -> Optional[int]:
        """Upper bound for a_j usable by F-exp; None when a_j is unknown."""
        if not self.a_known and not self.is_zero:
            return None
        return -1 if self.a_j is None else self.a_j


@dataclass(frozen=True)
class ProfileFlags:
    """Hypothesis flags; None means not established."""

    cm: Optional[bool] = None
    depth_ge_2: Optional[bool] = None
    equidimensional: Optional[bool] = None
    generalized_cm: Optional[bool] = None
    punctured_spectrum_f_rational: Optional[bool] = None
    punctured_spectrum_f_nilpotent: Optional[bool] = None


FLAG_NAMES = tuple(ProfileFlags.__dataclass_fields__)


def _first_index(statuses: Sequence[Optional[bool]], accept) -> Number:
    for j, status in enumerate(statuses):
        if accept(status):
            return j
    return INF


def derive_fdepth(records: Sequence[CohomologyRecord], dim: int) -> NatInterval:
    """F-depth interval from per-index nilpotence, capped at dim."""
    statuses = [r.nilpotent for r in records]
    lo = min(_first_index(statuses, lambda s: s is not True), dim)
    hi = min(_first_index(statuses, lambda s: s is False), dim)
    if dim >= 1:
        lo = max(lo, 1)
    return NatInterval(lo=lo, hi=max(lo, hi))


def derive_gfdepth(
    records: Sequence[CohomologyRecord], dim: int, fdepth: NatInterval, equidimensional: bool
) -> NatInterval:
    """gF-depth interval; never below F-depth, capped at dim when equidimensional."""
    statuses = [r.generalized_nilpotent for r in records]
    lo = max(_first_index(statuses, lambda s: s is not True), fdepth.lo)
    hi = _first_index(statuses, lambda s: s is False)
    if equidimensional:
        lo, hi = min(lo, dim), min(hi, dim)
    return NatInterval(lo=lo, hi=max(lo, hi))


def derive_b_ring(records: Sequence[CohomologyRecord], fdepth: NatInterval) -> NatInterval:
    """b(R) = least j with b_j(R) = 0, or infinity."""
    statuses = [r.b.is_zero() for r in records]
    lo = max(_first_index(statuses, lambda s: s is not False), fdepth.lo)
    hi = _first_index(statuses, lambda s: s is True)
    return NatInterval(lo=lo, hi=max(lo, hi))


@dataclass(frozen=True)
class RingProfile:
    """Cohomological profile of a standard graded ring over F_p.

    Build instances with RingProfile.build so derived fields are consistent
    with the records.
    """

    name: str
    p: int
    dim: int
    records: Tuple[CohomologyRecord, ...]
    flags: ProfileFlags = field(default_factory=ProfileFlags)
    fdepth: NatInterval = field(default_factory=NatInterval)
    gfdepth: NatInterval = field(default_factory=NatInterval)
    b_ring: NatInterval = field(default_factory=NatInterval)
    wfn: Verdict = Verdict.UNKNOWN
    gwfn: Verdict = Verdict.UNKNOWN
    f_nilpotent: Verdict = Verdict.UNKNOWN
    uniform_annihilator: Optional[int] = None
    asserted: FrozenSet[str] = frozenset()
    provenance: str = "engine"
    notes: Tuple[str, ...] = ()

    @classmethod
    def build(
        cls,
        name: str,
        p: int,
        dim: int,
        records: Iterable[CohomologyRecord],
        flags: Optional[ProfileFlags] = None,
        fdepth: Optional[NatInterval] = None,
        gfdepth: Optional[NatInterval] = None,
        b_ring: Optional[NatInterval] = None,
        f_nilpotent: Optional[Verdict] = None,
        uniform_annihilator: Optional[int] = None,
        asserted: Iterable[str] = (),
        provenance: str = "engine",
        notes: Iterable[str] = (),
    ) -> "RingProfile":
        """Derive fdepth, gfdepth, b(R) and verdicts, then apply extra bounds.

        Args:
            name: Display name
            p: Characteristic
            dim: Krull dimension d
            records: One record per index 0..d; missing indices are unknown
            flags: Hypothesis flags
            fdepth: Additional F-depth bound (theorem or assertion)
            gfdepth: Additional gF-depth bound
            b_ring: Additional b(R) bound
            f_nilpotent: Asserted F-nilpotence verdict
            uniform_annihilator: N with m^N H^j nilpotent for j < d
            asserted: Dotted names of user-asserted fields
            provenance: Where the profile came from
            notes: Free-form notes carried into reports

        Raises:
            ProfileError: If records are malformed or bounds contradict
        """
        if dim < 0:
            raise ProfileError(f"dimension must be nonnegative, got {dim}")
        by_index: Dict[int, CohomologyRecord] = {}
        for record in records:
            if not 0 <= record.index <= dim:
                raise ProfileError(f"record index {record.index} outside [0, {dim}]")
            if record.index in by_index:
                raise ProfileError(f"duplicate record for index {record.index}")
            by_index[record.index] = record
        ordered = tuple(by_index.get(j, CohomologyRecord.unknown(j, p)) for j in range(dim + 1))
        flags = flags or ProfileFlags()
        notes = list(notes)

        derived_f = derive_fdepth(ordered, dim)
        f_interval = _apply(derived_f, fdepth, "fdepth", name, notes)

        derived_g = derive_gfdepth(ordered, dim, f_interval, bool(flags.equidimensional))
        g_interval = _apply(derived_g, gfdepth, "gfdepth", name, notes)
        if g_interval.lo < f_interval.lo:
            g_interval = NatInterval(lo=f_interval.lo, hi=max(f_interval.lo, g_interval.hi))

        derived_b = derive_b_ring(ordered, f_interval)
        b_interval = _apply(derived_b, b_ring, "b(R)", name, notes)

        wfn = top_verdict(f_interval, dim)
        gwfn = top_verdict(g_interval, dim)
        fnil = _f_nilpotent_verdict(wfn, b_interval, flags)
        if f_nilpotent is not None and f_nilpotent.known:
            if fnil.known and fnil != f_nilpotent:
                notes.append(f"asserted F-nilpotence {f_nilpotent.value} ignored: derived {fnil.value}")
            else:
                fnil = f_nilpotent

        return cls(
            name=name,
            p=p,
            dim=dim,
            records=ordered,
            flags=flags,
            fdepth=f_interval,
            gfdepth=g_interval,
            b_ring=b_interval,
            wfn=wfn,
            gwfn=gwfn,
            f_nilpotent=fnil,
            uniform_annihilator=uniform_annihilator,
            asserted=frozenset(asserted),
            provenance=provenance,
            notes=tuple(notes),
        )

    def record(self, j: int) -> CohomologyRecord:
        """Record for index j; indices outside [0, dim] are zero modules."""
        if 0 <= j <= self.dim:
            return self.records[j]
        return CohomologyRecord.zero(j, self.p)

    def b_j(self, j: int) -> BValue:
        return self.record(j).b

    @property
    def depth_ge_2(self) -> bool:
        if self.flags.depth_ge_2:
            return True
        return self.dim >= 2 and all(self.record(j).is_zero for j in (0, 1))

    @property
    def hsl_ring(self) -> HslValue:
        """HSL R = max_j HSL H^j."""
        return hsl_max(r.hsl for r in self.records)

    def hsl_list(self) -> List[HslValue]:
        return [r.hsl for r in self.records]

    def with_notes(self, *extra: str) -> "RingProfile":
        return replace(self, notes=self.notes + tuple(extra))

    def summary(self) -> Dict[str, str]:
        """Short string view used by text reports."""
        return {
            "name": self.name,
            "p": str(self.p),
            "dim": str(self.dim),
            "F-depth": str(self.fdepth),
            "gF-depth": str(self.gfdepth),
            "b(R)": str(self.b_ring),
            "weakly F-nilpotent": self.wfn.value,
            "generalized weakly F-nilpotent": self.gwfn.value,
            "F-nilpotent": self.f_nilpotent.value,
        }


def _apply(
    derived: NatInterval,
    bound: Optional[NatInterval],
    label: str,
    name: str,
    notes: List[str],
) -> NatInterval:
    if bound is None:
        return derived
    if not derived.meets(bound):
        logger.warning(f"[BOUND_CONFLICT] {name}: {label} bound {bound} contradicts records {derived}")
        notes.append(f"{label} bound {bound} contradicts records {derived}; kept {derived}")
        return derived
    return derived.tighten(bound)


def top_verdict(interval: NatInterval, dim: int) -> Verdict:
    """TRUE when the interval lies at or above dim, FALSE when it lies below."""
    if interval.lo >= dim:
        return Verdict.TRUE
    if interval.hi < dim:
        return Verdict.FALSE
    return Verdict.UNKNOWN


def _f_nilpotent_verdict(wfn: Verdict, b_ring: NatInterval, flags: ProfileFlags) -> Verdict:
    """F-nilpotent iff b(R) is infinite, under the punctured-spectrum hypothesis."""
    if wfn == Verdict.FALSE or b_ring.hi < INF:
        return Verdict.FALSE
    punctured = flags.punctured_spectrum_f_rational or flags.punctured_spectrum_f_nilpotent
    if wfn == Verdict.TRUE and b_ring.lo == INF and punctured:
        return Verdict.TRUE
    return Verdict.UNKNOWN


def polynomial_ring_profile(p: int, dim: int) -> RingProfile:
    """Profile of F_p[y_1..y_dim] with the standard grading.

    Only H^dim is nonzero; it lives in degrees <= -dim and Frobenius is
    injective on it, so every degree of its support is in the nilsupport.
    """
    if dim < 1:
        raise ProfileError("polynomial ring profile needs dim >= 1")
    records = [CohomologyRecord.zero(j, p) for j in range(dim)]
    records.append(
        CohomologyRecord(
            index=dim,
            is_zero=False,
            a_j=-dim,
            a_known=True,
            nilsupport=NilSupport.infinite_sup_bounded(-dim, exact=True, dense=True, p=p),
            degsupp=DegreeSupport(lo=None, hi=-dim),
            hsl=HslValue.exact(0),
            hsl_deg0=HslValue.exact(0),
            dim_g0=0,
        )
    )
    flags = ProfileFlags(
        cm=True,
        depth_ge_2=dim >= 2,
        equidimensional=True,
        generalized_cm=True,
        punctured_spectrum_f_rational=True,
        punctured_spectrum_f_nilpotent=True,
    )
    return RingProfile.build(
        name=f"F_{p}[y_1..y_{dim}]",
        p=p,
        dim=dim,
        records=records,
        flags=flags,
        uniform_annihilator=0,
        provenance="engine:polynomial",
    )
