"""Diagonal subalgebras T_Delta = R^(g) # S^(h) of bigraded T = R (x) S.

Also the hypersurface quotients (T/fT)_Delta for f of bidegree (d1, d2).
"""

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Union

from fmodule_calculus import BValue

from construction_calculus.depth import lower_bound_of, ses_fdepth_bounds
from construction_calculus.profile import INF, NatInterval, RingProfile, Verdict, top_verdict
from construction_calculus.reports import BoundKind, BoundReport
from construction_calculus.segre import segre_profile
from construction_calculus.veronese import veronese_profile
from logging_config import get_logger

logger = get_logger(__name__)

BLike = Union[BValue, int, float, None]


@dataclass(frozen=True)
class DiagonalSpec:
    """Diagonal Delta = (g, h) and the bidegree (d1, d2) of f.

    The quotient conditions use L1(x) = -d1 + g x and L2(x) = -d2 + h x.
    """

    g: int
    h: int
    d1: int = 0
    d2: int = 0

    def __post_init__(self) -> None:
        if self.g < 0 or self.h < 0:
            raise ValueError(f"diagonal entries must be nonnegative, got ({self.g}, {self.h})")
        if self.g == 0 and self.h == 0:
            raise ValueError("diagonal (0, 0) does not define a subalgebra")

    def l1(self, x: int) -> int:
        return -self.d1 + self.g * x

    def l2(self, x: int) -> int:
        return -self.d2 + self.h * x

    def __str__(self) -> str:
        return f"({self.g},{self.h})"


def diagonal_profile(R: RingProfile, S: RingProfile, spec: DiagonalSpec) -> RingProfile:
    """Profile of T_Delta; a zero entry leaves a Veronese subring of one factor."""
    if spec.h == 0:
        return veronese_profile(R, spec.g)
    if spec.g == 0:
        return veronese_profile(S, spec.h)
    T, _ = segre_profile(veronese_profile(R, spec.g), veronese_profile(S, spec.h))
    return T


def diagonal_fdepth(R: RingProfile, S: RingProfile, spec: DiagonalSpec) -> BoundReport:
    """F-depth of T_Delta with the clauses that fired.

    With f_T = f_R + f_S - 1:
      (a) F-depth T_Delta >= min{b(R), b(S), f_T}
      (b) H^{f_R}(R) or H^{f_S}(S) generalized nilpotent is recorded
      (c) b(R) = f_R and b(S) = f_S give F-depth T_Delta = min{f_R, f_S, f_T}
      (d) b_{f_T}(R), b_{f_T}(S) != 0 and a generalized nilpotent H^{f}
          paired with b_f != 0 on the other side give F-depth T_Delta > f_T
    """
    T = diagonal_profile(R, S, spec)
    if spec.g == 0 or spec.h == 0:
        return BoundReport(
            quantity=f"F-depth T_{spec}",
            value=T.fdepth.lo if T.fdepth.exact else T.fdepth,
            kind=BoundKind.EXACT if T.fdepth.exact else BoundKind.INTERVAL,
            justification="a zero diagonal entry gives a Veronese subring of one factor",
            inputs={"g": spec.g, "h": spec.h, "dim T_Delta": T.dim},
            verdict=T.wfn,
            notes=T.notes,
        )

    interval = T.fdepth
    f_r, f_s = R.fdepth, S.fdepth
    f_t_lo = f_r.lo + f_s.lo - 1
    f_t_exact = f_r.exact and f_s.exact
    notes: List[str] = []

    clause_a = min(R.b_ring.lo, S.b_ring.lo, f_t_lo)
    notes.append(f"(a) F-depth T_Delta >= min{{b(R), b(S), f_T}} = {_num(clause_a)}")
    claim = NatInterval(lo=min(clause_a, T.dim), hi=T.dim)
    if interval.meets(claim):
        interval = interval.tighten(claim)

    gen_r = gen_s = None
    if f_t_exact:
        gen_r = R.record(int(f_r.lo)).generalized_nilpotent
        gen_s = S.record(int(f_s.lo)).generalized_nilpotent
        if gen_r or gen_s:
            notes.append("(b) H^{f_R}(R) or H^{f_S}(S) is generalized nilpotent")

    if (
        f_t_exact
        and R.b_ring.exact
        and S.b_ring.exact
        and R.b_ring.lo == f_r.lo
        and S.b_ring.lo == f_s.lo
    ):
        value = min(f_r.lo, f_s.lo, f_t_lo)
        notes.append(f"(c) b(R) = f_R and b(S) = f_S: F-depth T_Delta = {_num(value)}")
        claim = NatInterval.exactly(value)
        if interval.meets(claim):
            interval = interval.tighten(claim)
        else:
            notes.append(f"(c) conflicts with certified {interval}; kept")

    if f_t_exact:
        f_t = int(f_t_lo)
        far_r = R.b_j(f_t).is_zero() is False
        far_s = S.b_j(f_t).is_zero() is False
        paired = (gen_r is True and S.b_j(int(f_s.lo)).is_zero() is False) or (
            gen_s is True and R.b_j(int(f_r.lo)).is_zero() is False
        )
        if far_r and far_s and paired:
            claim = NatInterval(lo=f_t + 1, hi=max(f_t + 1, interval.hi))
            if interval.meets(claim) and f_t + 1 <= T.dim:
                interval = interval.tighten(claim)
                notes.append(f"(d) F-depth T_Delta > f_T = {f_t}")
            else:
                notes.append(f"(d) claims F-depth T_Delta > {f_t}, conflicts with certified {interval}; kept")

    logger.info(f"[DIAGONAL] F-depth T_{spec}: {interval} (dim {T.dim})")
    return BoundReport(
        quantity=f"F-depth T_{spec}",
        value=interval.lo if interval.exact else interval,
        kind=BoundKind.EXACT if interval.exact else BoundKind.INTERVAL,
        justification="F-depth T_Delta >= f_T with f_T = F-depth R + F-depth S - 1, clauses (a)-(d)",
        inputs={
            "g": spec.g,
            "h": spec.h,
            "F-depth R": f_r,
            "F-depth S": f_s,
            "f_T": f_t_lo,
            "b(R)": R.b_ring,
            "b(S)": S.b_ring,
            "dim T_Delta": T.dim,
        },
        verdict=top_verdict(interval, T.dim),
        notes=tuple(notes),
    )


def _num(value: float) -> str:
    if value == INF:
        return "inf"
    return str(int(value))


def diagonal_hypersurface_bounds(T: RingProfile, dims_match: bool) -> List[BoundReport]:
    """Bounds for (T/fT)_Delta from the sequence 0 -> T' -> T_Delta -> (T/fT)_Delta -> 0.

    T' carries the twisted action f^{p-1}F and has F-depth at least that of
    T_Delta, so both A and B are bounded below by T_Delta.

    Args:
        T: Profile of T_Delta
        dims_match: dim (T/fT)_Delta = dim T_Delta - 1
    """
    reports = []
    for generalized, interval, verdict in (
        (False, T.fdepth, T.wfn),
        (True, T.gfdepth, T.gwfn),
    ):
        base = ses_fdepth_bounds(
            NatInterval.at_least(interval.lo),
            interval,
            None,
            position="C",
            generalized=generalized,
        )
        lower = lower_bound_of(base)
        label = "gF-depth" if generalized else "F-depth"
        notes = []
        if dims_match and verdict == Verdict.TRUE:
            quotient_verdict = Verdict.TRUE
            notes.append(f"T_Delta {'generalized ' if generalized else ''}weakly F-nilpotent and dims match")
        else:
            quotient_verdict = Verdict.UNKNOWN
            if not dims_match:
                notes.append("hypothesis not satisfied: dim (T/fT)_Delta = dim T_Delta - 1")
        reports.append(
            BoundReport(
                quantity=f"{label} (T/fT)_Delta",
                value=lower,
                kind=BoundKind.LOWER,
                justification=f"{label} (T/fT)_Delta >= {label} T_Delta - 1",
                inputs={f"{label} T_Delta": interval, "dims_match": dims_match},
                verdict=quotient_verdict,
                notes=tuple(notes),
            )
        )
    return reports


def _b_number(value: BLike) -> Optional[Fraction]:
    """None stands for -infinity."""
    if isinstance(value, BValue):
        return None if value.value is None else Fraction(value.value)
    if value is None or (isinstance(value, float) and value == -INF):
        return None
    return Fraction(value)


def _ceil_bound(ratio: Fraction, b: Optional[Fraction], shift: int, step: int) -> bool:
    """ratio >= ceil((b + shift) / step) or ratio not integral."""
    if ratio.denominator != 1:
        return True
    if b is None:
        return True
    return ratio >= math.ceil((b + shift) / step)


def diagonal_quotient_conditions(bR: BLike, bS: BLike, spec: DiagonalSpec) -> BoundReport:
    """Numerical conditions giving F-depth (T/fT)_Delta >= F-depth T_Delta.

    Args:
        bR: b_{f_T}(R), None or -inf for -infinity; an upper-bound BValue is
            used as is
        bS: b_{f_T}(S)
        spec: Diagonal and bidegree of f

    Raises:
        ValueError: If g or h is zero
    """
    if spec.g == 0 or spec.h == 0:
        raise ValueError("quotient conditions need g >= 1 and h >= 1")
    d, e, g, h = spec.d1, spec.d2, spec.g, spec.h
    b_r, b_s = _b_number(bR), _b_number(bS)
    e_over_h = Fraction(e, h)
    d_over_g = Fraction(d, g)

    bullets: Dict[str, bool] = {
        "e/h >= ceil((b(R) + d)/g) or e/h not integral": _ceil_bound(e_over_h, b_r, d, g),
        "d/g >= ceil((b(S) + e)/h) or d/g not integral": _ceil_bound(d_over_g, b_s, e, h),
        "det [[d, e], [g, h]] != 0 or {e/h, d/g} not integral": (
            d * h - e * g != 0 or e_over_h.denominator != 1 or d_over_g.denominator != 1
        ),
    }
    holds = all(bullets.values())
    notes = []
    for name, value in (("b(R)", bR), ("b(S)", bS)):
        if isinstance(value, BValue) and not value.exact:
            notes.append(f"{name} is an upper bound {value}")
    if holds:
        notes.append("F-depth (T/fT)_Delta >= F-depth T_Delta")
    return BoundReport(
        quantity="quotient conditions",
        value=bullets,
        kind=BoundKind.CONDITIONS,
        justification=(
            "L1(x) = -d + g x, L2(x) = -e + h x; the three conditions give "
            "F-depth (T/fT)_Delta >= F-depth T_Delta"
        ),
        inputs={
            "b_{f_T}(R)": str(bR) if isinstance(bR, BValue) else bR,
            "b_{f_T}(S)": str(bS) if isinstance(bS, BValue) else bS,
            "(d1, d2)": [d, e],
            "(g, h)": [g, h],
        },
        verdict=Verdict.TRUE if holds else Verdict.FALSE,
        notes=tuple(notes),
    )


def diagonal_conditions_from_profiles(
    R: RingProfile, S: RingProfile, spec: DiagonalSpec, dims_match: bool = True
) -> List[BoundReport]:
    """Conditions, F-depth T_Delta and the resulting bound on (T/fT)_Delta.

    b_{f_T} is read at f_T = F-depth R + F-depth S - 1; an index beyond the
    dimension of a factor gives -infinity.
    """
    f_t = int(R.fdepth.lo + S.fdepth.lo - 1)
    conditions = diagonal_quotient_conditions(R.b_j(f_t), S.b_j(f_t), spec)
    if not (R.fdepth.exact and S.fdepth.exact):
        conditions = _with_notes(conditions, f"f_T = {f_t} taken from F-depth lower bounds")

    fdepth_report = diagonal_fdepth(R, S, spec)
    T = diagonal_profile(R, S, spec)
    t_lower = T.fdepth.lo
    if isinstance(fdepth_report.value, NatInterval):
        t_lower = max(t_lower, fdepth_report.value.lo)
    elif isinstance(fdepth_report.value, (int, float)):
        t_lower = max(t_lower, fdepth_report.value)

    if conditions.verdict == Verdict.TRUE:
        lower = t_lower
        justification = "conditions hold: F-depth (T/fT)_Delta >= F-depth T_Delta"
    else:
        lower = max(t_lower - 1, 0)
        justification = "F-depth (T/fT)_Delta >= F-depth T_Delta - 1"

    notes = []
    if dims_match and lower >= T.dim - 1:
        verdict = Verdict.TRUE
        notes.append("(T/fT)_Delta weakly F-nilpotent")
    else:
        verdict = Verdict.UNKNOWN
        if not dims_match:
            notes.append("hypothesis not satisfied: dim (T/fT)_Delta = dim T_Delta - 1")

    quotient = BoundReport(
        quantity=f"F-depth (T/fT)_{spec}",
        value=lower,
        kind=BoundKind.LOWER,
        justification=justification,
        inputs={"F-depth T_Delta": t_lower, "dim T_Delta": T.dim, "dims_match": dims_match},
        verdict=verdict,
        notes=tuple(notes),
    )
    return [conditions, fdepth_report, quotient]


def _with_notes(report: BoundReport, *extra: str) -> BoundReport:
    return replace(report, notes=report.notes + tuple(extra))
