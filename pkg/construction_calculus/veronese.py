"""Veronese subrings R^(v) = sum_t R_{vt}.

Local cohomology of R^(v) is the v-th Veronese submodule of that of R, so
each record is restricted degreewise. Degree 0 is untouched, which keeps
b_j and the degree-0 data unchanged.
"""

from fractions import Fraction
from typing import Dict, Iterable, Optional

from errors import HypothesisError
from fmodule_calculus import veronese_degsupp, veronese_restrict

from construction_calculus.fte import binomial_sum, least_exponent_reaching
from construction_calculus.profile import (
    INF,
    CohomologyRecord,
    NatInterval,
    RingProfile,
    Verdict,
)
from construction_calculus.reports import BoundKind, BoundReport
from logging_config import get_logger

logger = get_logger(__name__)


def _restrict_record(record: CohomologyRecord, v: int) -> CohomologyRecord:
    if record.is_zero:
        return record
    degsupp = veronese_degsupp(record.degsupp, v)
    degree0_nonzero = record.nilsupport.membership(0) is True or (record.dim_g0 or 0) > 0
    top_survives = record.a_known and record.a_j is not None and record.a_j % v == 0

    # floor(a_j / v) is only an upper bound unless that degree is known nonzero
    a_j = None
    a_known = record.a_known and record.a_j is None
    if record.a_known and record.a_j is not None:
        floor = record.a_j // v
        if top_survives or (floor == 0 and degree0_nonzero):
            a_j, a_known = floor, True

    if degree0_nonzero or top_survives:
        is_zero: Optional[bool] = False
    elif degsupp.empty:
        is_zero = True
    else:
        is_zero = None

    return CohomologyRecord(
        index=record.index,
        is_zero=is_zero,
        a_j=a_j,
        a_known=a_known,
        nilsupport=veronese_restrict(record.nilsupport, v),
        degsupp=degsupp,
        hsl=record.hsl.weakened(),
        hsl_deg0=record.hsl_deg0,
        dim_g0=record.dim_g0,
    )


def veronese_profile(R: RingProfile, v: int) -> RingProfile:
    """Profile of the Veronese subring R^(v).

    Raises:
        ValueError: If v < 1
    """
    if v < 1:
        raise ValueError(f"Veronese degree must be >= 1, got {v}")
    if v == 1:
        return R

    notes = [f"F-depth R^({v}) >= F-depth R = {R.fdepth}"]
    fdepth = NatInterval(lo=R.fdepth.lo, hi=R.dim)
    if R.fdepth.exact:
        f = int(R.fdepth.lo)
        if R.b_j(f).is_zero() is True:
            fdepth = NatInterval.exactly(f)
            notes.append(f"b_{f}(R) = 0: F-depth R^({v}) = F-depth R = {f}")

    records = [_restrict_record(r, v) for r in R.records]
    profile = RingProfile.build(
        name=f"{R.name}^({v})",
        p=R.p,
        dim=R.dim,
        records=records,
        flags=R.flags,
        fdepth=fdepth,
        gfdepth=NatInterval(lo=R.gfdepth.lo, hi=R.dim),
        uniform_annihilator=R.uniform_annihilator,
        provenance=f"veronese({R.provenance}, {v})",
        notes=notes,
    )
    logger.info(f"[VERONESE] {profile.name}: F-depth {profile.fdepth}")
    return profile


def veronese_fnilpotence_equivalence(R: RingProfile, v_list: Iterable[int]) -> BoundReport:
    """F-nilpotence of R^(v) for each v, decided by b(R) = inf.

    Requires R weakly F-nilpotent with F-rational or F-nilpotent punctured
    spectrum; otherwise every verdict is unknown.
    """
    degrees = list(v_list)
    for v in degrees:
        if v < 1:
            raise ValueError(f"Veronese degree must be >= 1, got {v}")

    punctured = R.flags.punctured_spectrum_f_rational or R.flags.punctured_spectrum_f_nilpotent
    notes = []
    if R.wfn != Verdict.TRUE:
        notes.append("hypothesis not satisfied: R weakly F-nilpotent")
    if not punctured:
        notes.append("hypothesis not satisfied: punctured spectrum F-rational or F-nilpotent")

    if notes or not degrees:
        verdict = Verdict.UNKNOWN if degrees else None
    elif R.b_ring.lo == INF:
        verdict = Verdict.TRUE
    elif R.b_ring.hi < INF:
        verdict = Verdict.FALSE
    else:
        verdict = Verdict.UNKNOWN
    value: Dict[int, Verdict] = {v: verdict for v in degrees}
    return BoundReport(
        quantity="R^(v) F-nilpotent",
        value=value,
        kind=BoundKind.VERDICT,
        justification="R^(v) F-nilpotent for one (all) v >= 1 iff b(R) = inf",
        inputs={"v": degrees, "b(R)": R.b_ring, "wfn": R.wfn},
        verdict=verdict,
        notes=tuple(notes),
    )


def veronese_fte_bound(
    R: RingProfile, generalized: bool = False, n: Optional[int] = None
) -> BoundReport:
    """Fte of every Veronese subring of R, bounded from the HSL numbers of R.

    Args:
        R: Weakly (or generalized weakly) F-nilpotent ring
        generalized: Use the generalized bound with e_1
        n: Uniform annihilator exponent N; read from the profile if omitted

    Raises:
        HypothesisError: If R lacks the needed weak F-nilpotence or N
    """
    d = R.dim
    h = R.hsl_list()
    if not generalized:
        if R.wfn != Verdict.TRUE:
            raise HypothesisError("Fte R^(v)", "R weakly F-nilpotent")
        total = binomial_sum(h, d)
        justification = "Fte R^(v) <= sum C(d, j) HSL H^j(R)"
        inputs = {"d": d}
    else:
        if R.gwfn != Verdict.TRUE:
            raise HypothesisError("Fte R^(v)", "R generalized weakly F-nilpotent")
        n = R.uniform_annihilator if n is None else n
        if n is None:
            raise HypothesisError("Fte R^(v)", "N with m^N H^j nilpotent for j < d is known")
        e1 = least_exponent_reaching(Fraction(2) ** (d - 1) * n, R.p)
        total = binomial_sum(h, d) + e1
        justification = "Fte R^(v) <= e_1 + sum C(d, j) HSL H^j(R), p^{e_1} >= N 2^{d-1}"
        inputs = {"d": d, "N": n, "e_1": e1}
    inputs["HSL"] = [str(x) for x in h]
    inputs["exact_inputs"] = total.is_exact
    return BoundReport(
        quantity="Fte R^(v)",
        value=total.value,
        kind=BoundKind.UPPER if total.is_known else BoundKind.UNKNOWN,
        justification=justification,
        inputs=inputs,
    )
