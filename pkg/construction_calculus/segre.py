"""Segre products T = R # S of standard graded rings.

With depth R, depth S >= 2 the Kunneth formula reads

    H^j_T(T) = H^j(R) # S  +  R # H^j(S)  +  sum_{r+s=j+1} H^r(R) # H^s(S)

and the nilsupport of a Segre product of modules is the intersection of
the nilsupports, so every summand is described from the factor profiles.
"""

from functools import reduce
from typing import List, Optional, Tuple

from errors import FieldError, HypothesisError
from fmodule_calculus import (
    DegreeSupport,
    HslValue,
    NilSupport,
    degsupp_intersect,
    generalized_nilpotent,
    hsl_max,
    hsl_min,
    hsl_window_bound,
    nilsupp_intersect,
    nilsupp_union,
    nonnegative_part,
)

from construction_calculus.fte import binomial_sum, f_exp, least_exponent_reaching
from construction_calculus.profile import (
    INF,
    CohomologyRecord,
    NatInterval,
    ProfileFlags,
    RingProfile,
    Verdict,
)
from construction_calculus.reports import (
    BoundKind,
    BoundReport,
    KunnethSummand,
    KunnethSummandReport,
)
from logging_config import get_logger

logger = get_logger(__name__)

NONNEGATIVE = DegreeSupport(lo=0, hi=None)

DEPTH_HYPOTHESIS = "depth(R) >= 2 and depth(S) >= 2"


def check_segre_inputs(R: RingProfile, S: RingProfile, quantity: str) -> None:
    """Raise unless R and S share p and both have depth at least 2."""
    if R.p != S.p:
        raise FieldError(f"{quantity}: R is over F_{R.p} but S is over F_{S.p}")
    if not (R.depth_ge_2 and S.depth_ge_2):
        logger.warning(f"[HYPOTHESIS] {quantity}: {DEPTH_HYPOTHESIS} fails for {R.name}, {S.name}")
        raise HypothesisError(quantity, DEPTH_HYPOTHESIS)


def _fexp_bound(record: CohomologyRecord, p: int) -> HslValue:
    a = record.fexp_input
    if a is None:
        return HslValue.unknown()
    return HslValue.exact(f_exp(a, p))


def _ring_part_summand(
    record: CohomologyRecord, p: int, label: str
) -> Optional[KunnethSummand]:
    """H^j(R) # S, where S is reduced so only degrees >= 0 survive."""
    if record.is_zero:
        return None
    degsupp = degsupp_intersect(record.degsupp, NONNEGATIVE)
    if degsupp.empty:
        return None
    has_zero = degsupp.contains(0)
    hsl_deg0 = record.hsl_deg0 if has_zero else HslValue.exact(0)
    by_fexp = hsl_max([hsl_deg0, _fexp_bound(record, p)]).weakened()
    by_window = hsl_window_bound(degsupp, hsl_deg0, p)
    nonzero = True if record.a_known and record.a_j is not None and record.a_j >= 0 else None
    return KunnethSummand(
        label=label,
        nilsupport=nonnegative_part(record.nilsupport),
        degsupp=degsupp,
        hsl=hsl_min([by_fexp, by_window]),
        hsl_deg0=hsl_deg0,
        dim_g0=record.dim_g0 if has_zero else 0,
        nonzero=nonzero,
    )


def _mixed_summand(
    rr: CohomologyRecord,
    ss: CohomologyRecord,
    p: int,
    both_wfn: bool,
) -> Optional[KunnethSummand]:
    """H^r(R) # H^s(S)."""
    if rr.is_zero or ss.is_zero:
        return None
    degsupp = degsupp_intersect(rr.degsupp, ss.degsupp)
    if degsupp.empty:
        return None
    nilsupport = nilsupp_intersect(rr.nilsupport, ss.nilsupport)

    # a nilpotent factor bounds the product by its own HSL number
    candidates = [rec.hsl for rec in (rr, ss) if rec.nilpotent is True]
    if both_wfn:
        candidates.append(hsl_max([rr.hsl, ss.hsl]))
    hsl = hsl_min(candidates).weakened() if candidates else HslValue.unknown()

    has_zero = degsupp.contains(0)
    if has_zero:
        deg0 = [hsl_max([rr.hsl_deg0, ss.hsl_deg0])]
        deg0 += [rec.hsl_deg0 for rec in (rr, ss) if rec.nilsupport.membership(0) is False]
        hsl_deg0 = hsl_min(deg0).weakened()
        if rr.dim_g0 is None or ss.dim_g0 is None:
            dim_g0 = None
        else:
            dim_g0 = rr.dim_g0 * ss.dim_g0
    else:
        hsl_deg0, dim_g0 = HslValue.exact(0), 0
    if degsupp.finite:
        hsl = hsl_min([hsl, hsl_window_bound(degsupp, hsl_deg0, p)])

    return KunnethSummand(
        label=f"H^{rr.index}(R) # H^{ss.index}(S)",
        nilsupport=nilsupport,
        degsupp=degsupp,
        hsl=hsl,
        hsl_deg0=hsl_deg0,
        dim_g0=dim_g0,
        nonzero=True if nilsupport.members else None,
    )


def kunneth_summands(R: RingProfile, S: RingProfile, j: int) -> KunnethSummandReport:
    """Summands of H^j_T(T) that are not certainly zero."""
    both_wfn = R.wfn == Verdict.TRUE and S.wfn == Verdict.TRUE
    found: List[KunnethSummand] = []
    dropped = 0

    for summand in (
        _ring_part_summand(R.record(j), R.p, f"H^{j}(R) # S"),
        _ring_part_summand(S.record(j), S.p, f"R # H^{j}(S)"),
    ):
        if summand is None:
            dropped += 1
        else:
            found.append(summand)

    for r in range(0, j + 2):
        summand = _mixed_summand(R.record(r), S.record(j + 1 - r), R.p, both_wfn)
        if summand is None:
            dropped += 1
        else:
            found.append(summand)

    return KunnethSummandReport(index=j, summands=tuple(found), dropped=dropped)


def _record_from_summands(report: KunnethSummandReport, p: int) -> CohomologyRecord:
    summands = report.summands
    if not summands:
        return CohomologyRecord.zero(report.index, p)
    nilsupport = reduce(nilsupp_union, (s.nilsupport for s in summands), NilSupport.empty(p))
    degsupp = reduce(lambda a, b: a.hull(b), (s.degsupp for s in summands), DegreeSupport.nothing())
    dims = [s.dim_g0 for s in summands]
    top = degsupp.hi
    return CohomologyRecord(
        index=report.index,
        is_zero=False if any(s.nonzero for s in summands) else None,
        a_j=top,
        a_known=top is not None,
        nilsupport=nilsupport,
        degsupp=degsupp,
        hsl=hsl_max(s.hsl for s in summands),
        hsl_deg0=hsl_max(s.hsl_deg0 for s in summands),
        dim_g0=None if any(d is None for d in dims) else sum(dims),
    )


def _fdepth_theorem(R: RingProfile, S: RingProfile, d_T: int) -> Tuple[NatInterval, List[str]]:
    """F-depth T >= min{b(R), b(S), f_R + f_S - 1}, exact under b = f."""
    f_lo = R.fdepth.lo + S.fdepth.lo - 1
    lower = min(R.b_ring.lo, S.b_ring.lo, f_lo, d_T)
    notes = [f"F-depth T >= min{{b(R), b(S), f}} = {int(lower)}"]
    interval = NatInterval(lo=lower, hi=d_T)

    equality = (
        R.fdepth.exact
        and S.fdepth.exact
        and R.b_ring.exact
        and S.b_ring.exact
        and R.fdepth.lo == R.b_ring.lo
        and S.fdepth.lo == S.b_ring.lo
    )
    if equality:
        value = min(R.b_ring.lo, S.b_ring.lo, f_lo)
        interval = NatInterval.exactly(value)
        notes.append(
            f"F-depth R = b(R) and F-depth S = b(S): F-depth T = min{{b(R), b(S), f}} = {int(value)}"
        )
    return interval, notes


def _wfn_corollary(R: RingProfile, S: RingProfile, d_T: int) -> Tuple[Optional[NatInterval], Optional[NatInterval], List[str]]:
    """For weakly F-nilpotent R, S: T weakly F-nilpotent iff b(R) = b(S) = inf."""
    if not (R.wfn == Verdict.TRUE and S.wfn == Verdict.TRUE):
        return None, None, []
    if R.b_ring.lo == INF and S.b_ring.lo == INF:
        return (
            NatInterval.exactly(d_T),
            NatInterval.exactly(INF),
            ["R, S weakly F-nilpotent with b(R) = b(S) = inf: T weakly F-nilpotent, b(T) = inf"],
        )
    if R.b_ring.hi < INF or S.b_ring.hi < INF:
        return (
            NatInterval(lo=0, hi=d_T - 1),
            None,
            ["b(R) or b(S) finite: T is not weakly F-nilpotent"],
        )
    return None, None, []


def _gfdepth_theorem(R: RingProfile, S: RingProfile, d_T: int, equidimensional: bool) -> Tuple[NatInterval, List[str]]:
    """g_T >= g_R + g_S - 1, equality iff the nilsupports meet outside 0."""
    g_lo = R.gfdepth.lo + S.gfdepth.lo - 1
    lower = min(g_lo, d_T) if equidimensional else g_lo
    notes = [f"gF-depth T >= g_R + g_S - 1 = {int(g_lo)}"]
    hi = d_T if equidimensional else INF
    interval = NatInterval(lo=lower, hi=max(lower, hi))

    if R.gfdepth.exact and S.gfdepth.exact and g_lo < d_T:
        meet = nilsupp_intersect(
            R.record(int(R.gfdepth.lo)).nilsupport, S.record(int(S.gfdepth.lo)).nilsupport
        )
        inside_zero = generalized_nilpotent(meet)
        if inside_zero is False:
            interval = NatInterval.exactly(g_lo)
            notes.append("nilsupports of H^{g_R}(R) and H^{g_S}(S) meet outside 0: equality")
        elif inside_zero is True:
            interval = NatInterval(lo=g_lo + 1, hi=max(g_lo + 1, interval.hi))
            notes.append("nilsupports of H^{g_R}(R) and H^{g_S}(S) meet only in 0: strict")
    return interval, notes


def segre_profile(
    R: RingProfile, S: RingProfile
) -> Tuple[RingProfile, List[KunnethSummandReport]]:
    """Profile of T = R # S together with the per-index Kunneth summands.

    Raises:
        FieldError: If R and S live over different primes
        HypothesisError: If depth R or depth S is below 2
    """
    check_segre_inputs(R, S, "Segre product")
    p = R.p
    d_T = R.dim + S.dim - 1
    summands = [kunneth_summands(R, S, j) for j in range(d_T + 1)]
    records = [_record_from_summands(report, p) for report in summands]

    equidimensional = bool(R.flags.equidimensional and S.flags.equidimensional)
    flags = ProfileFlags(
        depth_ge_2=True,
        equidimensional=equidimensional or None,
        generalized_cm=True if (R.flags.generalized_cm and S.flags.generalized_cm) else None,
    )

    fdepth, notes = _fdepth_theorem(R, S, d_T)
    wfn_bound, b_bound, wfn_notes = _wfn_corollary(R, S, d_T)
    if wfn_bound is not None and fdepth.meets(wfn_bound):
        fdepth = fdepth.tighten(wfn_bound)
    gfdepth, g_notes = _gfdepth_theorem(R, S, d_T, equidimensional)
    if R.gwfn == Verdict.TRUE and S.gwfn == Verdict.TRUE:
        g_notes.append("R, S generalized weakly F-nilpotent: so is T")

    n_values = [x for x in (R.uniform_annihilator, S.uniform_annihilator) if x is not None]
    T = RingProfile.build(
        name=f"{R.name} # {S.name}",
        p=p,
        dim=d_T,
        records=records,
        flags=flags,
        fdepth=fdepth,
        gfdepth=gfdepth,
        b_ring=b_bound,
        uniform_annihilator=max(n_values) if len(n_values) == 2 else None,
        provenance=f"segre({R.provenance}, {S.provenance})",
        notes=notes + wfn_notes + g_notes,
    )
    logger.info(f"[SEGRE] {T.name}: dim {d_T}, F-depth {T.fdepth}, gF-depth {T.gfdepth}")
    return T, summands


def segre_fdepth_bounds(
    R: RingProfile, S: RingProfile, T: Optional[RingProfile] = None
) -> BoundReport:
    """F-depth of T = R # S, with the weak F-nilpotence verdict."""
    if T is None:
        T, _ = segre_profile(R, S)
    interval = T.fdepth
    b_note = ("b(T) = inf",) if T.b_ring.lo == INF else ()
    return BoundReport(
        quantity="F-depth T",
        value=interval.lo if interval.exact else interval,
        kind=BoundKind.EXACT if interval.exact else BoundKind.INTERVAL,
        justification=(
            "F-depth T >= min{b(R), b(S), F-depth R + F-depth S - 1}; for weakly "
            "F-nilpotent R, S: T weakly F-nilpotent iff b(R) = b(S) = inf"
        ),
        inputs={
            "F-depth R": R.fdepth,
            "F-depth S": S.fdepth,
            "b(R)": R.b_ring,
            "b(S)": S.b_ring,
            "dim T": T.dim,
        },
        verdict=T.wfn,
        notes=tuple(n for n in T.notes if n.startswith(("F-depth", "R, S weakly", "b(R)"))) + b_note,
    )


def segre_gfdepth(
    R: RingProfile, S: RingProfile, T: Optional[RingProfile] = None
) -> BoundReport:
    """gF-depth of T = R # S, with the generalized weak F-nilpotence verdict."""
    if T is None:
        T, _ = segre_profile(R, S)
    interval = T.gfdepth
    return BoundReport(
        quantity="gF-depth T",
        value=interval.lo if interval.exact else interval,
        kind=BoundKind.EXACT if interval.exact else BoundKind.INTERVAL,
        justification=(
            "g_T >= g_R + g_S - 1, with equality iff nilsupp H^{g_R}(R) and "
            "nilsupp H^{g_S}(S) meet outside {0}"
        ),
        inputs={"gF-depth R": R.gfdepth, "gF-depth S": S.gfdepth, "dim T": T.dim},
        verdict=T.gwfn,
        notes=tuple(n for n in T.notes if n.startswith(("gF-depth", "nilsupports", "R, S generalized"))),
    )


def _h_values(R: RingProfile, S: RingProfile) -> List[HslValue]:
    """The maxima H_j bounding HSL H^j_T(T)."""
    d_T = R.dim + S.dim - 1
    values = []
    for j in range(d_T + 1):
        rj, sj = R.record(j), S.record(j)
        entries = [rj.hsl_deg0, sj.hsl_deg0, _fexp_bound(rj, R.p), _fexp_bound(sj, S.p)]
        for r in range(0, j + 2):
            rr, ss = R.record(r), S.record(j + 1 - r)
            if rr.is_zero or ss.is_zero:
                continue
            entries.append(hsl_max([rr.hsl, ss.hsl]))
        values.append(hsl_max(entries))
    return values


def segre_hsl_bounds(R: RingProfile, S: RingProfile) -> List[HslValue]:
    """H_j >= HSL H^j_T(T) for j = 0..d_T.

    Raises:
        HypothesisError: Unless R and S are weakly F-nilpotent
    """
    check_segre_inputs(R, S, "HSL H^j_T(T)")
    if not (R.wfn == Verdict.TRUE and S.wfn == Verdict.TRUE):
        raise HypothesisError("HSL H^j_T(T)", "R and S are weakly F-nilpotent")
    return _h_values(R, S)


def segre_fte_bound(R: RingProfile, S: RingProfile) -> BoundReport:
    """Refined and coarse bounds for Fte* T.

    Raises:
        HypothesisError: Unless R, S are weakly F-nilpotent with b(R) = b(S) = inf
    """
    hypothesis = "R and S weakly F-nilpotent and b(R) = b(S) = inf"
    check_segre_inputs(R, S, "Fte* T")
    if not (R.wfn == Verdict.TRUE and S.wfn == Verdict.TRUE):
        raise HypothesisError("Fte* T", hypothesis)
    if not (R.b_ring.lo == INF and S.b_ring.lo == INF):
        raise HypothesisError("Fte* T", hypothesis, "b(R) or b(S) not certified infinite")
    d_T = R.dim + S.dim - 1
    h = _h_values(R, S)
    refined = binomial_sum(h, d_T)
    coarse = hsl_max([R.hsl_ring, S.hsl_ring]).scale(2**d_T)
    return BoundReport(
        quantity="Fte* T",
        value={"refined": refined.value, "coarse": coarse.value},
        kind=BoundKind.UPPER if refined.is_known else BoundKind.UNKNOWN,
        justification="Fte* T <= sum C(d_T, j) H_j <= 2^{d_T} max{HSL R, HSL S}",
        inputs={"H": [str(x) for x in h], "d_T": d_T, "exact_inputs": refined.is_exact},
    )


def segre_gwfn_fte_bound(R: RingProfile, S: RingProfile, n: Optional[int] = None) -> BoundReport:
    """Fte* T <= e_1 + sum C(d_T, j) H_j with p^{e_1} >= (N + 1) 2^{d_T - 1}.

    Args:
        R: First factor, generalized weakly F-nilpotent
        S: Second factor, generalized weakly F-nilpotent
        n: Uniform annihilator exponent N; read from the profiles if omitted

    Raises:
        HypothesisError: If a factor is not generalized weakly F-nilpotent or N
            is unavailable
    """
    check_segre_inputs(R, S, "Fte* T")
    if not (R.gwfn == Verdict.TRUE and S.gwfn == Verdict.TRUE):
        raise HypothesisError("Fte* T", "R and S generalized weakly F-nilpotent")
    if n is None:
        known = [x for x in (R.uniform_annihilator, S.uniform_annihilator) if x is not None]
        if len(known) != 2:
            raise HypothesisError("Fte* T", "N with m^N H^j nilpotent for j < d is known")
        n = max(known)
    d_T = R.dim + S.dim - 1
    e1 = least_exponent_reaching((n + 1) * 2 ** (d_T - 1), R.p)
    h = _h_values(R, S)
    total = binomial_sum(h, d_T) + HslValue.exact(e1)
    return BoundReport(
        quantity="Fte* T",
        value=total.value,
        kind=BoundKind.UPPER if total.is_known else BoundKind.UNKNOWN,
        justification="Fte* T <= e_1 + sum C(d_T, j) H_j, p^{e_1} >= (N + 1) 2^{d_T - 1}",
        inputs={"N": n, "e_1": e1, "H": [str(x) for x in h], "d_T": d_T,
                "exact_inputs": total.is_exact},
    )


def segre_length_deg0(R: RingProfile, S: RingProfile, j: int) -> BoundReport:
    """Length of H^j_T / 0^F from the degree-0 non-nilpotent quotients.

    lambda = dim G^j(R) + dim G^j(S) + sum_{r+s=j+1} dim G^r(R) dim G^s(S)
    """
    quantity = f"length H^{j}_T(T)/0^F"
    justification = (
        "lambda(H^j_T/0^F) = dim G^j(R) + dim G^j(S) + sum_{r+s=j+1} dim G^r(R) dim G^s(S)"
    )
    notes = []
    if not (R.flags.generalized_cm and S.flags.generalized_cm):
        notes.append("hypothesis not satisfied: R and S generalized Cohen-Macaulay")
    g_limit = R.gfdepth.lo + S.gfdepth.lo - 1
    if j >= g_limit:
        notes.append(f"j = {j} is not below g_R + g_S - 1 = {int(g_limit)}")

    def g(profile: RingProfile, index: int) -> Optional[int]:
        return profile.record(index).dim_g0

    terms = [g(R, j), g(S, j)]
    for r in range(0, j + 2):
        a, b = g(R, r), g(S, j + 1 - r)
        terms.append(None if a is None or b is None else a * b)
    if notes or any(t is None for t in terms):
        return BoundReport(
            quantity=quantity,
            value=None,
            kind=BoundKind.UNKNOWN,
            justification=justification,
            inputs={"j": j},
            notes=tuple(notes) or ("degree-0 quotient dimensions missing",),
        )
    return BoundReport(
        quantity=quantity,
        value=sum(terms),
        kind=BoundKind.EXACT,
        justification=justification,
        inputs={"j": j, "terms": terms},
    )
