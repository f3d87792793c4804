"""Whole-ring classification of a diagonal hypersurface.

R is Cohen-Macaulay of dimension n, so H^n_m(R) is its only nonzero local
cohomology module. The window [window_lo, a] is scanned degree by degree;
the nilsupport descriptor keeps the decided stretch below a and leaves the
tail unknown.
"""

from functools import partial
from typing import List, Optional, Sequence, Tuple

import sympy

from construction_calculus.profile import CohomologyRecord, ProfileFlags, RingProfile
from errors import FrobnilError
from fmodule_calculus import DegreeSupport, HslValue, NilSupport
from hypersurface_cech.ring import HypersurfaceRing, a_invariant
from hypersurface_cech.verdicts import (
    DEFAULT_MAX_E,
    DEFAULT_MAX_TERMS,
    DegreeVerdict,
    VerdictStatus,
    degree0_rank,
    degree_verdict,
    hsl_degree0,
)
from logging_config import get_logger
from parallel_runner import run_blocking_parallel

logger = get_logger(__name__)

DEFAULT_WINDOW_FACTOR: int = 4


def default_window_lo(ring: HypersurfaceRing, window_factor: int = DEFAULT_WINDOW_FACTOR) -> int:
    return -ring.deg_f * window_factor


def smoothness_check(ring: HypersurfaceRing) -> bool:
    """Whether Proj R is smooth: the Jacobian ideal is irrelevant-primary.

    For the Fermat preset this is p not dividing deg_f. Otherwise a reduced
    Groebner basis of (f, df/dx_i) over F_p is inspected: the ideal is
    m-primary iff every variable has a pure power among the leading
    monomials.
    """
    if ring.is_fermat:
        return ring.deg_f % ring.p != 0

    gens = sympy.symbols(f"x0:{ring.n + 1}")
    g = sum(
        coef * sympy.Mul(*(x**e for x, e in zip(gens, exps)))
        for exps, coef in ring.g_terms
    )
    f = gens[-1] ** ring.deg_f - g
    ideal = [f] + [sympy.diff(f, x) for x in gens]
    ideal = [e for e in ideal if sympy.expand(e) != 0]
    if not ideal:
        return False
    basis = sympy.groebner(ideal, *gens, modulus=ring.p, order="grevlex")

    covered = set()
    for poly in basis.polys:
        lead = poly.monoms(order="grevlex")[0]
        nonzero = [i for i, e in enumerate(lead) if e]
        if not nonzero:
            return True
        if len(nonzero) == 1:
            covered.add(nonzero[0])
    smooth = len(covered) == len(gens)
    logger.debug(f"[SMOOTHNESS] {ring.label}: {smooth}")
    return smooth


def _verdict_job(ring: HypersurfaceRing, max_e: int, max_terms: int, t: int) -> DegreeVerdict:
    return degree_verdict(ring, t, max_e=max_e, max_terms=max_terms)


def scan_window(
    ring: HypersurfaceRing,
    lo: int,
    hi: int,
    max_e: int = DEFAULT_MAX_E,
    max_terms: int = DEFAULT_MAX_TERMS,
    workers: int = 1,
    use_processes: bool = False,
) -> List[DegreeVerdict]:
    """Verdicts for every degree in [lo, hi], in increasing degree order.

    Raises:
        FrobnilError: If a worker job failed
    """
    degrees = list(range(lo, hi + 1))
    job = partial(_verdict_job, ring, max_e, max_terms)
    results = run_blocking_parallel(job, degrees, max(1, workers), use_processes)
    verdicts = []
    for t, result in zip(degrees, results):
        if not result.ok:
            raise FrobnilError(f"degree {t} of {ring.label} failed: {result.error}")
        verdicts.append(result.result)
    logger.debug(f"[SCAN] {ring.label}: {len(verdicts)} degrees in [{lo}, {hi}]")
    return verdicts


def nilsupport_from_verdicts(
    verdicts: Sequence[DegreeVerdict], p: int
) -> Tuple[NilSupport, List[int]]:
    """Descriptor from window verdicts, scanning down from the top degree.

    The decided stretch ends at the first undecided degree, which is kept
    as undecided; everything below it is left to the unknown tail.

    Returns:
        (descriptor, undecided degrees of the whole window)
    """
    ordered = sorted(verdicts, key=lambda v: v.degree)
    undecided_all = [v.degree for v in ordered if not v.decided]
    if not ordered:
        return NilSupport(lo=1, hi=0, p=p), []

    hi = ordered[-1].degree
    members = []
    lo = ordered[0].degree
    undecided = []
    for verdict in reversed(ordered):
        if not verdict.decided:
            lo = verdict.degree
            undecided = [verdict.degree]
            break
        if verdict.status == VerdictStatus.NOT_NILPOTENT:
            members.append(verdict.degree)
    descriptor = NilSupport.explicit(
        lo=lo,
        hi=hi,
        members=members,
        tail_known=False,
        undecided=undecided,
        p=p,
    )
    return descriptor, undecided_all


def classify_ring(
    ring: HypersurfaceRing,
    max_e: int = DEFAULT_MAX_E,
    window_lo: Optional[int] = None,
    max_terms: int = DEFAULT_MAX_TERMS,
    workers: int = 1,
    use_processes: bool = False,
) -> Tuple[RingProfile, List[DegreeVerdict]]:
    """Profile of R together with the per-degree verdicts of the window.

    Args:
        ring: The hypersurface
        max_e: Step budget for negative degrees
        window_lo: Lowest scanned degree; defaults to -4 deg_f
        max_terms: Support budget for negative degrees
        workers: Worker count for the window scan
        use_processes: Scan in worker processes

    Raises:
        ValueError: If window_lo is positive
    """
    if window_lo is None:
        window_lo = default_window_lo(ring)
    if window_lo > 0:
        raise ValueError(f"window_lo must be <= 0, got {window_lo}")
    n, p = ring.n, ring.p
    a = a_invariant(ring)

    # degrees above a are zero spaces; they are kept when the window starts above a
    verdicts = scan_window(ring, window_lo, max(a, window_lo), max_e, max_terms, workers, use_processes)
    nilsupport, undecided = nilsupport_from_verdicts(verdicts, p)

    top = CohomologyRecord(
        index=n,
        is_zero=False,
        a_j=a,
        a_known=True,
        nilsupport=nilsupport,
        degsupp=DegreeSupport(lo=None, hi=a),
        hsl=HslValue.unknown(),
        hsl_deg0=HslValue.exact(hsl_degree0(ring)),
        dim_g0=degree0_rank(ring),
    )
    records = [CohomologyRecord.zero(j, p) for j in range(n)] + [top]

    smooth = smoothness_check(ring)
    flags = ProfileFlags(
        cm=True,
        depth_ge_2=n >= 2,
        equidimensional=True,
        generalized_cm=True,
        punctured_spectrum_f_rational=True if smooth else None,
        punctured_spectrum_f_nilpotent=True if smooth else None,
    )
    notes = []
    if not smooth:
        notes.append("F-nilpotence conditional: Proj R not certified smooth")
    if undecided:
        notes.append(f"undecided degrees within {max_e} steps: {undecided}")

    profile = RingProfile.build(
        name=ring.label,
        p=p,
        dim=n,
        records=records,
        flags=flags,
        provenance=f"engine:hypersurface g={ring.g_string()} d={ring.deg_f}",
        notes=notes,
    )
    logger.info(
        f"[CLASSIFY] {ring.label}: a={a}, b_{n}={profile.b_j(n)}, "
        f"F-nilpotent={profile.f_nilpotent.value}"
    )
    return profile, verdicts
