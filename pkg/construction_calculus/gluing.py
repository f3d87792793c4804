"""Gluing R = R/a_1 x_{R/b} R/a_2 along b = a_1 + a_2.

The calculators work on asserted data for the three pieces; cohomology of
the quotient rings is never recomputed here.
"""

from typing import Optional, Sequence, Tuple, Union

from errors import HypothesisError
from fmodule_calculus import HslValue

from construction_calculus.fte import binomial_sum
from construction_calculus.profile import NatInterval, Verdict
from construction_calculus.reports import BoundKind, BoundReport
from logging_config import get_logger

logger = get_logger(__name__)

VerdictLike = Union[Verdict, bool, None]


def _verdict(value: VerdictLike) -> Verdict:
    if isinstance(value, Verdict):
        return value
    return Verdict.of(value)


def glue_fdepth(
    f1: NatInterval, f2: NatInterval, fb: NatInterval, generalized: bool = False
) -> BoundReport:
    """Lower bound min{F-depth R/a_1, F-depth R/a_2, F-depth R/b + 1}.

    When F-depth R/b + 1 is below both F-depths of the pieces the glued ring
    attains it exactly.

    Args:
        f1: F-depth of R/a_1
        f2: F-depth of R/a_2
        fb: F-depth of R/b (lo may be infinite for a zero module)
        generalized: Inputs are gF-depths; the result is a gF-depth
    """
    label = "gF-depth" if generalized else "F-depth"
    pieces_lo = min(f1.lo, f2.lo)
    if fb.hi + 1 < pieces_lo:
        interval = NatInterval(lo=fb.lo + 1, hi=fb.hi + 1)
        kind = BoundKind.EXACT if interval.exact else BoundKind.INTERVAL
        value = interval.lo if interval.exact else interval
        justification = f"{label} R = {label} R/b + 1 when it is below {label} R/a_i"
    else:
        value = min(pieces_lo, fb.lo + 1)
        kind = BoundKind.LOWER
        justification = f"{label} R >= min{{{label} R/a_1, {label} R/a_2, {label} R/b + 1}}"
    return BoundReport(
        quantity=f"{label} R",
        value=value,
        kind=kind,
        justification=justification,
        inputs={"R/a_1": f1, "R/a_2": f2, "R/b": fb},
    )


def glue_wfn_check(
    dims: Tuple[int, int, int, int],
    verdicts: Sequence[VerdictLike],
    equidim: bool = False,
    generalized: bool = False,
) -> BoundReport:
    """Weak F-nilpotence of the glued ring from that of its pieces.

    Args:
        dims: (dim R, dim R/a_1, dim R/a_2, dim R/b)
        verdicts: (Generalized) weak F-nilpotence of R/a_1, R/a_2, R/b
        equidim: R is equidimensional (needed for the generalized variant)
        generalized: Check generalized weak F-nilpotence
    """
    d, d1, d2, db = dims
    label = "generalized weakly F-nilpotent" if generalized else "weakly F-nilpotent"
    inputs = [_verdict(v) for v in verdicts]
    if len(inputs) != 3:
        raise ValueError("expected verdicts for R/a_1, R/a_2 and R/b")

    failures = []
    if not (d1 == d and d2 == d):
        failures.append("dim R/a_1 = dim R/a_2 = d")
    if db < d - 1:
        failures.append("dim R/(a_1 + a_2) >= d - 1")
    if generalized and not equidim:
        failures.append("R is equidimensional")
    missing = [name for name, v in zip(("R/a_1", "R/a_2", "R/b"), inputs) if v != Verdict.TRUE]
    if missing:
        failures.append(f"{', '.join(missing)} {label}")

    holds = not failures
    if not holds:
        logger.debug(f"[GLUE_CHECK] hypotheses failing: {failures}")
    return BoundReport(
        quantity=f"R {label}",
        value=holds,
        kind=BoundKind.VERDICT,
        justification=f"if R/a_1, R/a_2 and R/b are {label}, so is R",
        inputs={"dims": list(dims), "verdicts": inputs, "equidimensional": equidim},
        verdict=Verdict.TRUE if holds else Verdict.UNKNOWN,
        notes=tuple(f"hypothesis not satisfied: {f}" for f in failures),
    )


def glue_hsl_fte(
    h_b: Sequence[Union[int, HslValue, None]],
    h_max: Sequence[Union[int, HslValue, None]],
    d: int,
    case: str = "d",
    hsl_top: Union[int, HslValue, None] = None,
    fdepth_b: Optional[NatInterval] = None,
) -> BoundReport:
    """HSL bounds HSL H^j(R) <= HSL H^{j-1}(R/b) + h_j and the Fte bound.

    Args:
        h_b: HSL H^j(R/b) for j = 0..len-1
        h_max: h_j = max of HSL H^j(R/a_1), HSL H^j(R/a_2), j = 0..d
        d: dim R
        case: "d" when dim R/b = d, "d-1" when dim R/b = d - 1
        hsl_top: HSL H^d(R), required in case "d-1"
        fdepth_b: F-depth of R/b; when given, per-index bounds are limited
            to j <= F-depth R/b

    Raises:
        HypothesisError: If hsl_top is missing in case "d-1"
        ValueError: If case is not "d" or "d-1"
    """
    if case not in ("d", "d-1"):
        raise ValueError(f"case must be 'd' or 'd-1', got {case!r}")
    if case == "d-1" and hsl_top is None:
        raise HypothesisError("Fte R", "HSL H^d_m(R) is required when dim R/b = d - 1")

    def hb(j: int) -> HslValue:
        if j < 0 or j >= len(h_b):
            return HslValue.exact(0)
        return HslValue.coerce(h_b[j])

    def hm(j: int) -> HslValue:
        if j >= len(h_max):
            return HslValue.exact(0)
        return HslValue.coerce(h_max[j])

    top = d if case == "d" else d - 1
    limit = top if fdepth_b is None else min(top, fdepth_b.lo)
    per_index = {j: str(hb(j - 1) + hm(j)) for j in range(0, int(limit) + 1)}

    shifted = [hb(j - 1) for j in range(d + 1)]
    total = binomial_sum(shifted, d, start=1, stop=top) + binomial_sum(list(h_max), d, stop=top)
    if case == "d-1":
        total = total + HslValue.coerce(hsl_top)
    kind = BoundKind.UNKNOWN if not total.is_known else BoundKind.UPPER
    notes = ()
    if limit < top:
        notes = (f"per-index bounds limited to j <= F-depth R/b = {limit}",)
    return BoundReport(
        quantity="Fte R",
        value={"fte": total.value, "hsl_bounds": per_index},
        kind=kind,
        justification=(
            "HSL H^j(R) <= HSL H^{j-1}(R/b) + h_j; Fte R <= sum C(d,j) HSL H^{j-1}(R/b)"
            " + sum C(d,j) h_j" + (" + HSL H^d(R)" if case == "d-1" else "")
        ),
        inputs={
            "h_b": [str(hb(j)) for j in range(len(h_b))],
            "h": [str(hm(j)) for j in range(d + 1)],
            "d": d,
            "case": case,
        },
        notes=notes,
    )

