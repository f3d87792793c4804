"""F-depth along short exact sequences 0 -> A -> B -> C -> 0."""

from typing import Optional

from construction_calculus.profile import NatInterval
from construction_calculus.reports import BoundKind, BoundReport

POSITIONS = ("A", "B", "C")

_JUSTIFICATION = {
    "A": "F-depth A >= min{F-depth B, F-depth C + 1}",
    "B": "F-depth B >= min{F-depth A, F-depth C}",
    "C": "F-depth C >= min{F-depth B, F-depth A - 1}",
}


def _lo(interval: Optional[NatInterval]) -> float:
    return 0 if interval is None else interval.lo


def ses_fdepth_bounds(
    a: Optional[NatInterval],
    b: Optional[NatInterval],
    c: Optional[NatInterval],
    position: str,
    generalized: bool = False,
    split: bool = False,
) -> BoundReport:
    """Bound the (generalized) F-depth of one term from the other two.

    Args:
        a: F-depth interval of the submodule (None when unknown)
        b: F-depth interval of the middle term
        c: F-depth interval of the quotient
        position: Which term to bound: "A", "B" or "C"
        generalized: Label the result as gF-depth; the arithmetic is the same
        split: The sequence splits; then F-depth B = min{A, C}

    Returns:
        BoundReport with a NatInterval value
    """
    if position not in POSITIONS:
        raise ValueError(f"position must be one of {POSITIONS}, got {position!r}")
    label = "gF-depth" if generalized else "F-depth"
    justification = _JUSTIFICATION[position].replace("F-depth", label)

    if position == "B" and split and a is not None and c is not None:
        interval = NatInterval(lo=min(a.lo, c.lo), hi=min(a.hi, c.hi))
        kind = BoundKind.EXACT if interval.exact else BoundKind.INTERVAL
        justification = f"{label} B = min{{{label} A, {label} C}} for a split sequence"
    else:
        if position == "A":
            lo = min(_lo(b), _lo(c) + 1)
        elif position == "B":
            lo = min(_lo(a), _lo(c))
        else:
            lo = min(_lo(b), max(_lo(a) - 1, 0))
        interval = NatInterval.at_least(lo)
        kind = BoundKind.LOWER

    return BoundReport(
        quantity=f"{label} {position}",
        value=interval if kind != BoundKind.LOWER else interval.lo,
        kind=kind,
        justification=justification,
        inputs={"A": a, "B": b, "C": c, "split": split},
    )


def lower_bound_of(report: BoundReport) -> float:
    """Lower end of a report produced by ses_fdepth_bounds."""
    if isinstance(report.value, NatInterval):
        return report.value.lo
    return report.value
