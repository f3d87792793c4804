"""Report records emitted by the construction calculators."""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from fmodule_calculus import DegreeSupport, HslValue, NilSupport

from construction_calculus.profile import NatInterval, Verdict


class BoundKind:
    EXACT = "exact"
    LOWER = "lower"
    UPPER = "upper"
    INTERVAL = "interval"
    VERDICT = "verdict"
    CONDITIONS = "conditions"
    UNKNOWN = "unknown"


def jsonable(value: Any) -> Any:
    """Convert report values to plain JSON types with stable markers."""
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, float) and value.is_integer():
        return int(value)
    if isinstance(value, NatInterval):
        return {"lo": jsonable(value.lo), "hi": jsonable(value.hi)}
    if isinstance(value, Verdict):
        return value.value
    if isinstance(value, HslValue):
        return {"kind": value.kind.value, "value": value.value}
    if isinstance(value, (NilSupport, DegreeSupport)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class BoundReport:
    """One calculated quantity with the theorem that justifies it.

    Attributes:
        quantity: What was computed, e.g. "F-depth T"
        value: Number, interval, HslValue or mapping
        kind: One of BoundKind
        justification: Statement of the theorem used
        inputs: Echo of the inputs the value depends on
        verdict: Yes/no conclusion, when the quantity has one
        notes: Clauses that fired, asserted hypotheses relied on, conflicts
    """

    quantity: str
    value: Any
    kind: str
    justification: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    verdict: Optional[Verdict] = None
    notes: Tuple[str, ...] = ()

    @property
    def determined(self) -> bool:
        if self.kind == BoundKind.UNKNOWN:
            return False
        return self.verdict is None or self.verdict.known

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "quantity": self.quantity,
            "kind": self.kind,
            "value": jsonable(self.value),
        }
        if self.verdict is not None:
            out["verdict"] = self.verdict.value
        out["justification"] = self.justification
        out["inputs"] = jsonable(self.inputs)
        out["notes"] = list(self.notes)
        return out

    def line(self) -> str:
        """Single text line for human-readable output."""
        value = self.value
        if isinstance(value, dict):
            value = ", ".join(f"{k}={_show(v)}" for k, v in value.items())
        else:
            value = _show(value)
        text = f"{self.quantity}: {value} ({self.kind})"
        if self.verdict is not None:
            text += f" -> {self.verdict.value}"
        return text


def _show(value: Any) -> str:
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    if isinstance(value, Verdict):
        return value.value
    return str(value)


@dataclass(frozen=True)
class KunnethSummand:
    """One summand of the Kunneth decomposition of H^j_T(T)."""

    label: str
    nilsupport: NilSupport
    degsupp: DegreeSupport
    hsl: HslValue
    hsl_deg0: HslValue
    dim_g0: Optional[int]
    nonzero: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "nilsupport": str(self.nilsupport),
            "degsupp": str(self.degsupp),
            "hsl": jsonable(self.hsl),
            "hsl_deg0": jsonable(self.hsl_deg0),
            "dim_g0": self.dim_g0,
            "nonzero": self.nonzero,
        }


@dataclass(frozen=True)
class KunnethSummandReport:
    """Kunneth summands of H^j_T(T) for one index j.

    Mixed summands range over r + s = j + 1; summands that are certainly
    zero are kept out of `summands` and counted in `dropped`.
    """

    index: int
    summands: Tuple[KunnethSummand, ...]
    dropped: int = 0

    @property
    def labels(self) -> List[str]:
        return [s.label for s in self.summands]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "summands": [s.to_dict() for s in self.summands],
            "dropped_zero_summands": self.dropped,
        }
