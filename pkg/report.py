"""Report assembly and rendering for CLI commands.

A Report collects everything one command produced, renders it as text or
JSON in a fixed field order, and decides the exit status.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import orjson

from construction_calculus import BoundReport, KunnethSummandReport, RingProfile, Verdict, jsonable
from hypersurface_cech import DegreeVerdict

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2


def verdict_to_dict(verdict: DegreeVerdict) -> Dict[str, Any]:
    chain = verdict.kernel_chain
    return {
        "degree": verdict.degree,
        "status": verdict.status.value,
        "exponent": verdict.exponent,
        "dimension": verdict.dimension,
        "kernel_chain": list(chain.dims),
    }


def profile_summary(profile: RingProfile) -> Dict[str, Any]:
    """Profile overview including every b_j."""
    out: Dict[str, Any] = dict(profile.summary())
    out["b_j"] = {str(j): str(profile.b_j(j)) for j in range(profile.dim + 1)}
    if profile.notes:
        out["notes"] = list(profile.notes)
    return out


@dataclass
class Report:
    """Everything one CLI command emits.

    Attributes:
        command: Subcommand name
        inputs: Echo of the parsed inputs
        bounds: Calculator results
        verdicts: Per-degree verdicts of a window scan
        kunneth: Per-index Kunneth summands
        profiles: Profiles whose summaries are shown
        table: Rows of a sweep
        lines: Extra text lines (matrix dumps, headlines)
        strict: Also count unknown profile verdicts and failed hypotheses
    """

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    bounds: List[BoundReport] = field(default_factory=list)
    verdicts: List[DegreeVerdict] = field(default_factory=list)
    kunneth: List[KunnethSummandReport] = field(default_factory=list)
    profiles: List[RingProfile] = field(default_factory=list)
    table: Optional[List[Dict[str, Any]]] = None
    lines: List[str] = field(default_factory=list)
    strict: bool = False

    def add(self, *reports: BoundReport) -> "Report":
        self.bounds.extend(reports)
        return self

    @property
    def undetermined(self) -> List[str]:
        """Quantities whose value or verdict stayed unknown."""
        missing = [b.quantity for b in self.bounds if not b.determined]
        if self.table is not None:
            missing += [
                f"row p={row.get('p')}" for row in self.table if row.get("status") == "unknown"
            ]
        if self.strict:
            for profile in self.profiles:
                for label, verdict in (
                    ("weakly F-nilpotent", profile.wfn),
                    ("F-nilpotent", profile.f_nilpotent),
                ):
                    if verdict == Verdict.UNKNOWN:
                        missing.append(f"{profile.name}: {label}")
            missing += [f"t={v.degree}" for v in self.verdicts if not v.decided]
            missing += [
                f"{b.quantity}: {note}"
                for b in self.bounds
                for note in b.notes
                if note.startswith("hypothesis not satisfied")
            ]
        return missing

    @property
    def exit_status(self) -> int:
        return EXIT_UNKNOWN if self.undetermined else EXIT_OK

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "command": self.command,
            "inputs": jsonable(self.inputs),
        }
        if self.profiles:
            out["profiles"] = [profile_summary(p) for p in self.profiles]
        if self.verdicts:
            out["verdicts"] = [verdict_to_dict(v) for v in self.verdicts]
        if self.kunneth:
            out["kunneth"] = [k.to_dict() for k in self.kunneth]
        if self.table is not None:
            out["table"] = jsonable(self.table)
        out["reports"] = [b.to_dict() for b in self.bounds]
        if self.lines:
            out["lines"] = list(self.lines)
        out["exit_status"] = self.exit_status
        return out

    def render_json(self) -> str:
        return orjson.dumps(self.to_dict(), option=orjson.OPT_INDENT_2).decode()

    def render_text(self) -> str:
        out: List[str] = []
        for profile in self.profiles:
            summary = profile_summary(profile)
            out.append(f"== {summary.pop('name')} ==")
            b_values = summary.pop("b_j")
            notes = summary.pop("notes", [])
            for key, value in summary.items():
                out.append(f"{key}: {value}")
            out.extend(f"b_{j} = {value}" for j, value in b_values.items())
            out.extend(f"note: {n}" for n in notes)
        if self.verdicts:
            out.append("degree verdicts:")
            out.extend(f"  t={v.degree}: {v.describe()}" for v in self.verdicts)
        for k in self.kunneth:
            labels = ", ".join(k.labels) if k.labels else "0"
            out.append(f"H^{k.index}_T = {labels}")
        if self.table is not None:
            out.extend(render_table(self.table))
        for bound in self.bounds:
            out.append(bound.line())
            out.append(f"  by: {bound.justification}")
            out.extend(f"  note: {n}" for n in bound.notes)
        out.extend(self.lines)
        return "\n".join(out)

    def render(self, as_json: bool = False) -> str:
        return self.render_json() if as_json else self.render_text()


def render_table(rows: Sequence[Dict[str, Any]]) -> List[str]:
    """Fixed-width table with the column order of the first row."""
    if not rows:
        return ["(no rows)"]
    columns = list(rows[0])
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    header = "  ".join(f"{c:<{w}}" for c, w in zip(columns, widths))
    lines = [header, "-" * len(header)]
    for r in cells:
        lines.append("  ".join(f"{v:<{w}}" for v, w in zip(r, widths)))
    return lines


def _cell(value: Any) -> str:
    value = jsonable(value)
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
