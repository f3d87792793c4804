"""Tests for report assembly, rendering and exit status."""

import orjson

from construction_calculus import (
    BoundKind,
    BoundReport,
    RingProfile,
    Verdict,
    polynomial_ring_profile,
)
from report import EXIT_OK, EXIT_UNKNOWN, Report, profile_summary, render_table


def exact_bound(quantity="F-depth T", value=3, **kwargs):
    return BoundReport(
        quantity=quantity,
        value=value,
        kind=BoundKind.EXACT,
        justification="F-depth T >= min{b(R), b(S), f}",
        **kwargs,
    )


def unflagged_profile():
    return RingProfile.build(
        name="bare", p=7, dim=2, records=polynomial_ring_profile(7, 2).records
    )


class TestExitStatus:
    """Tests for exit status with and without --strict."""

    def test_determined_report(self):
        report = Report(command="segre").add(exact_bound(verdict=Verdict.TRUE))

        assert report.undetermined == []
        assert report.exit_status == EXIT_OK

    def test_unknown_value(self):
        report = Report(command="fte").add(
            BoundReport(quantity="Fte R", value=None, kind=BoundKind.UNKNOWN, justification="-")
        )

        assert report.undetermined == ["Fte R"]
        assert report.exit_status == EXIT_UNKNOWN

    def test_unknown_verdict(self):
        report = Report(command="segre").add(exact_bound(verdict=Verdict.UNKNOWN))

        assert report.exit_status == EXIT_UNKNOWN

    def test_unknown_sweep_row(self):
        report = Report(command="sweep", table=[{"p": 5, "status": "ok"}, {"p": 7, "status": "unknown"}])

        assert report.undetermined == ["row p=7"]

    def test_strict_counts_failed_hypotheses(self):
        bound = exact_bound(
            verdict=Verdict.TRUE, notes=("hypothesis not satisfied: R is equidimensional",)
        )

        assert Report(command="glue").add(bound).exit_status == EXIT_OK
        assert Report(command="glue", strict=True).add(bound).exit_status == EXIT_UNKNOWN

    def test_strict_counts_profile_verdicts(self):
        bare = unflagged_profile()

        assert bare.f_nilpotent == Verdict.UNKNOWN
        assert Report(command="polynomial", profiles=[bare]).exit_status == EXIT_OK

        strict = Report(command="polynomial", profiles=[bare], strict=True)
        assert strict.undetermined == ["bare: F-nilpotent"]
        assert strict.exit_status == EXIT_UNKNOWN

    def test_strict_with_decided_profile(self):
        report = Report(command="polynomial", profiles=[polynomial_ring_profile(7, 2)], strict=True)

        assert report.exit_status == EXIT_OK


class TestRendering:
    """Tests for text and JSON rendering."""

    def test_text_lists_bounds_with_justification(self):
        report = Report(command="segre").add(exact_bound(verdict=Verdict.FALSE, notes=("b(T) = inf",)))
        report.lines.append("weakly F-nilpotent: false")

        text = report.render()

        assert "F-depth T: 3 (exact) -> false" in text
        assert "  by: F-depth T >= min{b(R), b(S), f}" in text
        assert "  note: b(T) = inf" in text
        assert text.endswith("weakly F-nilpotent: false")

    def test_text_profile_block(self):
        text = Report(command="polynomial", profiles=[polynomial_ring_profile(5, 2)]).render()

        assert text.startswith("== F_5[y_1..y_2] ==")
        assert "F-nilpotent: true" in text
        assert "b_2 = -2" in text

    def test_json_field_order(self):
        report = Report(command="segre", inputs={"R": "a", "S": "b"}, profiles=[polynomial_ring_profile(7, 2)])
        report.add(exact_bound(value=float("inf")))

        doc = orjson.loads(report.render(as_json=True))

        assert list(doc) == ["command", "inputs", "profiles", "reports", "exit_status"]
        assert doc["reports"][0]["value"] == "inf"
        assert doc["profiles"][0]["b_j"] == {"0": "-inf", "1": "-inf", "2": "-2"}

    def test_profile_summary_notes(self):
        profile = polynomial_ring_profile(7, 2).with_notes("checked by hand")

        assert profile_summary(profile)["notes"] == ["checked by hand"]


class TestRenderTable:
    """Tests for fixed-width sweep tables."""

    def test_cells(self):
        lines = render_table([{"p": 5, "zero matrix": False, "T wfn": None}, {"p": 11, "zero matrix": True, "T wfn": "true"}])

        assert lines[0].split() == ["p", "zero", "matrix", "T", "wfn"]
        assert lines[2].split() == ["5", "false", "-"]
        assert lines[3].split() == ["11", "true", "true"]

    def test_empty(self):
        assert render_table([]) == ["(no rows)"]
