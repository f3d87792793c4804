"""Tests for the Segre, Veronese, gluing and diagonal calculators."""

import pytest

from construction_calculus import (
    INF,
    BoundKind,
    CohomologyRecord,
    DiagonalSpec,
    NatInterval,
    ProfileFlags,
    RingProfile,
    Verdict,
    binomial_sum,
    diagonal_conditions_from_profiles,
    diagonal_fdepth,
    diagonal_hypersurface_bounds,
    diagonal_profile,
    diagonal_quotient_conditions,
    f_exp,
    glue_fdepth,
    glue_hsl_fte,
    glue_wfn_check,
    kunneth_summands,
    least_exponent_reaching,
    lower_bound_of,
    maddox_e1,
    maddox_fte_bound,
    polynomial_ring_profile,
    quy_fte_bound,
    segre_fdepth_bounds,
    segre_fte_bound,
    segre_gfdepth,
    segre_gwfn_fte_bound,
    segre_hsl_bounds,
    segre_length_deg0,
    segre_profile,
    ses_fdepth_bounds,
    veronese_fnilpotence_equivalence,
    veronese_fte_bound,
    veronese_profile,
)
from construction_calculus.profile import top_verdict
from errors import FieldError, HypothesisError
from fmodule_calculus import BValue, DegreeSupport, HslValue, NilSupport


class TestFte:
    """Tests for the Frobenius test exponent arithmetic."""

    def test_quy_bound(self):
        assert quy_fte_bound([0, 0, 1, 2], 3) == HslValue.exact(5)

    def test_quy_bound_needs_full_list(self):
        with pytest.raises(ValueError):
            quy_fte_bound([0, 1], 3)

    def test_maddox_bound(self):
        assert maddox_e1(3, 2, 3) == 2
        assert maddox_fte_bound([0, 0, 1, 2], 3, 2, 3) == HslValue.exact(7)

    def test_maddox_rejects_negative_n(self):
        with pytest.raises(ValueError):
            maddox_e1(3, -1, 3)

    def test_binomial_sum(self):
        assert binomial_sum([0, 1, 1, 2], 3) == HslValue.exact(8)
        assert binomial_sum([0, HslValue.upper(1)], 1) == HslValue.upper(1)
        assert binomial_sum([0, None], 1) == HslValue.unknown()

    def test_upper_bounds_stay_upper(self):
        assert quy_fte_bound([0, HslValue.upper(1), 1], 2) == HslValue.upper(3)

    @pytest.mark.parametrize(
        "a_j,p,expected", [(None, 7, 0), (-2, 7, 0), (0, 5, 0), (1, 7, 1), (7, 7, 2), (8, 3, 2)]
    )
    def test_f_exp(self, a_j, p, expected):
        assert f_exp(a_j, p) == expected

    def test_least_exponent_reaching(self):
        assert least_exponent_reaching(1, 5) == 0
        assert least_exponent_reaching(9, 3) == 2
        assert least_exponent_reaching(10, 3) == 3


class TestSesDepth:
    """Tests for F-depth along short exact sequences."""

    def test_positions(self):
        a, b, c = NatInterval.exactly(2), NatInterval.exactly(3), NatInterval.exactly(1)

        assert ses_fdepth_bounds(a, b, c, "A").value == 2
        assert ses_fdepth_bounds(a, b, c, "B").value == 1
        assert ses_fdepth_bounds(a, b, c, "C").value == 1

    def test_split_middle_is_exact(self):
        report = ses_fdepth_bounds(NatInterval.exactly(2), None, NatInterval.exactly(3), "B", split=True)

        assert report.kind == BoundKind.EXACT
        assert report.value == NatInterval.exactly(2)

    def test_generalized_label(self):
        report = ses_fdepth_bounds(None, NatInterval.exactly(2), None, "C", generalized=True)

        assert report.quantity == "gF-depth C"

    def test_lower_bound_of(self):
        a, c = NatInterval.exactly(2), NatInterval.exactly(3)

        assert lower_bound_of(ses_fdepth_bounds(None, c, a, "A")) == 3
        assert lower_bound_of(ses_fdepth_bounds(a, None, c, "B", split=True)) == 2

    def test_bad_position(self):
        with pytest.raises(ValueError):
            ses_fdepth_bounds(None, None, None, "D")


class TestSegre:
    """Tests for Segre products."""

    def test_kunneth_labels_at_p13(self, quartic_p13, poly2_p13):
        _, summands = segre_profile(quartic_p13, poly2_p13)
        by_index = {s.index: s.labels for s in summands}

        assert by_index[0] == []
        assert by_index[1] == []
        assert by_index[2] == ["H^2(R) # S"]
        assert by_index[3] == ["H^2(R) # H^2(S)"]

    def test_depths_at_p13(self, quartic_p13, poly2_p13):
        T, _ = segre_profile(quartic_p13, poly2_p13)

        fdepth = segre_fdepth_bounds(quartic_p13, poly2_p13, T)
        gfdepth = segre_gfdepth(quartic_p13, poly2_p13, T)

        assert T.dim == 3
        assert fdepth.value == 2
        assert fdepth.kind == BoundKind.EXACT
        assert fdepth.verdict == Verdict.FALSE
        assert gfdepth.value == 3
        assert gfdepth.verdict == Verdict.TRUE

    def test_weakly_f_nilpotent_at_p7(self, quartic_p7, poly2_p7):
        T, _ = segre_profile(quartic_p7, poly2_p7)
        report = segre_fdepth_bounds(quartic_p7, poly2_p7, T)

        assert T.wfn == Verdict.TRUE
        assert T.fdepth == NatInterval.exactly(3)
        assert T.b_ring.lo == INF
        assert "b(T) = inf" in report.notes

    def test_mixed_primes(self, quartic_p7, poly2_p13):
        with pytest.raises(FieldError):
            segre_profile(quartic_p7, poly2_p13)

    def test_depth_hypothesis(self, quartic_p7):
        line = polynomial_ring_profile(7, 1)

        with pytest.raises(HypothesisError) as exc_info:
            segre_profile(quartic_p7, line)

        assert "depth" in exc_info.value.hypothesis

    def test_kunneth_summand_hsl(self, quartic_p7, poly2_p7):
        report = kunneth_summands(quartic_p7, poly2_p7, 2)

        assert report.labels == ["H^2(R) # S"]
        assert report.summands[0].nonzero is True

    def test_length_deg0(self, quartic_p13, poly2_p13):
        report = segre_length_deg0(quartic_p13, poly2_p13, 2)

        assert report.kind == BoundKind.EXACT
        assert report.value == 3

    def test_length_outside_range(self, quartic_p13, poly2_p13):
        report = segre_length_deg0(quartic_p13, poly2_p13, 3)

        assert report.kind == BoundKind.UNKNOWN
        assert not report.determined

    def test_fte_needs_infinite_b(self, quartic_p13, poly2_p13):
        with pytest.raises(HypothesisError):
            segre_fte_bound(quartic_p13, poly2_p13)

    def test_fte_of_polynomial_rings(self):
        R, S = polynomial_ring_profile(5, 2), polynomial_ring_profile(5, 3)

        report = segre_fte_bound(R, S)

        assert report.value == {"refined": 0, "coarse": 0}
        assert report.kind == BoundKind.UPPER

    def test_hsl_bounds_of_polynomial_rings(self):
        R, S = polynomial_ring_profile(7, 2), polynomial_ring_profile(7, 2)

        bounds = segre_hsl_bounds(R, S)

        assert [h.value for h in bounds] == [0, 0, 0, 0]

    def test_hsl_bounds_need_weak_f_nilpotence(self, poly2_p7):
        open_ring = RingProfile.build(
            name="open", p=7, dim=2, records=[], flags=ProfileFlags(depth_ge_2=True)
        )

        with pytest.raises(HypothesisError):
            segre_hsl_bounds(open_ring, poly2_p7)

    def test_gwfn_fte_needs_annihilator(self, quartic_p7, poly2_p7):
        with pytest.raises(HypothesisError):
            segre_gwfn_fte_bound(quartic_p7, poly2_p7)

    def test_gwfn_fte_of_polynomial_rings(self):
        R, S = polynomial_ring_profile(3, 2), polynomial_ring_profile(3, 2)

        report = segre_gwfn_fte_bound(R, S)

        # N = 0, d_T = 3: p^e1 >= 4 needs e1 = 2
        assert report.inputs["e_1"] == 2
        assert report.value == 2


class TestVeronese:
    """Tests for Veronese subrings."""

    def test_identity(self, quartic_p5):
        assert veronese_profile(quartic_p5, 1) is quartic_p5

    def test_bad_degree(self, quartic_p5):
        with pytest.raises(ValueError):
            veronese_profile(quartic_p5, 0)

    def test_fdepth_kept_when_b_is_zero(self, quartic_p5):
        profile = veronese_profile(quartic_p5, 3)

        assert profile.fdepth == NatInterval.exactly(2)
        assert profile.b_j(2) == BValue(value=0)
        assert any(note.startswith("b_2(R) = 0") for note in profile.notes)

    def test_degree_zero_survives(self, quartic_p5):
        record = veronese_profile(quartic_p5, 2).record(2)

        assert record.a_j == 0
        assert record.is_zero is False
        assert record.dim_g0 == 3

    def test_top_degree_known_only_when_exact(self):
        top = CohomologyRecord(
            index=2,
            is_zero=False,
            a_j=3,
            a_known=True,
            nilsupport=NilSupport.empty(7),
            degsupp=DegreeSupport(lo=1, hi=3),
            dim_g0=0,
        )
        R = RingProfile.build(
            name="top3", p=7, dim=2, records=[CohomologyRecord.zero(0, 7), CohomologyRecord.zero(1, 7), top]
        )

        halved = veronese_profile(R, 2).record(2)
        thirds = veronese_profile(R, 3).record(2)

        # degree 2 of R^(2) may vanish, so 1 is only an upper bound
        assert halved.a_known is False
        assert halved.a_j is None
        assert halved.fexp_input is None
        assert thirds.a_known is True
        assert thirds.a_j == 1
        assert thirds.is_zero is False

    def test_floor_to_nonzero_degree_zero_is_exact(self, quartic_p7):
        record = veronese_profile(quartic_p7, 3).record(2)

        assert quartic_p7.record(2).a_j == 1
        assert record.a_known is True
        assert record.a_j == 0

    def test_fnilpotence_equivalence(self, quartic_p7, quartic_p5):
        yes = veronese_fnilpotence_equivalence(quartic_p7, [1, 2, 3])
        no = veronese_fnilpotence_equivalence(quartic_p5, [2])

        assert yes.value == {1: Verdict.TRUE, 2: Verdict.TRUE, 3: Verdict.TRUE}
        assert yes.verdict == Verdict.TRUE
        assert no.verdict == Verdict.FALSE

    def test_fnilpotence_needs_punctured_hypothesis(self):
        unflagged = RingProfile.build(
            name="bare", p=7, dim=2, records=polynomial_ring_profile(7, 2).records
        )

        report = veronese_fnilpotence_equivalence(unflagged, [2])

        assert report.verdict == Verdict.UNKNOWN
        assert any(n.startswith("hypothesis not satisfied") for n in report.notes)

    def test_fte_bound(self, poly2_p7):
        assert veronese_fte_bound(poly2_p7).value == 0
        assert veronese_fte_bound(poly2_p7, generalized=True).value == 0

    def test_fte_bound_unknown_hsl(self, quartic_p7):
        report = veronese_fte_bound(quartic_p7)

        assert report.kind == BoundKind.UNKNOWN
        assert report.value is None


class TestGluing:
    """Tests for the gluing calculators."""

    def test_fdepth_exact_when_b_is_shallow(self):
        report = glue_fdepth(NatInterval.exactly(2), NatInterval.exactly(2), NatInterval.exactly(0))

        assert report.kind == BoundKind.EXACT
        assert report.value == 1

    def test_fdepth_lower_bound(self):
        report = glue_fdepth(NatInterval.exactly(2), NatInterval.exactly(3), NatInterval.exactly(2))

        assert report.kind == BoundKind.LOWER
        assert report.value == 2

    def test_generalized_label(self):
        report = glue_fdepth(
            NatInterval.exactly(2), NatInterval.exactly(2), NatInterval.exactly(1), generalized=True
        )

        assert report.quantity == "gF-depth R"

    def test_wfn_check(self):
        report = glue_wfn_check((2, 2, 2, 1), [Verdict.TRUE, True, Verdict.TRUE])

        assert report.verdict == Verdict.TRUE
        assert report.notes == ()

    def test_wfn_check_failing_hypotheses(self):
        report = glue_wfn_check((2, 2, 1, 0), [True, None, True])

        assert report.verdict == Verdict.UNKNOWN
        assert "hypothesis not satisfied: dim R/a_1 = dim R/a_2 = d" in report.notes
        assert "hypothesis not satisfied: dim R/(a_1 + a_2) >= d - 1" in report.notes
        assert "hypothesis not satisfied: R/a_2 weakly F-nilpotent" in report.notes

    def test_generalized_needs_equidimensional(self):
        report = glue_wfn_check((2, 2, 2, 1), [True, True, True], generalized=True)

        assert report.verdict == Verdict.UNKNOWN
        assert "hypothesis not satisfied: R is equidimensional" in report.notes

    def test_wfn_check_needs_three_verdicts(self):
        with pytest.raises(ValueError):
            glue_wfn_check((2, 2, 2, 1), [True, True])

    def test_hsl_fte_case_d(self):
        report = glue_hsl_fte([1, 1], [0, 1, 1], 2)

        assert report.value["fte"] == 6
        assert report.value["hsl_bounds"] == {0: "0", 1: "2", 2: "2"}

    def test_hsl_fte_case_d_minus_one(self):
        report = glue_hsl_fte([0, 0], [0, 0, 0], 2, case="d-1", hsl_top=2)

        assert report.value["fte"] == 2

    def test_hsl_fte_needs_top(self):
        with pytest.raises(HypothesisError):
            glue_hsl_fte([0], [0, 0, 0], 2, case="d-1")

    def test_hsl_fte_bad_case(self):
        with pytest.raises(ValueError):
            glue_hsl_fte([0], [0, 0, 0], 2, case="d+1")

    def test_hsl_fte_limited_by_fdepth(self):
        report = glue_hsl_fte([1, 1], [0, 1, 1], 2, fdepth_b=NatInterval.exactly(1))

        assert list(report.value["hsl_bounds"]) == [0, 1]
        assert report.notes


class TestDiagonal:
    """Tests for diagonal subalgebras and their hypersurface quotients."""

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            DiagonalSpec(0, 0)
        with pytest.raises(ValueError):
            DiagonalSpec(-1, 2)
        assert str(DiagonalSpec(2, 3)) == "(2,3)"

    def test_linear_forms(self):
        spec = DiagonalSpec(2, 3, d1=1, d2=2)

        assert spec.l1(2) == 3
        assert spec.l2(1) == 1

    def test_unit_diagonal_is_segre(self, quartic_p7, poly2_p7):
        T, _ = segre_profile(quartic_p7, poly2_p7)

        assert diagonal_profile(quartic_p7, poly2_p7, DiagonalSpec(1, 1)) == T

    def test_zero_entry_is_veronese(self, quartic_p7, poly2_p7):
        assert diagonal_profile(quartic_p7, poly2_p7, DiagonalSpec(3, 0)) == veronese_profile(quartic_p7, 3)
        assert diagonal_profile(quartic_p7, poly2_p7, DiagonalSpec(0, 2)) == veronese_profile(poly2_p7, 2)

    @pytest.mark.parametrize("g,h", [(2, 2), (3, 2), (2, 3)])
    def test_fdepth_example(self, quartic_p7, cubic_p7, g, h):
        report = diagonal_fdepth(quartic_p7, cubic_p7, DiagonalSpec(g, h))

        assert report.value == 2
        assert report.kind == BoundKind.EXACT
        assert report.inputs["dim T_Delta"] == 3
        assert report.verdict == Verdict.FALSE

    def test_verdict_follows_top_rule(self, quartic_p7, cubic_p7, poly2_p7):
        assert top_verdict(NatInterval.exactly(3), 3) == Verdict.TRUE
        assert top_verdict(NatInterval(lo=1, hi=2), 3) == Verdict.FALSE
        assert top_verdict(NatInterval(lo=2, hi=3), 3) == Verdict.UNKNOWN

        report = diagonal_fdepth(quartic_p7, cubic_p7, DiagonalSpec(2, 2))
        T = diagonal_profile(quartic_p7, poly2_p7, DiagonalSpec(2, 2))

        assert report.verdict == top_verdict(NatInterval.exactly(report.value), report.inputs["dim T_Delta"])
        assert T.wfn == top_verdict(T.fdepth, T.dim)

    def test_conditions_example(self, quartic_p7, cubic_p7):
        spec = DiagonalSpec(2, 2, d1=1, d2=1)

        conditions, fdepth, quotient = diagonal_conditions_from_profiles(quartic_p7, cubic_p7, spec)

        assert conditions.verdict == Verdict.TRUE
        assert all(conditions.value.values())
        assert fdepth.value == 2
        assert quotient.value == 2
        assert quotient.verdict == Verdict.TRUE
        assert "(T/fT)_Delta weakly F-nilpotent" in quotient.notes

    def test_conditions_dims_mismatch(self, quartic_p7, cubic_p7):
        spec = DiagonalSpec(2, 2, d1=1, d2=1)

        *_, quotient = diagonal_conditions_from_profiles(quartic_p7, cubic_p7, spec, dims_match=False)

        assert quotient.verdict == Verdict.UNKNOWN

    def test_conditions_fail_on_integral_degenerate_case(self):
        report = diagonal_quotient_conditions(0, 0, DiagonalSpec(1, 1, d1=1, d2=1))

        assert report.verdict == Verdict.FALSE
        assert list(report.value.values()) == [True, True, False]

    def test_conditions_with_negative_infinity(self):
        report = diagonal_quotient_conditions(BValue.neg_inf(), None, DiagonalSpec(1, 1, d1=1, d2=2))

        assert report.verdict == Verdict.TRUE

    def test_conditions_note_upper_bounds(self):
        report = diagonal_quotient_conditions(BValue.upper(-1), -INF, DiagonalSpec(2, 2, d1=1, d2=1))

        assert "b(R) is an upper bound <= -1" in report.notes

    def test_conditions_need_positive_entries(self):
        with pytest.raises(ValueError):
            diagonal_quotient_conditions(0, 0, DiagonalSpec(2, 0))

    def test_hypersurface_bounds(self, quartic_p7, poly2_p7):
        T, _ = segre_profile(quartic_p7, poly2_p7)

        plain, generalized = diagonal_hypersurface_bounds(T, dims_match=True)
        mismatch, _ = diagonal_hypersurface_bounds(T, dims_match=False)

        assert plain.value == 2
        assert plain.verdict == Verdict.TRUE
        assert generalized.quantity == "gF-depth (T/fT)_Delta"
        assert mismatch.verdict == Verdict.UNKNOWN
