"""Tests for the hypersurface local cohomology engine."""

from itertools import product
from math import comb

import pytest
from sympy import primerange

from construction_calculus import Verdict
from errors import FieldError, RingSpecError
from fmodule_calculus import BValue
from hypersurface_cech import (
    CechClass,
    HypersurfaceRing,
    Polynomial,
    VerdictStatus,
    a_invariant,
    apply_frobenius,
    basis_at_degree,
    classify_ring,
    degree0_matrix,
    degree0_rank,
    degree_verdict,
    expand_g_power,
    frobenius_image,
    frobenius_layer,
    hsl_degree0,
    nilsupport_from_verdicts,
    parse_terms,
    reduce_polynomial,
    scan_window,
    smoothness_check,
    target_degree,
)

from tests.conftest import TEST_MAX_E, TEST_WINDOW_LO


def frobenius_power_image(ring, cls, e):
    """F^e of one class from a single expansion of g at exponent p^e."""
    power = ring.p**e
    q, r = divmod(cls.xn_exp * power, ring.deg_f)
    image = {}
    for mono, coef in expand_g_power(ring, q).items():
        denom = tuple(power * c - m for c, m in zip(cls.denom, mono))
        if min(denom) < 1:
            continue
        target = CechClass.of(r, denom)
        image[target] = (image.get(target, 0) + coef) % ring.p
    return {k: v for k, v in image.items() if v}


def enumerate_degree0(n: int, d: int) -> int:
    """Count x_n^j / x^c with 0 <= j < d, c_i >= 1 and j = sum(c) by brute force."""
    count = 0
    for j in range(d):
        for denom in product(range(1, d + 1), repeat=n):
            if sum(denom) == j:
                count += 1
    return count


class TestRingDescriptor:
    """Tests for ring validation and term parsing."""

    def test_fermat_preset(self):
        ring = HypersurfaceRing.fermat(7, 2, 4)

        assert ring.is_fermat
        assert ring.dim == 2
        assert ring.g_terms == (((0, 4), 1), ((4, 0), 1))
        assert ring.label == "fermat(d=4,n=2,p=7)"
        assert a_invariant(ring) == 1

    def test_non_prime_characteristic(self):
        with pytest.raises(FieldError):
            HypersurfaceRing.fermat(4, 2, 4)

    def test_g_must_be_homogeneous(self):
        with pytest.raises(RingSpecError) as exc_info:
            HypersurfaceRing(p=7, n=2, deg_f=4, g_terms=(((4, 0), 1), ((0, 3), 1)))

        assert "homogeneous" in str(exc_info.value)

    def test_terms_are_combined_mod_p(self):
        ring = HypersurfaceRing(p=5, n=2, deg_f=2, g_terms=(((2, 0), 3), ((2, 0), 2), ((1, 1), 1)))

        assert ring.g_terms == (((1, 1), 1),)
        assert not ring.is_fermat

    def test_parse_terms(self):
        terms = parse_terms("4,0:1; 0,4:3", width=2)

        assert terms == (((4, 0), 1), ((0, 4), 3))

    def test_parse_terms_default_coefficient(self):
        assert parse_terms("2,2", width=2) == (((2, 2), 1),)

    @pytest.mark.parametrize("text", ["a,b:1", "4,0:x", "4,0,0:1", "", " ; "])
    def test_parse_terms_rejects(self, text):
        with pytest.raises(RingSpecError):
            parse_terms(text, width=2)

    def test_cech_class_degree(self):
        cls = CechClass.of(2, (1, 1))

        assert cls.degree == 0
        assert str(cls) == "[x_n^2/(x0^1*x1^1)]"

    def test_cech_class_rejects_zero_denominator(self):
        with pytest.raises(RingSpecError):
            CechClass.of(1, (0, 1))


class TestBasis:
    """Tests for the Cech basis of graded pieces."""

    @pytest.mark.parametrize("d", range(2, 9))
    @pytest.mark.parametrize("n", range(1, 5))
    def test_degree0_dimension_law(self, n, d):
        ring = HypersurfaceRing.fermat(11, n, d)

        size = len(basis_at_degree(ring, 0))

        assert size == comb(d - 1, n)
        assert size == enumerate_degree0(n, d)

    def test_zero_above_a_invariant(self):
        ring = HypersurfaceRing.fermat(7, 2, 4)

        assert basis_at_degree(ring, 1)
        assert basis_at_degree(ring, 2) == []

    def test_basis_is_sorted(self):
        ring = HypersurfaceRing.fermat(3, 2, 4)
        basis = basis_at_degree(ring, -1)

        assert basis == sorted(basis)
        assert all(cls.degree == -1 for cls in basis)
        assert len(basis) == 6


class TestFrobeniusLayers:
    """Tests for Frobenius images and layer matrices."""

    @pytest.mark.parametrize("p", [7, 11, 19, 23])
    def test_quartic_zero_at_minus_one_mod_four(self, p):
        layer = degree0_matrix(HypersurfaceRing.fermat(p, 2, 4))

        assert layer.matrix.shape == (3, 3)
        assert layer.matrix.is_zero()

    @pytest.mark.parametrize("p", [5, 13, 17, 29])
    def test_quartic_invertible_at_one_mod_four(self, p):
        layer = degree0_matrix(HypersurfaceRing.fermat(p, 2, 4))

        assert layer.matrix.shape == (3, 3)
        assert layer.matrix.rank() == 3

    def test_quartic_p13_diagonal(self):
        matrix = degree0_matrix(HypersurfaceRing.fermat(13, 2, 4)).matrix

        assert matrix.to_rows() == [[7, 0, 0], [0, 6, 0], [0, 0, 6]]

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("d", [3, 4, 5, 6])
    def test_fermat_lemma_family(self, d, n):
        for p in primerange(d + 1, 100):
            if p % d != d - 1:
                continue
            matrix = degree0_matrix(HypersurfaceRing.fermat(int(p), n, d)).matrix
            assert matrix.is_zero(), f"d={d} n={n} p={p}"

    def test_cubic(self):
        assert degree0_matrix(HypersurfaceRing.fermat(7, 2, 3)).matrix.to_rows() == [[6]]
        assert degree0_matrix(HypersurfaceRing.fermat(5, 2, 3)).matrix.to_rows() == [[0]]

    def test_grading_contract(self):
        ring = HypersurfaceRing.fermat(3, 2, 4)

        for t in (-2, -1, 0, 1):
            for cls in basis_at_degree(ring, t):
                for image in frobenius_image(ring, cls):
                    assert image.degree == 3 * t

    @pytest.mark.parametrize(
        "ring,t,e",
        [
            (HypersurfaceRing.fermat(3, 2, 4), -1, 2),
            (HypersurfaceRing.fermat(3, 2, 4), -1, 3),
            (HypersurfaceRing.fermat(2, 3, 5), -2, 3),
            (HypersurfaceRing(p=5, n=2, deg_f=3, g_terms=(((3, 0), 1), ((1, 2), 2), ((0, 3), 4))), -1, 2),
        ],
    )
    def test_layer_composition_matches_direct_power(self, ring, t, e):
        layers = [frobenius_layer(ring, t)]
        for _ in range(e - 1):
            layers.append(frobenius_layer(ring, layers[-1].target_degree))
        composite = layers[0].matrix
        for layer in layers[1:]:
            composite = layer.matrix @ composite
        columns = list(zip(*composite.to_rows()))

        for col, cls in enumerate(layers[0].source_basis):
            direct = frobenius_power_image(ring, cls, e)
            expected = tuple(direct.get(target, 0) for target in layers[-1].target_basis)
            assert columns[col] == expected
            assert set(direct) <= set(layers[-1].target_basis)

    def test_linearity(self):
        ring = HypersurfaceRing.fermat(3, 2, 4)
        layer = frobenius_layer(ring, -1)
        vector = {cls: 1 for cls in layer.source_basis}

        image = apply_frobenius(ring, vector)
        column = layer.matrix.apply([1] * layer.matrix.cols)

        assert column == tuple(image.get(cls, 0) for cls in layer.target_basis)

    def test_twisted_target_degree(self):
        ring = HypersurfaceRing.fermat(7, 2, 4)
        u = Polynomial(p=7, terms=(((1, 0, 0), 1),), nvars=3)

        assert target_degree(ring, -1, u) == -6
        assert frobenius_layer(ring, -1, u).target_degree == -6

    def test_reduce_polynomial(self):
        ring = HypersurfaceRing.fermat(7, 2, 4)
        u = Polynomial(p=7, terms=(((0, 0, 4), 1),), nvars=3)

        reduced = reduce_polynomial(ring, u)

        assert reduced.terms == (((0, 4, 0), 1), ((4, 0, 0), 1))

    def test_reduce_polynomial_wrong_width(self):
        ring = HypersurfaceRing.fermat(7, 2, 4)

        with pytest.raises(RingSpecError):
            reduce_polynomial(ring, Polynomial.constant(1, 7, 2))

    def test_inhomogeneous_multiplier(self):
        u = Polynomial(p=7, terms=(((1, 0, 0), 1), ((0, 0, 0), 1)), nvars=3)

        with pytest.raises(RingSpecError):
            u.degree


class TestDegreeVerdicts:
    """Tests for per-degree nilpotence verdicts."""

    def test_zero_matrix_is_nilpotent(self):
        verdict = degree_verdict(HypersurfaceRing.fermat(7, 2, 4), 0)

        assert verdict.status == VerdictStatus.NILPOTENT
        assert verdict.exponent == 1
        assert verdict.dimension == 3
        assert verdict.in_nilsupport is False

    def test_invertible_matrix_is_not_nilpotent(self):
        verdict = degree_verdict(HypersurfaceRing.fermat(5, 2, 4), 0)

        assert verdict.status == VerdictStatus.NOT_NILPOTENT
        assert verdict.in_nilsupport is True
        assert verdict.describe() == "not nilpotent"

    def test_above_a_invariant_is_zero_space(self):
        verdict = degree_verdict(HypersurfaceRing.fermat(5, 2, 4), 2)

        assert verdict.status == VerdictStatus.ZERO_SPACE
        assert verdict.decided

    @pytest.mark.parametrize("p", [5, 7, 13])
    def test_positive_degree_always_nilpotent(self, p):
        ring = HypersurfaceRing.fermat(p, 2, 5)

        for t in range(1, a_invariant(ring) + 1):
            verdict = degree_verdict(ring, t)
            assert verdict.status == VerdictStatus.NILPOTENT
            assert verdict.kernel_chain.filled

    def test_budget_must_be_positive(self):
        with pytest.raises(ValueError):
            degree_verdict(HypersurfaceRing.fermat(5, 2, 4), -1, max_e=0)

    def test_negative_degree_respects_budget(self):
        verdict = degree_verdict(HypersurfaceRing.fermat(5, 2, 4), -1, max_e=TEST_MAX_E)

        assert len(verdict.kernel_chain.dims) <= TEST_MAX_E
        if not verdict.decided:
            assert verdict.exponent == len(verdict.kernel_chain.dims)

    def test_degree0_hsl_and_rank(self):
        zero = HypersurfaceRing.fermat(7, 2, 4)
        invertible = HypersurfaceRing.fermat(5, 2, 4)

        assert hsl_degree0(zero) == 1
        assert degree0_rank(zero) == 0
        assert hsl_degree0(invertible) == 0
        assert degree0_rank(invertible) == 3


class TestSmoothness:
    """Tests for the Jacobian smoothness check."""

    @pytest.mark.parametrize(
        "p,d,expected", [(7, 4, True), (2, 4, False), (5, 5, False), (7, 3, True)]
    )
    def test_fermat(self, p, d, expected):
        assert smoothness_check(HypersurfaceRing.fermat(p, 2, d)) is expected

    def test_diagonal_with_coefficients(self):
        ring = HypersurfaceRing(p=7, n=2, deg_f=4, g_terms=(((4, 0), 1), ((0, 4), 2)))

        assert smoothness_check(ring) is True

    def test_singular_curve(self):
        ring = HypersurfaceRing(p=7, n=2, deg_f=4, g_terms=(((2, 2), 1),))

        assert smoothness_check(ring) is False


class TestClassifyRing:
    """Tests for whole-ring classification."""

    def test_quartic_p7_is_f_nilpotent(self, quartic_p7):
        assert quartic_p7.dim == 2
        assert quartic_p7.record(0).is_zero
        assert quartic_p7.record(1).is_zero
        assert quartic_p7.record(2).a_j == 1
        assert quartic_p7.b_j(2).is_zero() is False
        assert quartic_p7.wfn == Verdict.TRUE
        assert quartic_p7.f_nilpotent == Verdict.TRUE

    def test_quartic_p5_is_not_f_nilpotent(self, quartic_p5):
        assert quartic_p5.b_j(2) == BValue(value=0)
        assert quartic_p5.f_nilpotent == Verdict.FALSE
        assert quartic_p5.record(2).dim_g0 == 3

    def test_cubic_p7_b_is_zero(self, cubic_p7):
        assert cubic_p7.b_j(2) == BValue(value=0)
        assert cubic_p7.record(2).a_j == 0

    def test_no_member_at_positive_degree(self, quartic_p5, quartic_p13, cubic_p7):
        for profile in (quartic_p5, quartic_p13, cubic_p7):
            nilsupport = profile.record(profile.dim).nilsupport
            assert all(t <= 0 for t in nilsupport.members)
            assert nilsupport.check_p_closure(profile.p) == []

    def test_positive_window_rejected(self):
        with pytest.raises(ValueError):
            classify_ring(HypersurfaceRing.fermat(7, 2, 4), window_lo=1)

    def test_window_starting_at_zero_keeps_degree_zero(self):
        ring = HypersurfaceRing.fermat(7, 2, 5)

        _, verdicts = classify_ring(ring, max_e=TEST_MAX_E, window_lo=0)

        assert [v.degree for v in verdicts] == list(range(0, a_invariant(ring) + 1))

    def test_window_above_a_invariant(self):
        # a = 3 - 1 - 3 < 0, so the scan is just the zero degree-0 piece
        ring = HypersurfaceRing.fermat(7, 3, 3)

        profile, verdicts = classify_ring(ring, max_e=TEST_MAX_E, window_lo=0)

        assert [v.degree for v in verdicts] == [0]
        assert verdicts[0].status == VerdictStatus.ZERO_SPACE
        assert profile.record(3).a_j == -1

    def test_nilsupport_from_verdicts(self):
        ring = HypersurfaceRing.fermat(5, 2, 4)
        verdicts = [degree_verdict(ring, t, max_e=TEST_MAX_E) for t in range(TEST_WINDOW_LO, 2)]

        descriptor, undecided = nilsupport_from_verdicts(verdicts, 5)

        assert descriptor.membership(0) is True
        assert descriptor.membership(1) is False
        assert set(undecided) <= {-2, -1}

    def test_nilsupport_from_no_verdicts(self):
        descriptor, undecided = nilsupport_from_verdicts([], 5)

        assert undecided == []
        assert not descriptor.members

    def test_conditional_note_when_not_smooth(self):
        profile, _ = classify_ring(
            HypersurfaceRing.fermat(2, 2, 4), max_e=TEST_MAX_E, window_lo=TEST_WINDOW_LO
        )

        assert any("conditional" in note for note in profile.notes)
        assert profile.flags.punctured_spectrum_f_rational is None

    def test_scan_window_order_and_workers(self):
        ring = HypersurfaceRing.fermat(7, 2, 4)

        inline = scan_window(ring, -1, 2, max_e=TEST_MAX_E)
        pooled = scan_window(ring, -1, 2, max_e=TEST_MAX_E, workers=2)

        assert [v.degree for v in inline] == [-1, 0, 1, 2]
        assert [v.status for v in pooled] == [v.status for v in inline]
        assert inline[-1].status == VerdictStatus.ZERO_SPACE
