"""
Tests for the Hirota bilinear recurrence engine
"""
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.conditions import star_residual
from src.painleve import FamilyId, preset
from src.polyring import ONE, Poly
from src.recurrence import (
    HCoeffs,
    HirotaSpec,
    InvalidSpecError,
    StepFailure,
    certificate,
    h_at,
    hirota_generate,
    hirota_rhs,
    hirota_step,
    reconstruct_ok,
)

X = Poly.x()


def P(*coeffs):
    return Poly(tuple(Fraction(c) for c in coeffs))


@pytest.fixture
def p2_spec():
    return preset(FamilyId.P2)


@pytest.fixture
def failing_spec():
    """f = g = 1, h = x: (*) residual is -2, so some P_n is not a polynomial"""
    return HirotaSpec(f=ONE, g=ONE, h=HCoeffs(p=X), seed0=ONE, seed1=ONE)


class TestHCoeffs:

    def test_evaluation(self):
        h = HCoeffs(p=X, alpha=Fraction(3, 8), beta=Fraction(1))
        assert h_at(h, 0) == X
        assert h_at(h, 2) == X + Fraction(3, 4) + 2

    def test_negative_index(self):
        with pytest.raises(ValueError):
            h_at(HCoeffs(p=X), -1)

    @settings(max_examples=50, deadline=None)
    @given(
        st.fractions(min_value=-5, max_value=5, max_denominator=8),
        st.fractions(min_value=-5, max_value=5, max_denominator=8),
        st.lists(st.integers(-4, 4), max_size=4),
    )
    def test_pivot_identity(self, alpha, beta, pcoeffs):
        h = HCoeffs(p=Poly(tuple(Fraction(c) for c in pcoeffs)), alpha=alpha, beta=beta)
        for n in range(2, 21):
            lhs = h_at(h, n - 1).scale(-2) + h_at(h, n)
            rhs = -h_at(h, n - 2) + 2 * beta
            assert lhs == rhs


class TestHirotaSpec:

    def test_common_factor_rejected(self):
        with pytest.raises(InvalidSpecError):
            HirotaSpec(f=X, g=X * X, h=HCoeffs(p=X), seed0=ONE, seed1=ONE)

    def test_zero_seed_rejected(self):
        with pytest.raises(InvalidSpecError):
            HirotaSpec(f=ONE, g=ONE, h=HCoeffs(p=X), seed0=Poly(), seed1=ONE)

    def test_all_zero_rejected(self):
        with pytest.raises(InvalidSpecError):
            HirotaSpec(f=Poly(), g=Poly(), h=HCoeffs(p=Poly()), seed0=ONE, seed1=ONE)


class TestGenerate:

    def test_yablonskii_vorobev_first_terms(self, p2_spec):
        report = hirota_generate(p2_spec, 3)
        assert report.is_successful
        assert report.polys == [ONE, X, P(4, 0, 0, 1), P(-80, 0, 0, 20, 0, 0, 1)]
        assert report.degrees == [0, 1, 3, 6]

    def test_yablonskii_vorobev_degrees_and_integrality(self, p2_spec):
        report = hirota_generate(p2_spec, 12)
        assert report.is_successful
        for n, p in report.entries:
            assert p.degree == n * (n + 1) // 2
            assert p.denominator_lcm == 1
        assert all(report.coprimality_flags)
        assert all(report.squarefree_flags)
        assert reconstruct_ok(p2_spec, report)

    @pytest.mark.slow
    def test_yablonskii_vorobev_to_twenty(self, p2_spec):
        report = hirota_generate(p2_spec, 20)
        assert report.is_successful
        for n, p in report.entries:
            assert p.degree == n * (n + 1) // 2
            assert p.denominator_lcm == 1

    @pytest.mark.slow
    def test_yablonskii_vorobev_to_twenty_five(self, p2_spec):
        report = hirota_generate(p2_spec, 25)
        assert report.is_successful
        assert report.polys[25].degree == 325

    def test_p4a_second_term(self):
        report = hirota_generate(preset(FamilyId.P4A), 2)
        assert report.polys[2] == P(1, 0, 1)

    def test_horizon_must_be_positive(self, p2_spec):
        with pytest.raises(ValueError):
            hirota_generate(p2_spec, 0)

    def test_step_failure_pinpointed(self, failing_spec):
        report = hirota_generate(failing_spec, 10)
        assert not report.is_successful
        assert report.failure == StepFailure(n=4, remainder=P(-2), divisor=X)
        assert report.polys == [ONE, ONE, X, P(-1, 1, 0, 1)]
        assert len(report.entries) == report.failure.n

    def test_step_returns_failure_object(self, failing_spec):
        step = hirota_step(failing_spec, X, P(-1, 1, 0, 1), 3)
        assert isinstance(step, StepFailure)
        assert step.n == 4

    def test_step_zero_divisor(self, failing_spec):
        with pytest.raises(ZeroDivisionError):
            hirota_step(failing_spec, Poly(), ONE, 1)

    def test_rhs_needs_nonzero(self, failing_spec):
        with pytest.raises(ValueError):
            hirota_rhs(failing_spec, Poly(), 1)


class TestCertificate:

    def test_p2_certified(self, p2_spec):
        report = certificate(p2_spec, 12)
        assert report.strict
        assert report.certified
        assert report.first_violation is None
        assert [c.n for c in report.checks] == list(range(2, 13))

    def test_failure_recorded_in_checks(self, failing_spec):
        report = certificate(failing_spec, 8)
        assert not report.certified
        assert report.first_violation == 4
        assert not report.checks[-1].divides

    def test_needs_two_steps(self, p2_spec):
        with pytest.raises(ValueError):
            certificate(p2_spec, 1)


class TestConverseEvidence:
    """Specs violating (*) stop producing polynomials"""

    def test_random_violations_fail_early(self):
        rng = random.Random(20240601)
        checked = 0
        while checked < 50:
            f = Poly(tuple(Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))))
            g = Poly(tuple(Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))))
            if f.is_zero or star_residual(f, g).satisfied:
                continue
            try:
                spec = HirotaSpec(f=f, g=g, h=HCoeffs(p=X), seed0=ONE, seed1=ONE)
            except InvalidSpecError:
                continue
            report = hirota_generate(spec, 10)
            assert report.failure is not None, f"f={f}, g={g} stayed polynomial"
            assert report.failure.n <= 10
            checked += 1
