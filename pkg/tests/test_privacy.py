# tests/test_privacy.py
# ShuffleLDP v1.0.0 - Test per aritmetica di privacy e hockey-stick
# ============================================================================

import math

import numpy as np
import pytest

from core.errors import InvalidParameterError, OutOfRegimeError
from core.privacy import (
    PrivacyParams,
    SubsampleRate,
    advanced_composition,
    advanced_composition_simplified,
    as_probability_vector,
    hockey_stick_delta,
    is_dp_close,
    rr_probability,
    scale_factor,
    subsample_amplify,
    total_variation,
    triangle_closeness,
)


# ---------------------------------------------------------------------------
# Randomized response
# ---------------------------------------------------------------------------

class TestRandomizedResponseConstants:

    def test_rr_probability_at_zero_is_half(self):
        assert rr_probability(0.0) == 0.5

    def test_rr_probability_known_value(self):
        # e^{ε/2} = 3 → p = 3/4
        assert rr_probability(2 * math.log(3)) == pytest.approx(0.75)

    def test_rr_probability_large_epsilon_no_overflow(self):
        assert rr_probability(5000.0) == 1.0

    def test_scale_factor_is_inverse_of_bias(self):
        for eps in (0.1, 0.5, 1.0, 3.0):
            p = rr_probability(eps)
            assert scale_factor(eps) * (2 * p - 1) == pytest.approx(1.0)

    def test_scale_factor_known_value(self):
        assert scale_factor(2 * math.log(3)) == pytest.approx(2.0)

    def test_scale_factor_rejects_zero(self):
        with pytest.raises(InvalidParameterError):
            scale_factor(0.0)

    def test_negative_epsilon_rejected(self):
        with pytest.raises(InvalidParameterError):
            rr_probability(-0.1)


# ---------------------------------------------------------------------------
# Composizione e sottocampionamento
# ---------------------------------------------------------------------------

class TestComposition:

    def test_advanced_composition_formula(self):
        eps, k, dp = 0.1, 10, 1e-5
        result = advanced_composition(eps, 1e-7, k, dp)
        expected = eps * math.sqrt(2 * k * math.log(1 / dp)) + k * eps * math.expm1(eps)
        assert result.epsilon == pytest.approx(expected)
        assert result.delta == pytest.approx(10 * 1e-7 + dp)

    def test_advanced_composition_monotone_in_k(self):
        small = advanced_composition(0.2, 0.0, 5, 1e-6).epsilon
        large = advanced_composition(0.2, 0.0, 50, 1e-6).epsilon
        assert large > small

    def test_advanced_composition_rejects_bad_k(self):
        with pytest.raises(InvalidParameterError):
            advanced_composition(0.1, 0.0, 0, 1e-6)

    def test_simplified_form(self):
        assert advanced_composition_simplified(0.5, 8, math.exp(-1)) == pytest.approx(2 * 0.5 * 4.0)

    def test_simplified_form_out_of_regime(self):
        with pytest.raises(OutOfRegimeError):
            advanced_composition_simplified(1.5, 8, 1e-6)

    def test_subsample_amplify(self):
        assert subsample_amplify(1.0, 0.25) == pytest.approx(math.log(0.25 * (math.e - 1) + 1))
        assert subsample_amplify(1.0, SubsampleRate(0.25)) == subsample_amplify(1.0, 0.25)

    def test_subsample_amplify_never_exceeds_epsilon(self):
        for eps in (0.01, 0.5, 2.0, 10.0):
            assert subsample_amplify(eps, 0.49) < eps

    @pytest.mark.parametrize("q", [0.0, 0.5, 0.7, -0.1])
    def test_subsample_rate_bounds(self, q):
        with pytest.raises(InvalidParameterError):
            SubsampleRate(q)

    def test_triangle_closeness(self):
        combined = triangle_closeness(PrivacyParams(0.5, 1e-6), PrivacyParams(0.25, 2e-6))
        assert combined.epsilon == pytest.approx(0.75)
        assert combined.delta == pytest.approx(3e-6)

    def test_privacy_params_validation(self):
        with pytest.raises(InvalidParameterError):
            PrivacyParams(-1.0)
        with pytest.raises(InvalidParameterError):
            PrivacyParams(1.0, 1.0)
        assert PrivacyParams(1.0, 0.1).to_dict() == {"epsilon": 1.0, "delta": 0.1}

    def test_privacy_params_infinite_epsilon(self):
        assert PrivacyParams(math.inf).epsilon == math.inf
        with pytest.raises(InvalidParameterError):
            PrivacyParams(float("nan"))

    def test_advanced_composition_unrepresentable_growth(self):
        result = advanced_composition(800.0, 0.0, 2, 1e-6)
        assert result.epsilon == math.inf
        assert result.delta == pytest.approx(1e-6)


# ---------------------------------------------------------------------------
# Hockey-stick
# ---------------------------------------------------------------------------

class TestHockeyStick:

    def test_identical_distributions(self):
        p = [0.2, 0.3, 0.5]
        assert hockey_stick_delta(p, p, 0.0) == 0.0

    def test_epsilon_zero_is_total_variation(self):
        p, q = [0.7, 0.2, 0.1], [0.1, 0.3, 0.6]
        assert hockey_stick_delta(p, q, 0.0) == pytest.approx(total_variation(p, q))
        assert total_variation(p, q) == pytest.approx(0.6)

    def test_symmetric(self):
        p, q = [0.6, 0.3, 0.1], [0.2, 0.2, 0.6]
        for eps in (0.0, 0.3, 1.0):
            assert hockey_stick_delta(p, q, eps) == hockey_stick_delta(q, p, eps)

    @pytest.mark.parametrize("eps", [700.0, 701.0, 1e6, math.inf])
    def test_disjoint_support_is_never_pure_dp(self, eps):
        assert hockey_stick_delta([1.0, 0.0], [0.0, 1.0], eps) == 1.0
        assert hockey_stick_delta([0.5, 0.5], [1.0, 0.0], eps) == pytest.approx(0.5)
        assert not is_dp_close([1.0, 0.0], [0.0, 1.0], eps, 0.0)

    def test_shared_support_vanishes_at_large_epsilon(self):
        assert hockey_stick_delta([0.2, 0.8], [0.5, 0.5], 701.0) == 0.0
        assert hockey_stick_delta([0.2, 0.8], [0.5, 0.5], math.inf) == 0.0

    def test_both_branches_on_every_event(self):
        # e^{-ε}(Q(A) − δ) ≤ P(A) ≤ e^ε Q(A) + δ, con uguaglianza sull'evento peggiore
        p = np.array([0.5, 0.25, 0.15, 0.1])
        q = np.array([0.1, 0.2, 0.3, 0.4])
        eps = 0.4
        delta = hockey_stick_delta(p, q, eps)
        worst = 0.0
        for mask in range(1 << p.size):
            event = np.array([(mask >> i) & 1 for i in range(p.size)], dtype=bool)
            p_a, q_a = p[event].sum(), q[event].sum()
            assert p_a <= math.exp(eps) * q_a + delta + 1e-12
            assert math.exp(-eps) * (q_a - delta) <= p_a + 1e-12
            worst = max(worst, p_a - math.exp(eps) * q_a, q_a - math.exp(eps) * p_a)
        assert worst == pytest.approx(delta)

    def test_binary_rr_is_pure_dp_at_its_epsilon(self):
        p, q = [0.75, 0.25], [0.25, 0.75]
        assert hockey_stick_delta(p, q, math.log(3)) == pytest.approx(0.0, abs=1e-15)
        assert hockey_stick_delta(p, q, 0.5 * math.log(3)) > 0

    def test_monotone_non_increasing_in_epsilon(self):
        p, q = [0.5, 0.4, 0.1], [0.1, 0.3, 0.6]
        deltas = [hockey_stick_delta(p, q, e) for e in np.linspace(0, 3, 13)]
        assert all(a >= b for a, b in zip(deltas, deltas[1:]))

    def test_disjoint_support(self):
        assert hockey_stick_delta([1.0, 0.0], [0.0, 1.0], 5.0) == 1.0

    def test_is_dp_close(self):
        p, q = [0.75, 0.25], [0.25, 0.75]
        assert is_dp_close(p, q, math.log(3), 0.0)
        assert not is_dp_close(p, q, 0.1, 0.0)

    def test_rejects_unnormalized(self):
        with pytest.raises(InvalidParameterError):
            hockey_stick_delta([0.5, 0.4], [0.5, 0.5], 0.1)

    def test_rejects_negative_entries(self):
        with pytest.raises(InvalidParameterError):
            as_probability_vector([1.2, -0.2])

    def test_rejects_shape_mismatch(self):
        with pytest.raises(InvalidParameterError):
            hockey_stick_delta([1.0], [0.5, 0.5], 0.1)
