import math

import numpy as np
import pytest

from taletailor.metrics.distributions import EPSILON, TokenDistribution, kl_divergence, tale_like


def direct_kl(q, p, eps=EPSILON):
    """Independent oracle: plain sum of q * ln(q / p)."""
    total = 0.0
    for qi, pi in zip(q, p):
        if qi > 0:
            total += qi * math.log(qi / max(pi, eps))
    return total


class TestTokenDistribution:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            TokenDistribution([0.5, -0.1, 0.6])

    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            TokenDistribution([0.5, 0.4])

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            TokenDistribution([float("nan"), 1.0])

    def test_accepts_tolerated_sum(self):
        TokenDistribution([0.5, 0.5 + 5e-10])

    def test_from_logits_is_softmax(self):
        d = TokenDistribution.from_logits([0.0, 0.0, 0.0])
        np.testing.assert_allclose(d.probabilities, [1 / 3] * 3, atol=1e-12)
        d2 = TokenDistribution.from_logits([1000.0, 0.0])
        assert d2.probabilities[0] > 0.999

    def test_vocabulary_length_checked(self):
        with pytest.raises(ValueError):
            TokenDistribution([0.5, 0.5], ("a", "b", "c"))


class TestKLDivergence:
    def test_identical_is_zero(self):
        d = TokenDistribution([0.2, 0.3, 0.5])
        assert kl_divergence(d, d) == 0.0

    def test_hand_example(self):
        value = kl_divergence(TokenDistribution([0.9, 0.1]), TokenDistribution([0.5, 0.5]))
        expected = 0.9 * math.log(1.8) + 0.1 * math.log(0.2)
        assert value == pytest.approx(expected, abs=1e-12)
        assert value == pytest.approx(0.3681, abs=5e-5)

    def test_zero_in_reference_is_clamped(self):
        value = kl_divergence(TokenDistribution([0.5, 0.5]), TokenDistribution([1.0, 0.0]))
        assert math.isfinite(value)
        assert value > 0

    def test_size_mismatch_raises(self):
        with pytest.raises(ValueError):
            kl_divergence(TokenDistribution([1.0]), TokenDistribution([0.5, 0.5]))

    def test_matches_oracle_on_random_pairs(self):
        rng = np.random.default_rng(42)
        for _ in range(200):
            n = int(rng.integers(2, 40))
            q = rng.dirichlet(np.ones(n))
            p = rng.dirichlet(np.ones(n))
            value = kl_divergence(TokenDistribution(q), TokenDistribution(p))
            assert value == pytest.approx(direct_kl(q, p), abs=1e-9)
            assert value >= 0


class TestTaleLike:
    def test_identical_lists_score_zero(self):
        dists = [TokenDistribution([0.25, 0.75]), TokenDistribution([0.6, 0.4])]
        assert tale_like(dists, dists) == 0.0

    def test_single_position_hand_value(self):
        preset = [TokenDistribution([0.5, 0.5])]
        finetuned = [TokenDistribution([0.9, 0.1])]
        assert tale_like(preset, finetuned) == pytest.approx(0.3680642071684971, abs=1e-12)

    def test_mean_over_positions(self):
        p1, q1 = TokenDistribution([0.5, 0.5]), TokenDistribution([0.9, 0.1])
        p2, q2 = TokenDistribution([0.3, 0.7]), TokenDistribution([0.7, 0.3])
        a = tale_like([p1], [q1])
        b = tale_like([p2], [q2])
        both = tale_like([p1, p2], [q1, q2])
        assert both == pytest.approx((a + b) / 2, abs=1e-12)

    def test_length_mismatch_raises(self):
        d = TokenDistribution([1.0])
        with pytest.raises(ValueError):
            tale_like([d, d], [d])

    def test_empty_lists_raise(self):
        with pytest.raises(ValueError):
            tale_like([], [])

    def test_nonnegative_and_zero_iff_equal(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(2, 20))
            p = rng.dirichlet(np.ones(n))
            q = rng.dirichlet(np.ones(n))
            score = tale_like([TokenDistribution(p)], [TokenDistribution(q)])
            assert score >= 0
            if not np.allclose(p, q):
                assert score > 0
