# tests/test_client.py
# ShuffleLDP v1.0.0 - Test per il client longitudinale
# ============================================================================

import math

import numpy as np
import pytest
from scipy import stats

from core.errors import InvalidParameterError, ProtocolError
from core.randomness import RandomnessStream
from mechanisms import binary_rr, uniform_sign
from longitudinal import (
    ClientState,
    Report,
    clip_changes,
    client_setup,
    client_update,
    count_clipped,
    max_transcript_privacy_loss,
    pad_horizon,
    run_client,
    state_path,
    transcript_distribution,
)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _make_state(d: int = 4, k: int = 1, kappa_star: int = 1, h_star: int = 2) -> ClientState:
    return ClientState(d=d, k=k, kappa_star=kappa_star, h_star=h_star)


def _draw_at(rng: RandomnessStream, counter: int) -> RandomnessStream:
    """Copia dello stream posizionata su un contatore."""
    copy = RandomnessStream(rng.seed, rng.stream_id)
    copy.seek(counter)
    return copy


# ---------------------------------------------------------------------------
# Setup
# ---------------------------------------------------------------------------

class TestClientSetup:

    def test_k_one_forces_kappa_star(self):
        levels = set()
        for i in range(200):
            state = client_setup(8, 1, RandomnessStream(5, i))
            assert state.kappa_star == 1
            levels.add(state.h_star)
        assert levels == {1, 2, 3, 4}

    def test_single_timestep(self):
        for i in range(20):
            assert client_setup(1, 3, RandomnessStream(5, i)).h_star == 1

    def test_initial_counters(self):
        state = client_setup(8, 4, RandomnessStream(1, 1))
        assert (state.kappa, state.c, state.t_last) == (0, 0, 0)

    def test_joint_uniformity(self):
        counts = np.zeros((4, 4))
        for i in range(16_000):
            state = client_setup(8, 4, RandomnessStream(9, i))
            counts[state.kappa_star - 1, state.h_star - 1] += 1
        assert stats.chisquare(counts.ravel()).pvalue > 1e-4

    def test_requires_fresh_stream(self):
        rng = RandomnessStream(3, 0)
        rng.next_uniform()
        with pytest.raises(ProtocolError):
            client_setup(8, 2, rng)
        assert rng.counter == 1

    @pytest.mark.parametrize("d,k", [(6, 1), (0, 1), (8, 0)])
    def test_invalid(self, d, k, rng):
        with pytest.raises(InvalidParameterError):
            client_setup(d, k, rng)


# ---------------------------------------------------------------------------
# Update
# ---------------------------------------------------------------------------

class TestClientUpdate:

    def test_hand_trace(self, rng):
        state = _make_state(d=4, k=1, kappa_star=1, h_star=2)
        eps = 1.0
        assert client_update(state, 1, 0, eps, rng) is None
        report = client_update(state, 2, 1, eps, rng)
        assert (report.h, report.t) == (2, 2)
        assert report.u == binary_rr(1, eps, _draw_at(rng, 2))
        assert state.c == 0
        assert client_update(state, 3, 0, eps, rng) is None
        report = client_update(state, 4, 0, eps, rng)
        assert (report.h, report.t) == (2, 4)
        assert report.u == uniform_sign(_draw_at(rng, 3))

    def test_level_one_reports_every_step(self, rng):
        state = _make_state(d=8, h_star=1)
        reports = [client_update(state, t, 0, 1.0, rng) for t in range(1, 9)]
        assert [r.t for r in reports] == list(range(1, 9))

    def test_change_after_kappa_star_ignored(self, rng):
        state = _make_state(d=4, k=2, kappa_star=1, h_star=3)
        client_update(state, 1, 1, 1.0, rng)
        client_update(state, 2, -1, 1.0, rng)
        assert state.kappa == 2
        assert state.c == 1

    def test_out_of_order(self, rng):
        state = _make_state()
        client_update(state, 1, 0, 1.0, rng)
        with pytest.raises(ProtocolError):
            client_update(state, 3, 0, 1.0, rng)
        with pytest.raises(ProtocolError):
            client_update(state, 1, 0, 1.0, rng)

    def test_beyond_horizon(self, rng):
        state = _make_state(d=1, h_star=1)
        client_update(state, 1, 0, 1.0, rng)
        with pytest.raises(ProtocolError):
            client_update(state, 2, 0, 1.0, rng)

    def test_invalid_change_value(self, rng):
        with pytest.raises(InvalidParameterError):
            client_update(_make_state(), 1, 2, 1.0, rng)

    def test_epsilon_must_stay_constant(self, rng):
        state = _make_state()
        client_update(state, 1, 0, 1.0, rng)
        with pytest.raises(ProtocolError):
            client_update(state, 2, 0, 2.0, rng)


# ---------------------------------------------------------------------------
# Esecuzione completa
# ---------------------------------------------------------------------------

class TestRunClient:

    def test_report_count_is_data_independent(self):
        rng_x = np.random.default_rng(0)
        for i in range(100):
            x = clip_changes(rng_x.integers(-1, 2, size=16), 3)
            stream = RandomnessStream(11, i)
            reports = run_client(x, 3, 1.0, stream)
            state = client_setup(16, 3, RandomnessStream(11, i))
            assert len(reports) == 16 // state.period
            assert all(r.h == state.h_star for r in reports)

    def test_zero_input_gives_pure_noise(self):
        signs = []
        for i in range(3000):
            signs += [r.u for r in run_client(np.zeros(4, dtype=np.int8), 1, 5.0, RandomnessStream(12, i))]
        assert abs(np.mean(signs)) < 5 / math.sqrt(len(signs))

    def test_deterministic(self):
        x = [0, 1, 0, -1, 0, 0, 1, 0]
        assert run_client(x, 3, 1.0, RandomnessStream(3, 7)) == run_client(x, 3, 1.0, RandomnessStream(3, 7))

    def test_matches_exact_distribution(self):
        x = [0, 1]
        exact = transcript_distribution(x, 1, 1.0)
        runs = 20_000
        counts = {}
        for i in range(runs):
            transcript = tuple(run_client(x, 1, 1.0, RandomnessStream(13, i)))
            counts[transcript] = counts.get(transcript, 0) + 1
        keys = sorted(exact, key=repr)
        observed = [counts.get(key, 0) for key in keys]
        expected = [exact[key] * runs for key in keys]
        assert sum(observed) == runs
        assert stats.chisquare(observed, expected).pvalue > 1e-3


# ---------------------------------------------------------------------------
# Privacy esatta del transcript
# ---------------------------------------------------------------------------

class TestTranscriptPrivacy:

    def test_distribution_normalized(self):
        dist = transcript_distribution([1, 0, -1, 0], 2, 1.0)
        assert math.fsum(dist.values()) == pytest.approx(1.0)

    @pytest.mark.parametrize("d,k", [(2, 1), (4, 1), (4, 2)])
    @pytest.mark.parametrize("epsilon", [0.5, 1.0, 2.0])
    def test_transcript_is_epsilon_ldp(self, d, k, epsilon):
        assert max_transcript_privacy_loss(d, k, epsilon) <= math.exp(epsilon) + 1e-9

    def test_loss_is_not_trivial(self):
        assert max_transcript_privacy_loss(2, 1, 1.0) > 1.0


# ---------------------------------------------------------------------------
# Sequenze di cambi
# ---------------------------------------------------------------------------

class TestChangeSequences:

    def test_clip_keeps_short_sequences(self):
        x = np.array([0, 1, 0, -1, 0])
        assert clip_changes(x, 4).tolist() == x.tolist()

    def test_clip_drops_extra(self):
        assert clip_changes([1, -1, 1], 2).tolist() == [1, -1, 0]
        assert count_clipped([1, -1, 1], 2) == 1

    def test_clip_property(self):
        gen = np.random.default_rng(1)
        for _ in range(200):
            x = gen.integers(-1, 2, size=12)
            k = int(gen.integers(1, 6))
            clipped = clip_changes(x, k)
            assert np.count_nonzero(clipped) == min(np.count_nonzero(x), k)

    def test_pad_horizon(self):
        padded, d = pad_horizon([1, 0, -1])
        assert d == 4
        assert padded.tolist() == [1, 0, -1, 0]

    def test_state_path(self):
        assert state_path([1, 0, -1, 1]).tolist() == [1, 1, 0, 1]

    def test_report_round_trip_and_validation(self):
        report = Report(h=2, t=4, u=-1)
        assert Report.from_dict(report.to_dict()) == report
        assert report.node == (2, 2)
