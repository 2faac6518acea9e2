# tests/test_randomness.py
# ShuffleLDP v1.0.0 - Test per gli stream counter-based
# ============================================================================

import numpy as np
import pytest
from scipy import stats

from config import LANE_CLIENT, LANE_INPUTS, LANE_SHUFFLER
from core.errors import InvalidParameterError
from core.randomness import (
    RandomnessStream,
    counter_uniforms,
    derive_stream_id,
    sample_permutation,
    sort_permutation,
    stream_ids_for,
)


class TestRandomnessStream:

    def test_reproducible(self):
        a = RandomnessStream(7, 3)
        b = RandomnessStream(7, 3)
        assert [a.next_uint64() for _ in range(20)] == [b.next_uint64() for _ in range(20)]

    def test_different_streams_differ(self):
        a = RandomnessStream(7, 3)
        b = RandomnessStream(7, 4)
        assert [a.next_uint64() for _ in range(5)] != [b.next_uint64() for _ in range(5)]

    @pytest.mark.parametrize("first,second", [
        (derive_stream_id(LANE_CLIENT, 0, 0), derive_stream_id(LANE_CLIENT, 0, 1)),
        (derive_stream_id(LANE_CLIENT, 0, 5), derive_stream_id(LANE_CLIENT, 1, 5)),
        (derive_stream_id(LANE_CLIENT, 0, 0), derive_stream_id(LANE_INPUTS, 0, 0)),
    ])
    def test_distinct_streams_uncorrelated(self, first, second):
        a = RandomnessStream(2024, first).uniforms(10**6)
        b = RandomnessStream(2024, second).uniforms(10**6)
        assert abs(np.corrcoef(a, b)[0, 1]) < 0.01
        # correlazione seriale a ritardo 1 dentro ciascuno stream
        assert abs(np.corrcoef(a[:-1], a[1:])[0, 1]) < 0.01
        assert abs(np.corrcoef(a, np.roll(b, 1))[0, 1]) < 0.01

    def test_seek_is_random_access(self):
        stream = RandomnessStream(99, 1)
        draws = [stream.next_uniform() for _ in range(10)]
        stream.seek(6)
        assert stream.next_uniform() == draws[6]
        assert stream.counter == 7

    def test_uniform_range(self, rng):
        values = [rng.next_uniform() for _ in range(2000)]
        assert min(values) >= 0.0 and max(values) < 1.0

    def test_next_below_range(self, rng):
        values = {rng.next_below(5) for _ in range(500)}
        assert values == {0, 1, 2, 3, 4}

    def test_next_below_rejects_zero(self, rng):
        with pytest.raises(InvalidParameterError):
            rng.next_below(0)

    def test_uniforms_block_matches_scalar(self):
        scalar = RandomnessStream(5, 11)
        block = RandomnessStream(5, 11)
        expected = [scalar.next_uniform() for _ in range(50)]
        assert block.uniforms(50).tolist() == expected
        assert block.counter == scalar.counter

    def test_uniformity_chi_square(self):
        stream = RandomnessStream(2024, 0)
        counts = np.bincount([stream.next_below(10) for _ in range(20_000)], minlength=10)
        assert stats.chisquare(counts).pvalue > 1e-4

    def test_rejects_non_integer_seed(self):
        with pytest.raises(InvalidParameterError):
            RandomnessStream("abc")


class TestVectorised:

    def test_counter_uniforms_bit_identical(self):
        ids = np.array([derive_stream_id(LANE_CLIENT, 0, c) for c in range(8)], dtype=np.uint64)
        counters = np.array([0, 1, 2, 3, 5, 8, 13, 21], dtype=np.uint64)
        vector = counter_uniforms(42, ids, counters)
        for sid, ctr, value in zip(ids.tolist(), counters.tolist(), vector.tolist()):
            stream = RandomnessStream(42, sid)
            stream.seek(ctr)
            assert stream.next_uniform() == value

    def test_stream_ids_for(self):
        clients = np.arange(5)
        ids = stream_ids_for(LANE_SHUFFLER, 3, clients)
        assert ids.tolist() == [derive_stream_id(LANE_SHUFFLER, 3, c) for c in range(5)]


class TestStreamIds:

    def test_layout(self):
        assert derive_stream_id(LANE_INPUTS, 2, 9) == (1 << 56) | (2 << 32) | 9

    @pytest.mark.parametrize("args", [(7, 0, 0), (0, -1, 0), (0, 0, 2**32), (0, 2**24, 0)])
    def test_out_of_range(self, args):
        with pytest.raises(InvalidParameterError):
            derive_stream_id(*args)

    def test_spawn(self, rng):
        child = rng.spawn(LANE_CLIENT, 1, 2)
        assert child.seed == rng.seed
        assert child.stream_id == derive_stream_id(LANE_CLIENT, 1, 2)


class TestPermutations:

    def test_sample_permutation_is_permutation(self, rng):
        perm = sample_permutation(100, rng)
        assert sorted(perm.tolist()) == list(range(100))

    def test_sample_permutation_small(self, rng):
        assert sample_permutation(0, rng).tolist() == []
        assert sample_permutation(1, rng).tolist() == [0]

    def test_sample_permutation_uniform_on_three(self):
        stream = RandomnessStream(1, 0)
        counts = {}
        for _ in range(6000):
            key = tuple(sample_permutation(3, stream).tolist())
            counts[key] = counts.get(key, 0) + 1
        assert len(counts) == 6
        assert stats.chisquare(list(counts.values())).pvalue > 1e-4

    def test_sample_permutation_uniform_on_four(self):
        # un sample per stream: replica vettoriale di Fisher-Yates sulle stesse uniformi
        samples, seed = 600_000, 31
        draws = counter_uniforms(seed, np.arange(samples, dtype=np.uint64)[:, None], np.arange(3, dtype=np.uint64)[None, :])
        perms = np.tile(np.arange(4, dtype=np.int64), (samples, 1))
        rows = np.arange(samples)
        for step, i in enumerate(range(3, 0, -1)):
            j = np.minimum((draws[:, step] * (i + 1)).astype(np.int64), i)
            swapped = perms[rows, i].copy()
            perms[rows, i] = perms[rows, j]
            perms[rows, j] = swapped
        for b in range(200):
            assert perms[b].tolist() == sample_permutation(4, RandomnessStream(seed, b)).tolist()

        codes = perms @ np.array([64, 16, 4, 1])
        _, counts = np.unique(codes, return_counts=True)
        assert counts.size == 24
        p = 1 / 24
        sigma = np.sqrt(samples * p * (1 - p))
        assert (np.abs(counts - samples * p) <= 4 * sigma).all()
        assert stats.chisquare(counts).pvalue > 1e-4

    def test_sort_permutation_deterministic(self):
        sid = derive_stream_id(LANE_SHUFFLER, 0, 0)
        first = sort_permutation(1000, 3, sid)
        assert np.array_equal(first, sort_permutation(1000, 3, sid))
        assert sorted(first.tolist()) == list(range(1000))
