# tests/test_harness.py
# ShuffleLDP v1.0.0 - Test per generatori di input e simulazioni
# ============================================================================

import math
from unittest.mock import patch

import numpy as np
import pytest

from core.errors import InputParseError, InvalidParameterError, ResourceGuardError
from core.privacy import scale_factor
from core.randomness import RandomnessStream
from export import reports_to_jsonl, results_to_json
from harness import (
    SimulationConfig,
    SimulationResult,
    asymptotic_reference,
    clip_population,
    generate_inputs,
    pad_population,
    parse_change_file,
    prepare_inputs,
    run_trial,
    simulate,
    summarize,
    utility_bound,
    true_marginals,
)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _make_config(**overrides) -> SimulationConfig:
    values = {"n": 500, "d": 16, "k": 2, "epsilon": 1.0, "trials": 3, "seed": 7, "threads": 1}
    values.update(overrides)
    return SimulationConfig(**values)


@pytest.fixture(scope="module")
def step_run():
    """50 prove con n = 10⁵, d = 8, k = 1: tutti i client passano a 1 in t = 2."""
    config = SimulationConfig(
        n=100_000, d=8, k=1, epsilon=1.0, trials=50, seed=2024,
        input_model="step-function", step_time=2,
    )
    return simulate(config)


# ---------------------------------------------------------------------------
# Generatori
# ---------------------------------------------------------------------------

class TestGenerateInputs:

    def test_step_function(self, rng):
        X = generate_inputs(5, 8, 1, "step-function", rng, step_time=3)
        f = true_marginals(X)
        assert f.tolist() == [0, 0, 5, 5, 5, 5, 5, 5]

    def test_random_changes_respect_budget(self, rng):
        X = generate_inputs(10_000, 16, 3, "random-changes", rng)
        assert (np.count_nonzero(X, axis=1) <= 3).all()
        states = np.cumsum(X, axis=1)
        assert states.min() >= 0 and states.max() <= 1

    def test_worst_case_sparse_shared_times(self, rng):
        X = generate_inputs(50, 16, 4, "worst-case-sparse", rng)
        assert (X == X[0]).all()
        assert np.count_nonzero(X[0]) == 4

    def test_budget_larger_than_horizon(self, rng):
        X = generate_inputs(3, 2, 5, "random-changes", rng)
        assert np.count_nonzero(X, axis=1).tolist() == [2, 2, 2]

    @pytest.mark.parametrize("n,d,k", [(5, 8, 0), (0, 8, 1), (5, 0, 1)])
    def test_invalid_shape(self, n, d, k, rng):
        with pytest.raises(InvalidParameterError):
            generate_inputs(n, d, k, "random-changes", rng)

    def test_unknown_model(self, rng):
        with pytest.raises(InvalidParameterError):
            generate_inputs(5, 8, 1, "bursty", rng)

    def test_file_model(self, tmp_path, rng):
        path = tmp_path / "inputs.jsonl"
        path.write_text('[0, 1, 0, -1]\n\n{"x": [1, 0, 0, 0]}\n', encoding="utf-8")
        X = generate_inputs(2, 4, 2, "file", rng, path=path)
        assert X.tolist() == [[0, 1, 0, -1], [1, 0, 0, 0]]
        with pytest.raises(InvalidParameterError):
            generate_inputs(3, 4, 2, "file", rng, path=path)

    def test_file_parse_errors_carry_line_numbers(self):
        with pytest.raises(InputParseError) as info:
            parse_change_file('[0, 1]\n[0, 2]\n')
        assert info.value.line_number == 2
        with pytest.raises(InputParseError) as info:
            parse_change_file('[0, 1]\nnot json\n')
        assert info.value.line_number == 2
        with pytest.raises(InputParseError) as info:
            parse_change_file('[0, 1, 0]\n[0, 1]\n')
        assert "riga 2" in str(info.value)

    def test_clip_and_pad_population(self):
        X = np.array([[1, -1, 1], [0, 0, 1]], dtype=np.int8)
        clipped, dropped = clip_population(X, 2)
        assert dropped == 1
        assert clipped.tolist() == [[1, -1, 0], [0, 0, 1]]
        assert pad_population(clipped).shape == (2, 4)


# ---------------------------------------------------------------------------
# Configurazione
# ---------------------------------------------------------------------------

class TestSimulationConfig:

    def test_resource_guard(self):
        config = _make_config(n=1_000_000, d=2000)
        with pytest.raises(ResourceGuardError):
            config.validate()
        _make_config(n=1_000_000, d=2000, allow_large=True).validate()

    @pytest.mark.parametrize("overrides", [
        {"n": 0}, {"trials": 0}, {"beta": 1.0}, {"beta": 0.0}, {"epsilon": 0.0},
        {"input_model": "other"}, {"shuffle_mode": "mixnet"}, {"level_scaling": "x"},
        {"input_model": "file"}, {"threads": 0},
    ])
    def test_invalid(self, overrides):
        with pytest.raises(InvalidParameterError):
            _make_config(**overrides).validate()

    def test_from_dict_ignores_unknown_keys(self):
        config = SimulationConfig.from_dict({"n": 12, "colour": "blue"})
        assert config.n == 12

    def test_utility_bound_formula(self):
        expected = scale_factor(1.0) * 4 * 6 ** 1.5 * math.sqrt(1e4 * math.log(2 * 64 * 3))
        assert utility_bound(10_000, 64, 4, 1.0, 1 / 3) == pytest.approx(expected)


# ---------------------------------------------------------------------------
# Riepilogo
# ---------------------------------------------------------------------------

def _make_result(trial: int, max_abs_error: float, bound: float = 10.0) -> SimulationResult:
    return SimulationResult(
        trial=trial,
        max_abs_error=max_abs_error,
        errors=np.array([max_abs_error]),
        f_tilde=np.zeros(1),
        utility_bound=bound,
        bound_satisfied=max_abs_error <= bound,
        num_reports=0,
    )


class TestSummarize:

    def test_quantiles_and_fraction(self):
        results = [_make_result(i, float(v)) for i, v in enumerate([1, 2, 3, 20, 30])]
        summary = summarize(results, _make_config(), clipped=4)
        assert summary["trials"] == 5
        assert summary["median_max_abs_error"] == 3.0
        assert summary["quantiles"]["0.5"] == 3.0
        assert summary["quantiles"]["0.1"] == pytest.approx(1.4)
        assert summary["fraction_within_bound"] == pytest.approx(0.6)
        assert summary["clipped_changes"] == 4
        assert summary["asymptotic_reference"] == pytest.approx(asymptotic_reference(500, 16, 2, 1.0))
        assert summary["central_epsilon"] is None

    def test_post_shuffle_reports_central_epsilon(self):
        config = _make_config(shuffle_mode="post-shuffle", n=10_000, epsilon=0.5, delta=1e-6)
        summary = summarize([_make_result(0, 1.0)], config)
        assert 0 < summary["central_epsilon"] < 0.5


# ---------------------------------------------------------------------------
# Simulazione
# ---------------------------------------------------------------------------

class TestSimulate:

    def test_deterministic(self):
        first = simulate(_make_config())
        second = simulate(_make_config())
        assert first.results == second.results
        assert results_to_json(first.to_dict()) == results_to_json(second.to_dict())

    def test_thread_count_does_not_change_results(self):
        assert simulate(_make_config(threads=1)).results == simulate(_make_config(threads=3)).results

    def test_result_fields(self):
        run = simulate(_make_config(d=10))
        assert run.padded_d == 16
        assert len(run.results) == 3
        for result in run.results:
            assert result.max_abs_error >= 0
            assert result.bound_satisfied == (result.max_abs_error <= result.utility_bound)
            assert result.errors.shape == (16,)
        assert set(run.summary["quantiles"]) == {"0.1", "0.5", "0.9"}
        assert run.summary["central_epsilon"] is None

    def test_clipping_recorded(self, tmp_path):
        path = tmp_path / "x.jsonl"
        path.write_text("[1, -1, 1, 0]\n[0, 0, 0, 1]\n", encoding="utf-8")
        run = simulate(_make_config(n=2, d=4, k=2, input_model="file", input_path=str(path)))
        assert run.clipped_changes == 1
        assert run.summary["clipped_changes"] == 1
        assert run.true_f.tolist() == [1, 0, 0, 1]

    def test_post_shuffle_strips_identifiers(self):
        config = _make_config(shuffle_mode="post-shuffle")
        run = simulate(config)
        assert (run.sample_reports.client == -1).all()
        assert "client_id" not in reports_to_jsonl(run.sample_reports)
        assert run.summary["central_epsilon"] is not None

    def test_post_shuffle_same_estimates(self):
        plain = simulate(_make_config())
        shuffled = simulate(_make_config(shuffle_mode="post-shuffle"))
        for a, b in zip(plain.results, shuffled.results):
            assert np.array_equal(a.f_tilde, b.f_tilde)

    def test_only_first_trial_keeps_reports(self):
        config = _make_config(trials=3)
        with patch("harness.simulation.run_trial", wraps=run_trial) as spy:
            run = simulate(config)
        kept = {call.args[3]: call.kwargs["keep_reports"] for call in spy.call_args_list}
        assert kept == {0: True, 1: False, 2: False}
        assert run.sample_reports is not None
        assert len(run.sample_reports) == run.results[0].num_reports

    def test_dropped_reports_do_not_change_result(self):
        config = _make_config()
        X, true_f, _ = prepare_inputs(config)
        kept, reports = run_trial(config, X, true_f, 1)
        dropped, none = run_trial(config, X, true_f, 1, keep_reports=False)
        assert none is None
        assert reports is not None
        assert dropped == kept

    def test_zero_changes_are_pure_noise(self):
        config = _make_config(n=1000, d=8, k=1)
        X = np.zeros((1000, 8), dtype=np.int8)
        true_f = np.zeros(8, dtype=np.int64)
        estimates = np.array([run_trial(config, X, true_f, trial)[0].f_tilde for trial in range(200)])
        mean = estimates.mean(axis=0)
        sem = estimates.std(axis=0, ddof=1) / math.sqrt(len(estimates))
        assert (np.abs(mean) <= 4 * sem).all()

    def test_unbiased_on_step_inputs(self, step_run):
        estimates = np.array([r.f_tilde for r in step_run.results])
        mean = estimates.mean(axis=0)
        sem = estimates.std(axis=0, ddof=1) / math.sqrt(len(estimates))
        assert step_run.true_f.tolist() == [0] + [100_000] * 7
        assert (np.abs(mean - step_run.true_f) <= 4 * sem).all()

    def test_literal_level_factor_is_biased(self, step_run):
        # "literal" moltiplica per log2(d) = 3 invece di 4 livelli: stima ×3/4
        estimates = np.array([r.f_tilde for r in step_run.results]) * 3 / 4
        mean = estimates.mean(axis=0)
        sem = estimates.std(axis=0, ddof=1) / math.sqrt(len(estimates))
        assert abs(mean[-1] - step_run.true_f[-1]) > 10 * sem[-1]

    def test_utility_bound_holds(self):
        config = SimulationConfig(n=10_000, d=64, k=4, epsilon=1.0, beta=1 / 3, trials=30, seed=3)
        run = simulate(config)
        assert sum(r.bound_satisfied for r in run.results) >= 20
        assert run.summary["fraction_within_bound"] >= 2 / 3

    @pytest.mark.slow
    def test_error_scales_with_sqrt_n(self):
        medians = []
        for n in (10_000, 40_000):
            config = SimulationConfig(n=n, d=64, k=4, epsilon=1.0, trials=50, seed=11)
            medians.append(simulate(config).summary["median_max_abs_error"])
        assert 1.6 <= medians[1] / medians[0] <= 2.5

    @pytest.mark.slow
    def test_literal_level_factor_run(self):
        config = SimulationConfig(
            n=100_000, d=8, k=1, epsilon=1.0, trials=50, seed=2024,
            input_model="step-function", step_time=2, level_scaling="literal",
        )
        run = simulate(config)
        mean = np.mean([r.f_tilde[-1] for r in run.results])
        assert mean == pytest.approx(75_000, rel=0.05)
