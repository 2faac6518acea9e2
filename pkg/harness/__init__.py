# harness/__init__.py
# ShuffleLDP v1.0.0 - Simulazioni
# ============================================================================

from .inputs import (
    generate_inputs,
    parse_change_file,
    clip_population,
    pad_population,
    true_marginals,
)

from .simulation import (
    SimulationConfig,
    SimulationResult,
    SimulationRun,
    padded_horizon,
    utility_bound,
    asymptotic_reference,
    prepare_inputs,
    pool_reports,
    run_trial,
    summarize,
    simulate,
)

__all__ = [
    "generate_inputs",
    "parse_change_file",
    "clip_population",
    "pad_population",
    "true_marginals",
    "SimulationConfig",
    "SimulationResult",
    "SimulationRun",
    "padded_horizon",
    "utility_bound",
    "asymptotic_reference",
    "prepare_inputs",
    "pool_reports",
    "run_trial",
    "summarize",
    "simulate",
]
