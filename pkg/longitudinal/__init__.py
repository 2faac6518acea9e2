# longitudinal/__init__.py
# ShuffleLDP v1.0.0 - Protocollo longitudinale (client e server)
# ============================================================================

from .models import (
    Report,
    ClientState,
    ChangeSequence,
    is_power_of_two,
    log2_int,
    next_power_of_two,
    as_change_sequence,
    pad_horizon,
    clip_changes,
    count_clipped,
    state_path,
)

from .client import (
    client_setup,
    client_update,
    run_client,
    transcript_distribution,
    valid_change_sequences,
    max_transcript_privacy_loss,
)

from .aggregator import (
    SumTree,
    DyadicCover,
    MarginalEstimates,
    accumulate,
    accumulate_arrays,
    merge_trees,
    dyadic_cover,
    merge_loop_cover,
    level_factor,
    prefix_sums,
    estimate_marginals,
)

from .population import (
    PopulationReports,
    simulate_population_reports,
)

__all__ = [
    "Report",
    "ClientState",
    "ChangeSequence",
    "is_power_of_two",
    "log2_int",
    "next_power_of_two",
    "as_change_sequence",
    "pad_horizon",
    "clip_changes",
    "count_clipped",
    "state_path",
    "client_setup",
    "client_update",
    "run_client",
    "transcript_distribution",
    "valid_change_sequences",
    "max_transcript_privacy_loss",
    "SumTree",
    "DyadicCover",
    "MarginalEstimates",
    "accumulate",
    "accumulate_arrays",
    "merge_trees",
    "dyadic_cover",
    "merge_loop_cover",
    "level_factor",
    "prefix_sums",
    "estimate_marginals",
    "PopulationReports",
    "simulate_population_reports",
]
