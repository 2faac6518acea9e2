# mechanisms/__init__.py
# ShuffleLDP v1.0.0 - Randomizer locali e shuffling
# ============================================================================

from .base import LocalRandomizer

from .randomized_response import (
    binary_rr,
    uniform_sign,
    OneBitRandomizer,
    ParityFlipRandomizer,
    UniformSignRandomizer,
    one_bit_rr_randomizer,
)

from .shuffle import (
    apply_permutation,
    swap_first,
    run_local,
    run_shuffled,
    run_swap,
    shuffle_responses,
)

from .enumeration import (
    exact_local_distribution,
    exact_shuffled_distribution,
    exact_swap_distribution,
    exact_post_shuffle_distribution,
    marginal,
    max_abs_difference,
    certify_local_dp,
)

__all__ = [
    "LocalRandomizer",
    "binary_rr",
    "uniform_sign",
    "OneBitRandomizer",
    "ParityFlipRandomizer",
    "UniformSignRandomizer",
    "one_bit_rr_randomizer",
    "apply_permutation",
    "swap_first",
    "run_local",
    "run_shuffled",
    "run_swap",
    "shuffle_responses",
    "exact_local_distribution",
    "exact_shuffled_distribution",
    "exact_swap_distribution",
    "exact_post_shuffle_distribution",
    "marginal",
    "max_abs_difference",
    "certify_local_dp",
]
