# core/__init__.py
# ShuffleLDP v1.0.0 - Modulo core
# ============================================================================

from .errors import (
    ShuffleLDPError,
    InvalidParameterError,
    OutOfRegimeError,
    MalformedReportError,
    ResourceGuardError,
    InputParseError,
    ProtocolError,
)

from .privacy import (
    PrivacyParams,
    SubsampleRate,
    rr_probability,
    scale_factor,
    advanced_composition,
    advanced_composition_simplified,
    subsample_amplify,
    triangle_closeness,
    hockey_stick_delta,
    is_dp_close,
    total_variation,
)

from .randomness import (
    RandomnessStream,
    derive_stream_id,
    counter_uniforms,
    stream_ids_for,
    sample_permutation,
    sort_permutation,
)

from .amplification import (
    AmplificationResult,
    epsilon_one,
    amplify_shuffle,
    amplify_swap,
    amplify_group,
    rdp_bound,
    rdp_to_dp,
    shuffled_rounds_epsilon,
    binary_case_bound,
)

from .divergence import (
    DiscreteDistribution,
    CertificationRecord,
    shuffled_rr_count_distribution,
    divergence_profile,
    worst_case_divergence,
    certify_amplification,
    certify_grid,
)

__all__ = [
    # Errori
    "ShuffleLDPError",
    "InvalidParameterError",
    "OutOfRegimeError",
    "MalformedReportError",
    "ResourceGuardError",
    "InputParseError",
    "ProtocolError",
    # Privacy
    "PrivacyParams",
    "SubsampleRate",
    "rr_probability",
    "scale_factor",
    "advanced_composition",
    "advanced_composition_simplified",
    "subsample_amplify",
    "triangle_closeness",
    "hockey_stick_delta",
    "is_dp_close",
    "total_variation",
    # Casualità
    "RandomnessStream",
    "derive_stream_id",
    "counter_uniforms",
    "stream_ids_for",
    "sample_permutation",
    "sort_permutation",
    # Amplificazione
    "AmplificationResult",
    "epsilon_one",
    "amplify_shuffle",
    "amplify_swap",
    "amplify_group",
    "rdp_bound",
    "rdp_to_dp",
    "shuffled_rounds_epsilon",
    "binary_case_bound",
    # Divergenza
    "DiscreteDistribution",
    "CertificationRecord",
    "shuffled_rr_count_distribution",
    "divergence_profile",
    "worst_case_divergence",
    "certify_amplification",
    "certify_grid",
]
