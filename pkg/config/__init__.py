# config/__init__.py
# ShuffleLDP v1.0.0 - Modulo configurazione
# ============================================================================

from .constants import (
    # Versione
    VERSION,
    VERSION_STRING,
    VERSION_DESCRIPTION,
    # Paths
    BASE_DIR,
    SETTINGS_FILE,
    # Tolleranze e limiti
    NORMALIZATION_TOLERANCE,
    BOUND_SLACK,
    ORACLE_MAX_N,
    RESOURCE_GUARD_LIMIT,
    ENUMERATION_MAX_N,
    # Defaults simulazione
    DEFAULT_N,
    DEFAULT_D,
    DEFAULT_K,
    DEFAULT_EPSILON,
    DEFAULT_BETA,
    DEFAULT_DELTA,
    DEFAULT_TRIALS,
    DEFAULT_SEED,
    DEFAULT_STEP_TIME,
    INPUT_MODELS,
    DEFAULT_INPUT_MODEL,
    SHUFFLE_MODES,
    DEFAULT_SHUFFLE_MODE,
    LEVEL_SCALINGS,
    DEFAULT_LEVEL_SCALING,
    SUMMARY_QUANTILES,
    # Amplificazione
    RDP_ALPHAS,
    SIMPLIFIED_MIN_N,
    SIMPLIFIED_MAX_EPSILON0,
    SIMPLIFIED_MAX_DELTA,
    REGIMES,
    # Stream
    LANE_CLIENT,
    LANE_INPUTS,
    LANE_SHUFFLER,
    MAX_CLIENTS,
    MAX_TRIALS,
    # CLI
    EXIT_OK,
    EXIT_INVALID,
    EXIT_CERTIFICATION_FAILED,
    THREADS_ENV_VAR,
    CSV_FLOAT_FORMAT,
)

from .settings import (
    load_settings,
    get_default_threads,
    configure_logging,
)

__all__ = [
    "VERSION",
    "VERSION_STRING",
    "VERSION_DESCRIPTION",
    "BASE_DIR",
    "SETTINGS_FILE",
    "NORMALIZATION_TOLERANCE",
    "BOUND_SLACK",
    "ORACLE_MAX_N",
    "RESOURCE_GUARD_LIMIT",
    "ENUMERATION_MAX_N",
    "DEFAULT_N",
    "DEFAULT_D",
    "DEFAULT_K",
    "DEFAULT_EPSILON",
    "DEFAULT_BETA",
    "DEFAULT_DELTA",
    "DEFAULT_TRIALS",
    "DEFAULT_SEED",
    "DEFAULT_STEP_TIME",
    "INPUT_MODELS",
    "DEFAULT_INPUT_MODEL",
    "SHUFFLE_MODES",
    "DEFAULT_SHUFFLE_MODE",
    "LEVEL_SCALINGS",
    "DEFAULT_LEVEL_SCALING",
    "SUMMARY_QUANTILES",
    "RDP_ALPHAS",
    "SIMPLIFIED_MIN_N",
    "SIMPLIFIED_MAX_EPSILON0",
    "SIMPLIFIED_MAX_DELTA",
    "REGIMES",
    "LANE_CLIENT",
    "LANE_INPUTS",
    "LANE_SHUFFLER",
    "MAX_CLIENTS",
    "MAX_TRIALS",
    "EXIT_OK",
    "EXIT_INVALID",
    "EXIT_CERTIFICATION_FAILED",
    "THREADS_ENV_VAR",
    "CSV_FLOAT_FORMAT",
    "load_settings",
    "get_default_threads",
    "configure_logging",
]
