# harness/simulation.py
# ShuffleLDP v1.0.0 - Driver di simulazione end-to-end
# ============================================================================
# client (motore di popolazione) → (shuffle opzionale) → server → errori.
# Stream derivati da (seed, lane, trial, client): input generati una volta
# sulla lane INPUTS, monete dei client sulla lane CLIENT per ogni prova,
# permutazioni sulla lane SHUFFLER. Risultati ordinati per indice di prova.
# ============================================================================

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict, fields
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from config import (
    DEFAULT_N,
    DEFAULT_D,
    DEFAULT_K,
    DEFAULT_EPSILON,
    DEFAULT_BETA,
    DEFAULT_DELTA,
    DEFAULT_TRIALS,
    DEFAULT_SEED,
    DEFAULT_INPUT_MODEL,
    DEFAULT_SHUFFLE_MODE,
    DEFAULT_LEVEL_SCALING,
    DEFAULT_STEP_TIME,
    INPUT_MODELS,
    SHUFFLE_MODES,
    LEVEL_SCALINGS,
    SUMMARY_QUANTILES,
    RESOURCE_GUARD_LIMIT,
    LANE_INPUTS,
    LANE_SHUFFLER,
    MAX_TRIALS,
    MAX_CLIENTS,
    get_default_threads,
)
from core.amplification import amplify_shuffle
from core.errors import InvalidParameterError, ResourceGuardError
from core.privacy import scale_factor
from core.randomness import RandomnessStream, derive_stream_id, sort_permutation
from longitudinal.aggregator import accumulate_arrays, estimate_marginals
from longitudinal.population import PopulationReports, simulate_population_reports
from .inputs import clip_population, generate_inputs, pad_population, true_marginals

logger = logging.getLogger(__name__)


# ============================================================================
# CONFIGURAZIONE E RISULTATI
# ============================================================================

@dataclass
class SimulationConfig:
    """Parametri di una simulazione; riportati in ogni record di output."""
    n: int = DEFAULT_N
    d: int = DEFAULT_D
    k: int = DEFAULT_K
    epsilon: float = DEFAULT_EPSILON
    beta: float = DEFAULT_BETA
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    input_model: str = DEFAULT_INPUT_MODEL
    shuffle_mode: str = DEFAULT_SHUFFLE_MODE
    output_path: Optional[str] = None
    delta: float = DEFAULT_DELTA
    step_time: int = DEFAULT_STEP_TIME
    input_path: Optional[str] = None
    level_scaling: str = DEFAULT_LEVEL_SCALING
    report_path: Optional[str] = None
    debug_ids: bool = False
    allow_large: bool = False
    threads: Optional[int] = None

    def validate(self) -> None:
        """Raises InvalidParameterError (o ResourceGuardError) su parametri non validi."""
        for name in ("n", "d", "k", "trials", "step_time"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise InvalidParameterError(f"{name} deve essere un intero >= 1, ottenuto {value}")
        if self.n > MAX_CLIENTS or self.trials > MAX_TRIALS:
            raise InvalidParameterError("n o trials oltre i limiti degli stream")
        if not (self.epsilon > 0) or math.isinf(self.epsilon):
            raise InvalidParameterError(f"epsilon deve essere > 0 e finito, ottenuto {self.epsilon}")
        if not (0.0 < self.beta < 1.0):
            raise InvalidParameterError(f"beta deve essere in (0, 1), ottenuto {self.beta}")
        if not (0.0 < self.delta < 1.0):
            raise InvalidParameterError(f"delta deve essere in (0, 1), ottenuto {self.delta}")
        if self.input_model not in INPUT_MODELS:
            raise InvalidParameterError(f"input_model sconosciuto: {self.input_model!r}")
        if self.shuffle_mode not in SHUFFLE_MODES:
            raise InvalidParameterError(f"shuffle_mode sconosciuto: {self.shuffle_mode!r}")
        if self.level_scaling not in LEVEL_SCALINGS:
            raise InvalidParameterError(f"level_scaling sconosciuto: {self.level_scaling!r}")
        if self.input_model == "file" and not self.input_path:
            raise InvalidParameterError("il modello 'file' richiede input_path")
        if self.threads is not None and self.threads < 1:
            raise InvalidParameterError(f"threads deve essere >= 1, ottenuto {self.threads}")
        cells = self.n * padded_horizon(self.d)
        if cells > RESOURCE_GUARD_LIMIT and not self.allow_large:
            raise ResourceGuardError(
                f"n·d = {cells} supera {RESOURCE_GUARD_LIMIT}; usare allow_large per forzare"
            )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SimulationConfig":
        """Ignora le chiavi sconosciute (es. sezioni estese di shuffle_ldp.yaml)."""
        known = {f.name for f in fields(cls)}
        return cls(**{key: value for key, value in data.items() if key in known})


@dataclass
class SimulationResult:
    """
    Esito di una prova.

    Attributes:
        trial: Indice della prova
        max_abs_error: max_t |f_t − f̃_t|
        errors: |f_t − f̃_t| per ogni t
        utility_bound: c_ε k (log2 d)^{3/2} √(n log(2d/β))
        bound_satisfied: max_abs_error <= utility_bound
        num_reports: Report aggregati
        wall_time: Secondi (escluso da confronti e, di default, dai file)
    """
    trial: int
    max_abs_error: float
    errors: np.ndarray
    f_tilde: np.ndarray
    utility_bound: float
    bound_satisfied: bool
    num_reports: int
    wall_time: float = field(default=0.0, compare=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimulationResult):
            return NotImplemented
        return (
            self.trial == other.trial
            and self.max_abs_error == other.max_abs_error
            and np.array_equal(self.errors, other.errors)
            and np.array_equal(self.f_tilde, other.f_tilde)
            and self.utility_bound == other.utility_bound
            and self.bound_satisfied == other.bound_satisfied
            and self.num_reports == other.num_reports
        )

    def to_dict(self, include_timing: bool = False, include_vectors: bool = True) -> Dict[str, Any]:
        record = {
            "trial": self.trial,
            "max_abs_error": self.max_abs_error,
            "utility_bound": self.utility_bound,
            "bound_satisfied": self.bound_satisfied,
            "num_reports": self.num_reports,
        }
        if include_vectors:
            record["errors"] = self.errors.tolist()
            record["f_tilde"] = self.f_tilde.tolist()
        if include_timing:
            record["wall_time"] = self.wall_time
        return record


@dataclass
class SimulationRun:
    """Risultato completo: configurazione, input, prove e riepilogo."""
    config: SimulationConfig
    padded_d: int
    true_f: np.ndarray
    clipped_changes: int
    results: List[SimulationResult]
    summary: Dict[str, Any]
    sample_reports: Optional[PopulationReports] = None

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "padded_d": self.padded_d,
            "true_f": self.true_f.tolist(),
            "clipped_changes": self.clipped_changes,
            "summary": self.summary,
            "trials": [r.to_dict(include_timing=include_timing) for r in self.results],
        }


# ============================================================================
# BOUND
# ============================================================================

def padded_horizon(d: int) -> int:
    return 1 << (int(d) - 1).bit_length()


def _log2_floor_one(d: int) -> float:
    return max(math.log2(d), 1.0)


def utility_bound(n: int, d: int, k: int, epsilon: float, beta: float) -> float:
    """c_ε · k · (log2 d)^{3/2} · √(n log(2d/β)), con log2 d ≥ 1."""
    return scale_factor(epsilon) * k * _log2_floor_one(d) ** 1.5 * math.sqrt(n * math.log(2 * d / beta))


def asymptotic_reference(n: int, d: int, k: int, epsilon: float) -> float:
    """Curva c_ε (log2 d)² k √n, senza costanti."""
    return scale_factor(epsilon) * _log2_floor_one(d) ** 2 * k * math.sqrt(n)


# ============================================================================
# ESECUZIONE
# ============================================================================

def prepare_inputs(config: SimulationConfig) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    Genera (una volta) la popolazione, la clippa a k cambi e fa il padding.

    Returns:
        (X con d potenza di 2, f vero, cambi eliminati)
    """
    rng = RandomnessStream(config.seed, derive_stream_id(LANE_INPUTS, 0, 0))
    X = generate_inputs(
        config.n, config.d, config.k, config.input_model, rng,
        step_time=config.step_time, path=config.input_path,
    )
    X, clipped = clip_population(X, config.k)
    if clipped:
        logger.warning("changes_clipped count=%d k=%d", clipped, config.k)
    X = pad_population(X)
    return X, true_marginals(X), clipped


def pool_reports(reports: PopulationReports, config: SimulationConfig, trial: int) -> PopulationReports:
    """In post-shuffle: permuta i report e scarta gli identificativi dei client."""
    if config.shuffle_mode != "post-shuffle":
        return reports
    order = sort_permutation(len(reports), config.seed, derive_stream_id(LANE_SHUFFLER, trial, 0))
    shuffled = reports.take(order)
    logger.debug("reports_shuffled trial=%d size=%d", trial, len(reports))
    return PopulationReports(shuffled.h, shuffled.t, shuffled.u, np.full(len(reports), -1, dtype=np.int64))


def run_trial(
    config: SimulationConfig,
    X: np.ndarray,
    true_f: np.ndarray,
    trial: int,
    keep_reports: bool = True,
) -> Tuple[SimulationResult, Optional[PopulationReports]]:
    """
    Una prova: report dei client, eventuale shuffle, aggregazione, errori.

    Con keep_reports=False i report non sopravvivono alla prova (None).
    """
    started = time.perf_counter()
    d = X.shape[1]
    reports = simulate_population_reports(X, config.k, config.epsilon, config.seed, trial)
    pooled = pool_reports(reports, config, trial)

    # Il server vede solo (h, t, u)
    tree = accumulate_arrays(pooled.h, pooled.t, pooled.u, d)
    estimates = estimate_marginals(
        tree, config.epsilon, config.k, d, level_scaling=config.level_scaling, true_f=true_f,
    )
    errors = estimates.abs_errors()
    max_error = float(errors.max())
    bound = utility_bound(config.n, d, config.k, config.epsilon, config.beta)
    result = SimulationResult(
        trial=trial,
        max_abs_error=max_error,
        errors=errors,
        f_tilde=estimates.f_tilde,
        utility_bound=bound,
        bound_satisfied=max_error <= bound,
        num_reports=len(pooled),
        wall_time=time.perf_counter() - started,
    )
    logger.info("trial_done trial=%d max_abs_error=%r bound=%r", trial, max_error, bound)
    return result, (pooled if keep_reports else None)


def summarize(results: List[SimulationResult], config: SimulationConfig, clipped: int = 0) -> Dict[str, Any]:
    """
    Riepilogo robusto: mediana e quantili dell'errore massimo (distribuzione
    a coda pesante), frazione di prove entro il bound.
    """
    errors = np.asarray([r.max_abs_error for r in results], dtype=np.float64)
    d = padded_horizon(config.d)
    summary: Dict[str, Any] = {
        "trials": len(results),
        "median_max_abs_error": float(np.median(errors)),
        "quantiles": {f"{q:g}": float(np.quantile(errors, q)) for q in SUMMARY_QUANTILES},
        "fraction_within_bound": float(np.mean([r.bound_satisfied for r in results])),
        "utility_bound": utility_bound(config.n, d, config.k, config.epsilon, config.beta),
        "asymptotic_reference": asymptotic_reference(config.n, d, config.k, config.epsilon),
        "clipped_changes": clipped,
        "central_epsilon": None,
    }
    if config.shuffle_mode == "post-shuffle" and config.n > 1:
        summary["central_epsilon"] = amplify_shuffle(config.epsilon, config.n, config.delta).epsilon_central
    return summary


def simulate(config: SimulationConfig) -> SimulationRun:
    """
    Esegue tutte le prove della configurazione.

    Returns:
        SimulationRun deterministico dato il seed (wall_time a parte)

    Raises:
        InvalidParameterError / ResourceGuardError: configurazione non valida
    """
    config.validate()
    X, true_f, clipped = prepare_inputs(config)
    threads = config.threads or get_default_threads()
    logger.info(
        "simulation_start n=%d d=%d k=%d eps=%r trials=%d threads=%d mode=%s",
        config.n, X.shape[1], config.k, config.epsilon, config.trials, threads, config.shuffle_mode,
    )

    # solo la prova 0 conserva i report (dump e download)
    def one(trial: int) -> Tuple[SimulationResult, Optional[PopulationReports]]:
        return run_trial(config, X, true_f, trial, keep_reports=(trial == 0))

    if threads <= 1 or config.trials == 1:
        outcomes = [one(trial) for trial in range(config.trials)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(one, range(config.trials)))

    results = [result for result, _ in outcomes]
    if config.epsilon > 1:
        logger.warning("utility_bound_loose eps=%r", config.epsilon)
    return SimulationRun(
        config=config,
        padded_d=int(X.shape[1]),
        true_f=true_f,
        clipped_changes=clipped,
        results=results,
        summary=summarize(results, config, clipped),
        sample_reports=outcomes[0][1],
    )
