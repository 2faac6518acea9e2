# core/divergence.py
# ShuffleLDP v1.0.0 - Oracolo esatto di divergenza per la RR a un bit
# ============================================================================
# Dopo lo shuffling, n risposte RR a un bit sono riassunte dal conteggio
# degli 1: con m input a 1 e p = e^{ε₀}/(1 + e^{ε₀}) il conteggio segue
# Bin(m, p) ⊛ Bin(n − m, 1 − p). Due dataset adiacenti differiscono in un
# elemento (m contro m + 1 input a 1), quindi il δ esatto del meccanismo è
#   max_m  hockey_stick(dist(n, m), dist(n, m + 1), ε).
#
# Entrambe le distribuzioni della coppia condividono la stessa base su n − 1
# risposte: una sola convoluzione per m, poi un kernel a due punti.
# Le pmf binomiali sono calcolate in log-space da una tabella log-gamma.
# ============================================================================

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from scipy.special import gammaln

from config import NORMALIZATION_TOLERANCE, ORACLE_MAX_N, get_default_threads
from .amplification import amplify_shuffle
from .errors import InvalidParameterError, ResourceGuardError
from .privacy import hockey_stick_delta

logger = logging.getLogger(__name__)


# ============================================================================
# TIPI
# ============================================================================

@dataclass(frozen=True)
class DiscreteDistribution:
    """Vettore di probabilità sui conteggi {0, 1, …, n}."""
    probs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.probs, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidParameterError("atteso un vettore 1-D non vuoto")
        if np.any(arr < 0) or not np.all(np.isfinite(arr)):
            raise InvalidParameterError("probabilità negative o non finite")
        total = math.fsum(arr.tolist())
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            raise InvalidParameterError(
                f"distribuzione non normalizzata: somma {total!r}, tolleranza {NORMALIZATION_TOLERANCE}"
            )
        # Rinormalizzazione ammessa solo entro tolleranza
        object.__setattr__(self, "probs", arr / total)

    def __len__(self) -> int:
        return int(self.probs.size)

    def reversed(self) -> "DiscreteDistribution":
        return DiscreteDistribution(self.probs[::-1].copy())


@dataclass
class CertificationRecord:
    """Esito del confronto tra ε dichiarato dal calcolatore e δ esatto."""
    n: int
    epsilon0: float
    delta_target: float
    claimed_epsilon: float
    regime: str
    exact_delta: float
    slack_ratio: float
    worst_m: int
    passed: bool

    def to_dict(self) -> Dict:
        return asdict(self)


# ============================================================================
# PMF BINOMIALI IN LOG-SPACE
# ============================================================================

def _log_rr_probs(epsilon0: float) -> Tuple[float, float]:
    """(log p, log(1 − p)) con p = e^{ε₀}/(1 + e^{ε₀})."""
    return -float(np.logaddexp(0.0, -epsilon0)), -float(np.logaddexp(0.0, epsilon0))


class _BinomialTables:
    """Tabella log(k!) condivisa da tutte le convoluzioni di una scansione."""

    def __init__(self, n: int, epsilon0: float):
        self.n = n
        self.log_fact = gammaln(np.arange(n + 1, dtype=np.float64) + 1.0)
        self.log_p, self.log_q = _log_rr_probs(epsilon0)
        self.p = math.exp(self.log_p)
        self.q = math.exp(self.log_q)

    def pmf(self, trials: int, log_success: float, log_failure: float) -> np.ndarray:
        i = np.arange(trials + 1, dtype=np.float64)
        log_comb = self.log_fact[trials] - self.log_fact[: trials + 1] - self.log_fact[trials::-1]
        return np.exp(log_comb + i * log_success + (trials - i) * log_failure)

    def count_pmf(self, ones: int, zeros: int) -> np.ndarray:
        """Conteggio degli 1 riportati da `ones` input a 1 e `zeros` input a 0."""
        from_ones = self.pmf(ones, self.log_p, self.log_q)
        from_zeros = self.pmf(zeros, self.log_q, self.log_p)
        return _trimmed_convolve(from_ones, from_zeros)


def _trimmed_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """np.convolve limitata al supporto non nullo (esatta: gli zeri non contribuiscono)."""
    out = np.zeros(a.size + b.size - 1, dtype=np.float64)
    nz_a = np.flatnonzero(a)
    nz_b = np.flatnonzero(b)
    if nz_a.size == 0 or nz_b.size == 0:
        return out
    lo_a, hi_a = nz_a[0], nz_a[-1] + 1
    lo_b, hi_b = nz_b[0], nz_b[-1] + 1
    part = np.convolve(a[lo_a:hi_a], b[lo_b:hi_b])
    out[lo_a + lo_b: lo_a + lo_b + part.size] = part
    return out


def _check_oracle_size(n: int, minimum: int) -> None:
    if isinstance(n, bool) or int(n) != n or n < minimum:
        raise InvalidParameterError(f"n deve essere un intero >= {minimum}, ottenuto {n}")
    if n > ORACLE_MAX_N:
        raise ResourceGuardError(f"oracolo limitato a n <= {ORACLE_MAX_N}, ottenuto {n}")


def _check_epsilon0(epsilon0: float) -> None:
    if not (epsilon0 > 0) or math.isinf(epsilon0):
        raise InvalidParameterError(f"epsilon0 deve essere > 0 e finito, ottenuto {epsilon0}")


# ============================================================================
# OPERAZIONI
# ============================================================================

def shuffled_rr_count_distribution(n: int, m: int, epsilon0: float) -> DiscreteDistribution:
    """
    Distribuzione esatta del numero di 1 riportati dopo lo shuffling.

    Args:
        n: numero di client
        m: quanti di loro hanno input 1 (0 <= m <= n)
        epsilon0: budget della RR a un bit

    Returns:
        DiscreteDistribution su {0, …, n}
    """
    _check_oracle_size(n, 1)
    _check_epsilon0(epsilon0)
    if isinstance(m, bool) or int(m) != m or not (0 <= m <= n):
        raise InvalidParameterError(f"m deve essere in [0, {n}], ottenuto {m}")
    tables = _BinomialTables(int(n), epsilon0)
    return DiscreteDistribution(tables.count_pmf(int(m), int(n - m)))


def _pair_delta(tables: _BinomialTables, m: int, epsilon: float) -> float:
    # base: m input a 1 e n − m − 1 input a 0
    base = tables.count_pmf(m, tables.n - m - 1)
    with_zero = np.convolve(base, [tables.p, tables.q])
    with_one = np.convolve(base, [tables.q, tables.p])
    return hockey_stick_delta(with_zero, with_one, epsilon)


def divergence_profile(
    n: int,
    epsilon0: float,
    epsilon: float,
    threads: Optional[int] = None,
) -> np.ndarray:
    """
    δ esatto per ogni coppia adiacente (m, m + 1), m = 0 … n − 1.

    La scansione è parallela su un ThreadPoolExecutor; l'ordine del
    risultato segue m indipendentemente dall'esecuzione.
    """
    _check_oracle_size(n, 2)
    _check_epsilon0(epsilon0)
    if not (epsilon >= 0):
        raise InvalidParameterError(f"epsilon deve essere >= 0, ottenuto {epsilon}")
    n = int(n)
    tables = _BinomialTables(n, epsilon0)
    workers = threads if threads is not None else get_default_threads()
    logger.debug("divergence_scan_start n=%d eps0=%r eps=%r threads=%d", n, epsilon0, epsilon, workers)

    if workers <= 1 or n < 64:
        deltas = [_pair_delta(tables, m, epsilon) for m in range(n)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            deltas = list(pool.map(lambda m: _pair_delta(tables, m, epsilon), range(n)))

    logger.debug("divergence_scan_done n=%d max_delta=%r", n, max(deltas))
    return np.asarray(deltas, dtype=np.float64)


def worst_case_divergence(n: int, epsilon0: float, epsilon: float, threads: Optional[int] = None) -> float:
    """Il più piccolo δ per cui la RR a un bit mescolata è (ε, δ)-DP."""
    return float(divergence_profile(n, epsilon0, epsilon, threads).max())


def certify_amplification(
    n: int,
    epsilon0: float,
    delta_target: float,
    threads: Optional[int] = None,
) -> CertificationRecord:
    """
    Verifica che l'ε del calcolatore dia davvero δ esatto <= δ target.

    Returns:
        CertificationRecord con ε dichiarato, δ esatto, rapporto di slack
        (δ esatto / δ target) ed esito
    """
    amplified = amplify_shuffle(epsilon0, n, delta_target)
    profile = divergence_profile(n, epsilon0, amplified.epsilon_central, threads)
    worst_m = int(np.argmax(profile))
    exact_delta = float(profile[worst_m])
    record = CertificationRecord(
        n=int(n),
        epsilon0=epsilon0,
        delta_target=delta_target,
        claimed_epsilon=amplified.epsilon_central,
        regime=amplified.regime,
        exact_delta=exact_delta,
        slack_ratio=exact_delta / delta_target,
        worst_m=worst_m,
        passed=exact_delta <= delta_target,
    )
    log = logger.info if record.passed else logger.warning
    log(
        "certification n=%d eps0=%r delta=%r claimed_eps=%r exact_delta=%r passed=%s",
        n, epsilon0, delta_target, record.claimed_epsilon, exact_delta, record.passed,
    )
    return record


def certify_grid(
    triples: Iterable[Tuple[int, float, float]],
    threads: Optional[int] = None,
) -> List[CertificationRecord]:
    """certify_amplification su una griglia di (n, ε₀, δ)."""
    return [certify_amplification(int(n), float(eps0), float(delta), threads) for n, eps0, delta in triples]
