# core/amplification.py
# ShuffleLDP v1.0.0 - Contabilità dell'amplificazione per shuffling
# ============================================================================
# Bound chiusi sull'ε centrale di n risposte ε₀-LDP mescolate:
#   general     ε₁√(2n ln(1/δ)) + nε₁(e^{ε₁} − 1)         sempre valido
#   moderate    e^{2ε₀}(e^{ε₀}−1)√(8 ln(1/δ)/n)
#               + 6e^{4ε₀}(e^{ε₀}−1)²/n                    se ε₀ ≤ ln(n/4)/3
#   simplified  12ε₀√(ln(1/δ)/n)                           se n ≥ 1000,
#                                                          ε₀ < 1/2, δ < 1/100
# con ε₁ = 2e^{2ε₀}(e^{ε₀} − 1)/n. Il calcolatore prende il minimo dei bound
# applicabili, limitato a ε₀ (LDP implica DP centrale).
# ============================================================================

import logging
import math
from dataclasses import dataclass, field, asdict
from typing import Dict, Iterable, Optional

from config import (
    RDP_ALPHAS,
    REGIMES,
    SIMPLIFIED_MIN_N,
    SIMPLIFIED_MAX_EPSILON0,
    SIMPLIFIED_MAX_DELTA,
)
from .errors import InvalidParameterError, OutOfRegimeError
from .privacy import advanced_composition

logger = logging.getLogger(__name__)


@dataclass
class AmplificationResult:
    """Esito del calcolatore: ε centrale, ε₁ per passo e regime vincente."""
    epsilon_central: float
    epsilon_1: float
    regime: str
    delta: float
    epsilon0: float
    n: int
    index_one_only: bool = False
    bounds: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise InvalidParameterError(f"regime sconosciuto: {self.regime!r}")

    def to_dict(self) -> Dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict) -> "AmplificationResult":
        return cls(**data)


# ============================================================================
# VALIDAZIONE
# ============================================================================

def _check_common(epsilon0: float, n: int, delta: Optional[float] = None) -> None:
    if not (epsilon0 > 0) or math.isinf(epsilon0):
        raise InvalidParameterError(f"epsilon0 deve essere > 0 e finito, ottenuto {epsilon0}")
    if isinstance(n, bool) or int(n) != n or n <= 1:
        raise InvalidParameterError(f"n deve essere un intero > 1, ottenuto {n}")
    if delta is not None and not (0.0 < delta < 1.0):
        raise InvalidParameterError(f"delta deve essere in (0, 1), ottenuto {delta}")


# ============================================================================
# FORMULE
# ============================================================================

def epsilon_one(epsilon0: float, n: int) -> float:
    """ε₁ = 2e^{2ε₀}(e^{ε₀} − 1)/n."""
    _check_common(epsilon0, n)
    try:
        return 2.0 * math.exp(2.0 * epsilon0) * math.expm1(epsilon0) / n
    except OverflowError:
        return math.inf


def general_bound(epsilon0: float, n: int, delta: float) -> float:
    _check_common(epsilon0, n, delta)
    eps1 = epsilon_one(epsilon0, n)
    if eps1 > 700:
        return math.inf
    return eps1 * math.sqrt(2.0 * n * math.log(1.0 / delta)) + n * eps1 * math.expm1(eps1)


def moderate_bound(epsilon0: float, n: int, delta: float) -> Optional[float]:
    """None se ε₀ > ln(n/4)/3."""
    _check_common(epsilon0, n, delta)
    if n < 4 or epsilon0 > math.log(n / 4.0) / 3.0:
        return None
    growth = math.exp(2.0 * epsilon0) * math.expm1(epsilon0)
    return growth * math.sqrt(8.0 * math.log(1.0 / delta) / n) + 6.0 * growth * growth / n


def simplified_applies(epsilon0: float, n: int, delta: float) -> bool:
    return n >= SIMPLIFIED_MIN_N and 0 < epsilon0 < SIMPLIFIED_MAX_EPSILON0 and 0 < delta < SIMPLIFIED_MAX_DELTA


def simplified_bound(epsilon0: float, n: int, delta: float) -> float:
    """12ε₀√(ln(1/δ)/n), senza controllare le ipotesi."""
    return 12.0 * epsilon0 * math.sqrt(math.log(1.0 / delta) / n)


def _pick(epsilon0: float, n: int, delta: float, bounds: Dict[str, float], index_one_only: bool) -> AmplificationResult:
    regime, value = min(bounds.items(), key=lambda item: item[1])
    if value >= epsilon0:
        regime, value = "no-amplification", epsilon0
    return AmplificationResult(
        epsilon_central=value,
        epsilon_1=epsilon_one(epsilon0, n),
        regime=regime,
        delta=delta,
        epsilon0=epsilon0,
        n=int(n),
        index_one_only=index_one_only,
        bounds=bounds,
    )


# ============================================================================
# CALCOLATORI
# ============================================================================

def amplify_shuffle(epsilon0: float, n: int, delta: float) -> AmplificationResult:
    """
    ε centrale di n risposte ε₀-LDP mescolate uniformemente.

    Args:
        epsilon0: budget locale di ciascun randomizer
        n: numero di risposte mescolate (> 1)
        delta: δ target in (0, 1)

    Returns:
        AmplificationResult con il minimo tra i bound applicabili,
        limitato a ε₀; regime "no-amplification" se il limite vince
    """
    _check_common(epsilon0, n, delta)
    bounds = {"general": general_bound(epsilon0, n, delta)}
    moderate = moderate_bound(epsilon0, n, delta)
    if moderate is not None:
        bounds["moderate"] = moderate
    if simplified_applies(epsilon0, n, delta):
        bounds["simplified"] = simplified_bound(epsilon0, n, delta)
    result = _pick(epsilon0, n, delta, bounds, index_one_only=False)
    logger.debug(
        "amplify_shuffle eps0=%r n=%d delta=%r eps=%r regime=%s",
        epsilon0, n, delta, result.epsilon_central, result.regime,
    )
    return result


def amplify_swap(epsilon0: float, n: int, delta: float) -> AmplificationResult:
    """Variante a singolo scambio: solo il bound generale, valido all'indice 1."""
    _check_common(epsilon0, n, delta)
    return _pick(epsilon0, n, delta, {"general": general_bound(epsilon0, n, delta)}, index_one_only=True)


def amplify_group(epsilon0: float, group_size: int, delta: float) -> AmplificationResult:
    """
    12ε₀√(ln(1/δ)/|S|) per un gruppo S di randomizer identici mescolati.

    Raises:
        OutOfRegimeError: |S| < 1000, ε₀ ≥ 1/2 o δ ≥ 1/100
    """
    _check_common(epsilon0, group_size, delta)
    if not simplified_applies(epsilon0, group_size, delta):
        raise OutOfRegimeError(
            f"richiesti |S| >= {SIMPLIFIED_MIN_N}, 0 < epsilon0 < {SIMPLIFIED_MAX_EPSILON0}, "
            f"0 < delta < {SIMPLIFIED_MAX_DELTA}; ottenuti |S|={group_size}, "
            f"epsilon0={epsilon0}, delta={delta}"
        )
    bounds = {"simplified": simplified_bound(epsilon0, group_size, delta)}
    return _pick(epsilon0, group_size, delta, bounds, index_one_only=False)


# ============================================================================
# RDP E RIFERIMENTI
# ============================================================================

def rdp_bound(epsilon0: float, n: int, alpha: float) -> float:
    """ε_RDP(α) = 2αe^{4ε₀}(e^{ε₀} − 1)²/n."""
    _check_common(epsilon0, n)
    if not (alpha >= 1) or math.isinf(alpha):
        raise InvalidParameterError(f"alpha deve essere >= 1, ottenuto {alpha}")
    try:
        growth = math.expm1(epsilon0)
        return 2.0 * alpha * math.exp(4.0 * epsilon0) * growth * growth / n
    except OverflowError:
        return math.inf


def rdp_to_dp(rdp_epsilon: float, alpha: float, delta: float) -> float:
    """Conversione standard (α, ε_RDP) → (ε_RDP + ln(1/δ)/(α − 1), δ)."""
    if not (alpha > 1):
        raise InvalidParameterError(f"la conversione richiede alpha > 1, ottenuto {alpha}")
    if not (0.0 < delta < 1.0):
        raise InvalidParameterError(f"delta deve essere in (0, 1), ottenuto {delta}")
    return rdp_epsilon + math.log(1.0 / delta) / (alpha - 1.0)


def shuffled_rounds_epsilon(
    epsilon0: float,
    n: int,
    rounds: int,
    delta: float,
    alphas: Iterable[float] = RDP_ALPHAS,
) -> Dict[str, float]:
    """
    ε complessivo di `rounds` uscite mescolate, composte in RDP.

    Returns:
        Dict con epsilon (minimo sulla griglia), alpha ottimo e, per
        confronto, advanced_epsilon dalla composizione avanzata dei
        bound per round a δ/(2·rounds), con δ' = δ/2
    """
    _check_common(epsilon0, n, delta)
    if isinstance(rounds, bool) or int(rounds) != rounds or rounds < 1:
        raise InvalidParameterError(f"rounds deve essere un intero >= 1, ottenuto {rounds}")
    best_eps, best_alpha = math.inf, None
    for alpha in alphas:
        if alpha <= 1:
            continue
        eps = rdp_to_dp(rounds * rdp_bound(epsilon0, n, alpha), alpha, delta)
        if eps < best_eps:
            best_eps, best_alpha = eps, alpha
    if best_alpha is None:
        raise InvalidParameterError("la griglia di alpha non contiene valori > 1")

    per_round_delta = delta / (2.0 * rounds)
    per_round = amplify_shuffle(epsilon0, n, per_round_delta)
    advanced = advanced_composition(per_round.epsilon_central, per_round_delta, int(rounds), delta / 2.0)
    return {
        "epsilon": best_eps,
        "alpha": float(best_alpha),
        "advanced_epsilon": advanced.epsilon,
        "advanced_delta": advanced.delta,
        "rounds": int(rounds),
    }


def binary_case_bound(epsilon0: float, n: int, delta: float) -> float:
    """
    Curva di riferimento min(1, ε₀)·e^{ε₀/2}·√(ln(1/δ)/n) per la RR a un bit.

    Asintotica con costante 1: solo per grafici, mai un bound certificato.
    """
    _check_common(epsilon0, n, delta)
    try:
        growth = math.exp(epsilon0 / 2.0)
    except OverflowError:
        return math.inf
    return min(1.0, epsilon0) * growth * math.sqrt(math.log(1.0 / delta) / n)
