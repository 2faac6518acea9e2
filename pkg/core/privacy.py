# core/privacy.py
# ShuffleLDP v1.0.0 - Aritmetica dei parametri di privacy
# ============================================================================
# DP-closeness (divergenza hockey-stick), costanti della randomized response,
# composizione avanzata e amplificazione per sottocampionamento.
# Tutte funzioni pure: nessuno stato condiviso.
# ============================================================================

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from config import NORMALIZATION_TOLERANCE, BOUND_SLACK
from .errors import InvalidParameterError, OutOfRegimeError

ArrayLike = Union[Sequence[float], np.ndarray, "DiscreteDistribution"]


@dataclass(frozen=True)
class PrivacyParams:
    """Coppia (ε, δ) di un meccanismo (ε, δ)-DP; ε = inf indica nessuna garanzia."""
    epsilon: float
    delta: float = 0.0

    def __post_init__(self):
        if not (self.epsilon >= 0):
            raise InvalidParameterError(f"epsilon deve essere >= 0, ottenuto {self.epsilon}")
        if not (0.0 <= self.delta < 1.0):
            raise InvalidParameterError(f"delta deve essere in [0, 1), ottenuto {self.delta}")

    def to_dict(self) -> dict:
        return {"epsilon": self.epsilon, "delta": self.delta}


@dataclass(frozen=True)
class SubsampleRate:
    """Peso q della componente sensibile in una mistura, 0 < q < 1/2."""
    q: float

    def __post_init__(self):
        if not (0.0 < self.q < 0.5):
            raise InvalidParameterError(f"q deve essere in (0, 1/2), ottenuto {self.q}")


# ============================================================================
# RANDOMIZED RESPONSE
# ============================================================================

def rr_probability(epsilon: float) -> float:
    """
    Probabilità di riportare il valore vero: p = e^{ε/2} / (1 + e^{ε/2}).

    Calcolata come 1 / (1 + e^{-ε/2}) per evitare overflow a ε grandi.
    """
    if not (epsilon >= 0):
        raise InvalidParameterError(f"epsilon deve essere >= 0, ottenuto {epsilon}")
    return 1.0 / (1.0 + math.exp(-epsilon / 2.0))


def scale_factor(epsilon: float) -> float:
    """
    Fattore di de-biasing c_ε = (e^{ε/2} + 1) / (e^{ε/2} − 1).

    È il reciproco di 2p − 1; diverge per ε → 0.
    """
    if not (epsilon > 0):
        raise InvalidParameterError(f"epsilon deve essere > 0 (c_ε diverge in 0), ottenuto {epsilon}")
    return (math.exp(epsilon / 2.0) + 1.0) / math.expm1(epsilon / 2.0) if epsilon < 700 else 1.0


# ============================================================================
# COMPOSIZIONE E SOTTOCAMPIONAMENTO
# ============================================================================

def advanced_composition(
    epsilon: float,
    delta: float,
    k: int,
    delta_prime: float,
) -> PrivacyParams:
    """
    Composizione avanzata di k meccanismi (ε, δ)-DP (anche adattivi).

    Returns:
        PrivacyParams(ε', kδ + δ') con ε' = ε√(2k log(1/δ')) + kε(e^ε − 1)
        (ε' = inf se e^ε non è rappresentabile)
    """
    if not (epsilon >= 0):
        raise InvalidParameterError(f"epsilon deve essere >= 0, ottenuto {epsilon}")
    if not (0.0 <= delta < 1.0):
        raise InvalidParameterError(f"delta deve essere in [0, 1), ottenuto {delta}")
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidParameterError(f"k deve essere un intero positivo, ottenuto {k}")
    if not (0.0 < delta_prime < 1.0):
        raise InvalidParameterError(f"delta_prime deve essere in (0, 1), ottenuto {delta_prime}")

    try:
        eps_prime = epsilon * math.sqrt(2.0 * k * math.log(1.0 / delta_prime)) + k * epsilon * math.expm1(epsilon)
    except OverflowError:
        eps_prime = math.inf
    return PrivacyParams(epsilon=eps_prime, delta=min(k * delta + delta_prime, math.nextafter(1.0, 0.0)))


def advanced_composition_simplified(epsilon: float, k: int, delta_prime: float) -> float:
    """Forma compatta ε' = 2ε√(2k log(1/δ')), valida per ε < 1."""
    if not (0 <= epsilon < 1):
        raise OutOfRegimeError(f"la forma semplificata richiede 0 <= epsilon < 1, ottenuto {epsilon}")
    if k < 1 or not (0.0 < delta_prime < 1.0):
        raise InvalidParameterError("richiesti k >= 1 e delta_prime in (0, 1)")
    return 2.0 * epsilon * math.sqrt(2.0 * k * math.log(1.0 / delta_prime))


def subsample_amplify(epsilon: float, q: Union[float, SubsampleRate]) -> float:
    """
    ε' = log(q(e^ε − 1) + 1) per la mistura (1 − q)μ₀ + qμ₁.

    Il lato δ (δ → qδ) resta a carico del chiamante.
    """
    rate = q if isinstance(q, SubsampleRate) else SubsampleRate(q)
    if not (epsilon >= 0):
        raise InvalidParameterError(f"epsilon deve essere >= 0, ottenuto {epsilon}")
    return math.log1p(rate.q * math.expm1(epsilon))


def triangle_closeness(first: PrivacyParams, second: PrivacyParams) -> PrivacyParams:
    """μ₁ ≈(ε₁,δ₁) μ₂ e μ₂ ≈(ε₂,δ₂) μ₃ implicano μ₁ ≈(ε₁+ε₂, δ₁+δ₂) μ₃."""
    return PrivacyParams(
        epsilon=first.epsilon + second.epsilon,
        delta=min(first.delta + second.delta, math.nextafter(1.0, 0.0)),
    )


# ============================================================================
# DIVERGENZA HOCKEY-STICK
# ============================================================================

def as_probability_vector(values: ArrayLike, name: str = "vettore") -> np.ndarray:
    """
    Converte in array float64 e verifica che sia una distribuzione.

    Raises:
        InvalidParameterError: entrate negative o somma fuori tolleranza
    """
    probs = getattr(values, "probs", values)
    arr = np.asarray(probs, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidParameterError(f"{name}: atteso un vettore 1-D non vuoto")
    if np.any(arr < 0) or not np.all(np.isfinite(arr)):
        raise InvalidParameterError(f"{name}: probabilità negative o non finite")
    total = math.fsum(arr.tolist())
    if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
        raise InvalidParameterError(f"{name}: somma {total!r} fuori tolleranza {NORMALIZATION_TOLERANCE}")
    return arr


def _positive_part_sum(p: np.ndarray, q: np.ndarray, epsilon: float) -> float:
    # e^ε · 0 = 0 a ogni ε, anche dove e^ε non è rappresentabile
    scale = math.exp(epsilon) if epsilon <= 700 else math.inf
    scaled = np.zeros_like(q)
    support = q > 0
    scaled[support] = scale * q[support]
    diff = p - scaled
    return math.fsum(diff[diff > 0].tolist())


def hockey_stick_delta(P: ArrayLike, Q: ArrayLike, epsilon: float) -> float:
    """
    Il più piccolo δ simmetrico tale che P ≈(ε,δ) Q.

    δ = max(Σ_x (P(x) − e^ε Q(x))⁺, Σ_x (Q(x) − e^ε P(x))⁺)
    """
    if not (epsilon >= 0):
        raise InvalidParameterError(f"epsilon deve essere >= 0, ottenuto {epsilon}")
    p = as_probability_vector(P, "P")
    q = as_probability_vector(Q, "Q")
    if p.shape != q.shape:
        raise InvalidParameterError(f"supporti di lunghezza diversa: {p.size} vs {q.size}")
    delta = max(_positive_part_sum(p, q, epsilon), _positive_part_sum(q, p, epsilon))
    return min(max(delta, 0.0), 1.0)


def is_dp_close(P: ArrayLike, Q: ArrayLike, epsilon: float, delta: float) -> bool:
    """True se P e Q sono (ε, δ)-DP close."""
    return hockey_stick_delta(P, Q, epsilon) <= delta + BOUND_SLACK


def total_variation(P: ArrayLike, Q: ArrayLike) -> float:
    """Distanza in variazione totale ½ Σ|P − Q|."""
    p = as_probability_vector(P, "P")
    q = as_probability_vector(Q, "Q")
    if p.shape != q.shape:
        raise InvalidParameterError(f"supporti di lunghezza diversa: {p.size} vs {q.size}")
    return 0.5 * math.fsum(np.abs(p - q).tolist())
