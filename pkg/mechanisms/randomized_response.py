# mechanisms/randomized_response.py
# ShuffleLDP v1.0.0 - Randomized response
# ============================================================================
# binary_rr / uniform_sign: i due rami del client longitudinale
#   (u = b·c con b = ±1, oppure segno uniforme se non c'è nulla da riportare).
# OneBitRandomizer: RR a un bit su {0, 1}, usata dall'oracolo di divergenza.
# ParityFlipRandomizer: variante adattiva (dipende dalle uscite precedenti).
# ============================================================================

import math
from typing import Any, Dict, Sequence

from core.errors import InvalidParameterError
from core.privacy import rr_probability
from core.randomness import RandomnessStream
from .base import LocalRandomizer


def binary_rr(c: int, epsilon: float, rng: RandomnessStream) -> int:
    """
    Riporta c con probabilità p = e^{ε/2}/(1 + e^{ε/2}), altrimenti −c.

    Args:
        c: Valore da proteggere, in {−1, +1}
        epsilon: Budget del client
        rng: Stream posizionato sul contatore del report

    Returns:
        ±c; E[risultato] = c / c_ε
    """
    if c not in (-1, 1):
        raise InvalidParameterError(f"c deve essere in {{-1, +1}}, ottenuto {c!r}")
    return c if rng.next_uniform() < rr_probability(epsilon) else -c


def uniform_sign(rng: RandomnessStream) -> int:
    """Segno uniforme in {−1, +1}, indipendente dai dati."""
    return 1 if rng.next_uniform() < 0.5 else -1


def _keep_probability(epsilon0: float) -> float:
    # e^{ε₀}/(1 + e^{ε₀}) senza overflow
    return 1.0 / (1.0 + math.exp(-epsilon0))


class OneBitRandomizer(LocalRandomizer):
    """RR a un bit: input x ∈ {0, 1}, uscita x con probabilità e^{ε₀}/(1 + e^{ε₀})."""

    name = "One-bit RR"
    description = "Randomized response a un bit, ignora le uscite precedenti"
    domain = (0, 1)

    def __init__(self, epsilon0: float):
        super().__init__(epsilon0)
        self.keep = _keep_probability(self.epsilon0)

    def output_distribution(self, prior: Sequence[Any], x: Any) -> Dict[Any, float]:
        self._check_input(x)
        return {x: self.keep, 1 - x: 1.0 - self.keep}

    def randomize(self, prior: Sequence[Any], x: Any, rng: RandomnessStream) -> Any:
        self._check_input(x)
        return x if rng.next_uniform() < self.keep else 1 - x


class ParityFlipRandomizer(OneBitRandomizer):
    """
    RR a un bit adattiva: se la somma delle uscite precedenti è dispari
    la convenzione si inverte (riporta 1 − x con probabilità e^{ε₀}/(1+e^{ε₀})).
    """

    name = "Parity-flip RR"
    description = "RR a un bit che dipende dalla parità delle uscite precedenti"

    def _flipped(self, prior: Sequence[Any]) -> bool:
        return sum(int(z) for z in prior) % 2 == 1

    def output_distribution(self, prior: Sequence[Any], x: Any) -> Dict[Any, float]:
        self._check_input(x)
        target = 1 - x if self._flipped(prior) else x
        return {target: self.keep, 1 - target: 1.0 - self.keep}

    def randomize(self, prior: Sequence[Any], x: Any, rng: RandomnessStream) -> Any:
        self._check_input(x)
        target = 1 - x if self._flipped(prior) else x
        return target if rng.next_uniform() < self.keep else 1 - target


class UniformSignRandomizer(LocalRandomizer):
    """Ignora input e prefisso: segno uniforme (banalmente ε₀-DP per ogni ε₀)."""

    name = "Uniform sign"
    description = "Rumore puro, nessuna dipendenza dai dati"

    def output_distribution(self, prior: Sequence[Any], x: Any) -> Dict[Any, float]:
        return {-1: 0.5, 1: 0.5}

    def randomize(self, prior: Sequence[Any], x: Any, rng: RandomnessStream) -> Any:
        return uniform_sign(rng)


def one_bit_rr_randomizer(epsilon0: float) -> OneBitRandomizer:
    """Randomizer canonico dell'oracolo: RR a un bit con budget ε₀."""
    return OneBitRandomizer(epsilon0)
