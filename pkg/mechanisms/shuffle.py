# mechanisms/shuffle.py
# ShuffleLDP v1.0.0 - Esecuzione locale, shuffling e scambio singolo
# ============================================================================
# run_local:          z_i ← R_i(z_{1:i−1}; x_i), sequenziale
# run_shuffled:       permutazione uniforme del dataset, poi run_local
# run_swap:           scambia x_1 con x_I (I uniforme in [n]), poi run_local
# shuffle_responses:  permuta solo le uscite in S (randomizer identici su S)
# Le permutazioni campionate non vengono mai restituite né loggate.
# ============================================================================

import logging
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import InvalidParameterError
from core.randomness import RandomnessStream, sample_permutation
from .base import LocalRandomizer

logger = logging.getLogger(__name__)

Dataset = Sequence[Any]
Transcript = Tuple[Any, ...]
Permutation = np.ndarray


def _check_lengths(D: Dataset, randomizers: Sequence[LocalRandomizer]) -> None:
    if len(D) < 1:
        raise InvalidParameterError("il dataset deve contenere almeno un elemento")
    if len(randomizers) != len(D):
        raise InvalidParameterError(
            f"servono {len(D)} randomizer, ricevuti {len(randomizers)}"
        )


def apply_permutation(D: Dataset, pi: Permutation) -> List[Any]:
    """π(D) = (x_{π(1)}, …, x_{π(n)})."""
    return [D[int(i)] for i in pi]


def swap_first(D: Dataset, index: int) -> List[Any]:
    """σ_I(D): scambia il primo elemento con quello in posizione index (0-based)."""
    swapped = list(D)
    swapped[0], swapped[index] = swapped[index], swapped[0]
    return swapped


def run_local(D: Dataset, randomizers: Sequence[LocalRandomizer], rng: RandomnessStream) -> Transcript:
    """
    Applica i randomizer in ordine, ciascuno vede le uscite precedenti.

    Returns:
        Transcript (z_1, …, z_n)
    """
    _check_lengths(D, randomizers)
    outputs: List[Any] = []
    for x, randomizer in zip(D, randomizers):
        outputs.append(randomizer.randomize(tuple(outputs), x, rng))
    return tuple(outputs)


def run_shuffled(D: Dataset, randomizers: Sequence[LocalRandomizer], rng: RandomnessStream) -> Transcript:
    """Permuta uniformemente il dataset e applica run_local."""
    _check_lengths(D, randomizers)
    pi = sample_permutation(len(D), rng)
    return run_local(apply_permutation(D, pi), randomizers, rng)


def run_swap(D: Dataset, randomizers: Sequence[LocalRandomizer], rng: RandomnessStream) -> Transcript:
    """Scambia x_1 con x_I, I uniforme (I = 1 è lo scambio identico), poi run_local."""
    _check_lengths(D, randomizers)
    index = rng.next_below(len(D))
    return run_local(swap_first(D, index), randomizers, rng)


def shuffle_responses(
    transcript: Sequence[Any],
    subset: Iterable[int],
    rng: RandomnessStream,
    randomizers: Optional[Sequence[LocalRandomizer]] = None,
) -> Transcript:
    """
    Permuta uniformemente le uscite con indice in subset (0-based).

    Args:
        transcript: Uscite da mescolare
        subset: Indici S da permutare tra loro
        rng: Stream per la permutazione
        randomizers: Se passati, i randomizer su S devono essere identici

    Raises:
        InvalidParameterError: indice fuori range o randomizer diversi su S
    """
    outputs = list(transcript)
    indices = sorted(set(int(i) for i in subset))
    if any(i < 0 or i >= len(outputs) for i in indices):
        raise InvalidParameterError(f"indici fuori da [0, {len(outputs)}): {indices}")
    if randomizers is not None:
        if len(randomizers) != len(outputs):
            raise InvalidParameterError("randomizer e transcript di lunghezza diversa")
        descriptors = {randomizers[i].descriptor for i in indices}
        if len(descriptors) > 1:
            raise InvalidParameterError(
                f"lo shuffling delle risposte richiede randomizer identici su S, trovati {sorted(descriptors)}"
            )
    if len(indices) < 2:
        return tuple(outputs)
    pi = sample_permutation(len(indices), rng)
    picked = [transcript[indices[int(j)]] for j in pi]
    for position, value in zip(indices, picked):
        outputs[position] = value
    logger.debug("responses_shuffled size=%d", len(indices))
    return tuple(outputs)
