# mechanisms/enumeration.py
# ShuffleLDP v1.0.0 - Oracoli esatti per enumerazione
# ============================================================================
# Distribuzioni esatte dei transcript per randomizer con alfabeto finito.
# Costo esponenziale (|S|^n · n!): solo per istanze piccole, n <= 7.
# ============================================================================

import itertools
import math
from collections import defaultdict
from typing import Any, Dict, Iterable, Sequence

from config import ENUMERATION_MAX_N
from core.errors import InvalidParameterError
from .base import LocalRandomizer
from .shuffle import Dataset, Transcript, apply_permutation, swap_first

TranscriptDistribution = Dict[Transcript, float]


def _check_size(D: Dataset, randomizers: Sequence[LocalRandomizer]) -> None:
    if not (1 <= len(D) <= ENUMERATION_MAX_N):
        raise InvalidParameterError(f"enumerazione esatta limitata a 1 <= n <= {ENUMERATION_MAX_N}")
    if len(randomizers) != len(D):
        raise InvalidParameterError(f"servono {len(D)} randomizer, ricevuti {len(randomizers)}")


def exact_local_distribution(D: Dataset, randomizers: Sequence[LocalRandomizer]) -> TranscriptDistribution:
    """Distribuzione esatta di run_local(D) sui transcript."""
    _check_size(D, randomizers)
    layer: Dict[Transcript, float] = {(): 1.0}
    for x, randomizer in zip(D, randomizers):
        following: Dict[Transcript, float] = defaultdict(float)
        for prefix, weight in layer.items():
            for symbol, prob in randomizer.output_distribution(prefix, x).items():
                if prob > 0:
                    following[prefix + (symbol,)] += weight * prob
        layer = following
    return dict(layer)


def _mixture(parts: Iterable[TranscriptDistribution], weight: float) -> TranscriptDistribution:
    mixed: Dict[Transcript, float] = defaultdict(float)
    for part in parts:
        for transcript, prob in part.items():
            mixed[transcript] += weight * prob
    return dict(mixed)


def exact_shuffled_distribution(D: Dataset, randomizers: Sequence[LocalRandomizer]) -> TranscriptDistribution:
    """Media di exact_local su tutte le n! permutazioni del dataset."""
    _check_size(D, randomizers)
    n = len(D)
    parts = (
        exact_local_distribution(apply_permutation(D, pi), randomizers)
        for pi in itertools.permutations(range(n))
    )
    return _mixture(parts, 1.0 / math.factorial(n))


def exact_swap_distribution(D: Dataset, randomizers: Sequence[LocalRandomizer]) -> TranscriptDistribution:
    """Media di exact_local sui dataset σ_I(D), I uniforme."""
    _check_size(D, randomizers)
    n = len(D)
    parts = (exact_local_distribution(swap_first(D, i), randomizers) for i in range(n))
    return _mixture(parts, 1.0 / n)


def exact_post_shuffle_distribution(
    D: Dataset,
    randomizers: Sequence[LocalRandomizer],
    subset: Iterable[int],
) -> TranscriptDistribution:
    """Distribuzione di shuffle_responses(run_local(D), S)."""
    _check_size(D, randomizers)
    indices = sorted(set(int(i) for i in subset))
    if any(i < 0 or i >= len(D) for i in indices):
        raise InvalidParameterError(f"indici fuori da [0, {len(D)}): {indices}")
    local = exact_local_distribution(D, randomizers)
    perms = list(itertools.permutations(range(len(indices))))
    mixed: Dict[Transcript, float] = defaultdict(float)
    for transcript, prob in local.items():
        for pi in perms:
            outputs = list(transcript)
            for position, j in zip(indices, pi):
                outputs[position] = transcript[indices[j]]
            mixed[tuple(outputs)] += prob / len(perms)
    return dict(mixed)


def marginal(distribution: TranscriptDistribution, positions: Sequence[int]) -> TranscriptDistribution:
    """Marginale del transcript sulle posizioni date."""
    result: Dict[Transcript, float] = defaultdict(float)
    for transcript, prob in distribution.items():
        result[tuple(transcript[i] for i in positions)] += prob
    return dict(result)


def max_abs_difference(first: TranscriptDistribution, second: TranscriptDistribution) -> float:
    keys = set(first) | set(second)
    return max((abs(first.get(k, 0.0) - second.get(k, 0.0)) for k in keys), default=0.0)


def certify_local_dp(
    randomizer: LocalRandomizer,
    priors: Iterable[Sequence[Any]],
    inputs: Sequence[Any],
) -> float:
    """
    Massima perdita di privacy |log Pr[s|x] − log Pr[s|x']|, per enumerazione.

    Args:
        randomizer: Randomizer da certificare
        priors: Prefissi delle uscite precedenti da fissare
        inputs: Valori di input da confrontare a coppie

    Returns:
        La perdita massima (inf se un'uscita è possibile solo per alcuni input)
    """
    worst = 0.0
    for prior in priors:
        tables = [randomizer.output_distribution(tuple(prior), x) for x in inputs]
        symbols = set().union(*tables)
        for symbol in symbols:
            probs = [table.get(symbol, 0.0) for table in tables]
            low, high = min(probs), max(probs)
            if high == 0:
                continue
            if low == 0:
                return math.inf
            worst = max(worst, math.log(high) - math.log(low))
    return worst
