# core/randomness.py
# ShuffleLDP v1.0.0 - Stream di casualità counter-based
# ============================================================================
# Ogni estrazione è una funzione pura di (seed, stream_id, contatore):
#   key   = mix(mix(seed + G) ^ stream_id + G)
#   x_c   = mix(key + (c + 1)·G)            (G = costante aurea a 64 bit)
#   u_c   = (x_c >> 11) · 2^-53             (uniforme in [0, 1))
# Il finalizzatore è quello di SplitMix64. Due stream con (seed, stream_id)
# diversi sono indipendenti ai fini dei test; lo stesso paio riproduce
# esattamente le stesse estrazioni, anche in parallelo e in qualsiasi ordine.
#
# La versione numpy (counter_uniforms) è bit-identica a quella scalare:
# il motore di popolazione la usa per simulare 10⁵ client senza loop Python.
# ============================================================================

import logging
from typing import List, Union

import numpy as np

from config import LANE_CLIENT, LANE_INPUTS, LANE_SHUFFLER, MAX_CLIENTS, MAX_TRIALS
from .errors import InvalidParameterError

logger = logging.getLogger(__name__)

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_INV_2_53 = 2.0 ** -53

_LANES = (LANE_CLIENT, LANE_INPUTS, LANE_SHUFFLER)


# ============================================================================
# VERSIONE SCALARE
# ============================================================================

def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def _stream_key(seed: int, stream_id: int) -> int:
    key = _mix64((seed + _GOLDEN) & _MASK)
    return _mix64(((key ^ stream_id) + _GOLDEN) & _MASK)


def derive_stream_id(lane: int, trial: int, client: int) -> int:
    """
    Etichetta a 64 bit di uno stream: (lane << 56) | (trial << 32) | client.

    Args:
        lane: LANE_CLIENT, LANE_INPUTS o LANE_SHUFFLER
        trial: indice della prova, in [0, 2^24)
        client: indice del client, in [0, 2^32)
    """
    if lane not in _LANES:
        raise InvalidParameterError(f"lane sconosciuta: {lane}")
    if not (0 <= trial < MAX_TRIALS):
        raise InvalidParameterError(f"trial fuori range: {trial}")
    if not (0 <= client < MAX_CLIENTS):
        raise InvalidParameterError(f"client fuori range: {client}")
    return (lane << 56) | (trial << 32) | client


class RandomnessStream:
    """
    Sequenza deterministica di uniformi indicizzata da un contatore.

    Non è thread-safe: uno stream per thread. seek() permette di saltare
    direttamente a un'estrazione (il client la usa per legare ogni report
    a un contatore fisso, indipendente da quanti report lo precedono).
    """

    def __init__(self, seed: int, stream_id: int = 0):
        if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
            raise InvalidParameterError(f"seed deve essere intero, ottenuto {seed!r}")
        self.seed = int(seed) & _MASK
        self.stream_id = int(stream_id) & _MASK
        self._key = _stream_key(self.seed, self.stream_id)
        self.counter = 0

    def __repr__(self) -> str:
        return f"RandomnessStream(seed={self.seed}, stream_id={self.stream_id:#x}, counter={self.counter})"

    def seek(self, counter: int) -> None:
        if counter < 0:
            raise InvalidParameterError(f"contatore negativo: {counter}")
        self.counter = int(counter)

    def next_uint64(self) -> int:
        value = _mix64((self._key + (self.counter + 1) * _GOLDEN) & _MASK)
        self.counter += 1
        return value

    def next_uniform(self) -> float:
        """Uniforme in [0, 1) con 53 bit di precisione."""
        return (self.next_uint64() >> 11) * _INV_2_53

    def next_below(self, bound: int) -> int:
        """Intero in [0, bound) come floor(u · bound)."""
        if bound < 1:
            raise InvalidParameterError(f"bound deve essere >= 1, ottenuto {bound}")
        return min(int(self.next_uniform() * bound), bound - 1)

    def uniforms(self, count: int) -> np.ndarray:
        """Blocco di count uniformi consecutive (avanza il contatore)."""
        counters = np.arange(self.counter, self.counter + count, dtype=np.uint64)
        block = counter_uniforms(self.seed, np.full(count, self.stream_id, dtype=np.uint64), counters)
        self.counter += count
        return block

    def spawn(self, lane: int, trial: int, client: int) -> "RandomnessStream":
        """Stream figlio con lo stesso seed e un'etichetta derivata."""
        return RandomnessStream(self.seed, derive_stream_id(lane, trial, client))


# ============================================================================
# VERSIONE VETTORIALE (numpy, bit-identica)
# ============================================================================

_U_GOLDEN = np.uint64(_GOLDEN)
_U_MIX1 = np.uint64(_MIX1)
_U_MIX2 = np.uint64(_MIX2)
_U_ONE = np.uint64(1)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _U_MIX1
    z = (z ^ (z >> np.uint64(27))) * _U_MIX2
    return z ^ (z >> np.uint64(31))


def counter_uniforms(
    seed: int,
    stream_ids: Union[np.ndarray, List[int], int],
    counters: Union[np.ndarray, List[int], int],
) -> np.ndarray:
    """
    Uniformi per coppie (stream_id, contatore), con broadcasting numpy.

    Returns:
        Array float64 in [0, 1), identico a RandomnessStream(seed, s).seek(c)
        seguito da next_uniform() per ogni coppia.
    """
    ids = np.asarray(stream_ids, dtype=np.uint64)
    ctr = np.asarray(counters, dtype=np.uint64)
    with np.errstate(over="ignore"):
        base = np.uint64(_mix64((int(seed) + _GOLDEN) & _MASK))
        keys = _mix64_array((ids ^ base) + _U_GOLDEN)
        values = _mix64_array(keys + (ctr + _U_ONE) * _U_GOLDEN)
    return (values >> np.uint64(11)).astype(np.float64) * _INV_2_53


def stream_ids_for(lane: int, trial: int, clients: np.ndarray) -> np.ndarray:
    """Versione vettoriale di derive_stream_id su un array di client."""
    derive_stream_id(lane, trial, 0)
    clients = np.asarray(clients, dtype=np.uint64)
    if clients.size and int(clients.max()) >= MAX_CLIENTS:
        raise InvalidParameterError("indice client fuori range")
    prefix = np.uint64((lane << 56) | (trial << 32))
    return clients | prefix


# ============================================================================
# PERMUTAZIONI
# ============================================================================

def sample_permutation(n: int, rng: RandomnessStream) -> np.ndarray:
    """
    Permutazione uniforme di [0, n) con Fisher-Yates guidato dallo stream.

    Consuma n − 1 uniformi; la permutazione non viene mai loggata.
    """
    if n < 0:
        raise InvalidParameterError(f"n deve essere >= 0, ottenuto {n}")
    perm = np.arange(n, dtype=np.int64)
    if n < 2:
        return perm
    draws = rng.uniforms(n - 1)
    for step, i in enumerate(range(n - 1, 0, -1)):
        j = min(int(draws[step] * (i + 1)), i)
        perm[i], perm[j] = perm[j], perm[i]
    logger.debug("permutation_sampled n=%d", n)
    return perm


def sort_permutation(n: int, seed: int, stream_id: int) -> np.ndarray:
    """
    Permutazione di [0, n) ordinando n chiavi uniformi (argsort stabile).

    Usata per mescolare milioni di report senza loop Python; le collisioni
    tra chiavi a 53 bit sono trascurabili a queste dimensioni.
    """
    keys = counter_uniforms(seed, np.full(n, stream_id, dtype=np.uint64), np.arange(n, dtype=np.uint64))
    return np.argsort(keys, kind="stable")
