# longitudinal/population.py
# ShuffleLDP v1.0.0 - Motore vettoriale per popolazioni di client
# ============================================================================
# Produce gli stessi report di run_client eseguito client per client sugli
# stream (seed, LANE_CLIENT, trial, i), ma con operazioni numpy su tutta la
# popolazione. Stessi contatori, stesse uniformi, stessi confronti: il
# risultato è bit-identico.
# ============================================================================

import logging
from dataclasses import dataclass

import numpy as np

from config import LANE_CLIENT
from core.errors import InvalidParameterError
from core.privacy import rr_probability
from core.randomness import counter_uniforms, stream_ids_for
from .models import log2_int

logger = logging.getLogger(__name__)


@dataclass
class PopulationReports:
    """Report di tutti i client come array paralleli (ordinati per client, poi per t)."""
    h: np.ndarray
    t: np.ndarray
    u: np.ndarray
    client: np.ndarray

    def __len__(self) -> int:
        return int(self.h.size)

    def take(self, order: np.ndarray) -> "PopulationReports":
        return PopulationReports(self.h[order], self.t[order], self.u[order], self.client[order])


def simulate_population_reports(
    X: np.ndarray,
    k: int,
    epsilon: float,
    seed: int,
    trial: int,
) -> PopulationReports:
    """
    Esegue il client longitudinale su ogni riga di X.

    Args:
        X: Matrice (n, d) di cambi in {−1, 0, 1}, d potenza di 2
        k: Budget di cambi
        epsilon: Budget di privacy dei client
        seed: Seed principale
        trial: Indice della prova (entra nello stream_id)

    Returns:
        PopulationReports con h, t, u e indice del client
    """
    X = np.asarray(X)
    if X.ndim != 2:
        raise InvalidParameterError("X deve essere una matrice (n, d)")
    n, d = X.shape
    levels = log2_int(d) + 1
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise InvalidParameterError(f"k deve essere un intero >= 1, ottenuto {k}")
    if not (epsilon > 0):
        raise InvalidParameterError(f"epsilon deve essere > 0, ottenuto {epsilon}")

    clients = np.arange(n, dtype=np.uint64)
    ids = stream_ids_for(LANE_CLIENT, trial, clients)

    # Setup: contatori 0 (κ*) e 1 (h*), come RandomnessStream.next_below
    u_kappa = counter_uniforms(seed, ids, np.zeros(n, dtype=np.uint64))
    u_level = counter_uniforms(seed, ids, np.ones(n, dtype=np.uint64))
    kappa_star = 1 + np.minimum((u_kappa * k).astype(np.int64), k - 1)
    h_star = 1 + np.minimum((u_level * levels).astype(np.int64), levels - 1)

    # Istante τ del κ*-esimo cambio (0 se non esiste) e suo segno
    nonzero = X != 0
    seen = np.cumsum(nonzero, axis=1)
    hit = nonzero & (seen == kappa_star[:, None])
    has_change = hit.any(axis=1)
    tau = np.where(has_change, hit.argmax(axis=1) + 1, 0)
    sign = np.where(has_change, X[np.arange(n), np.maximum(tau - 1, 0)], 0).astype(np.int64)

    # Report: t = j·2^{h*−1}, j = 1 … d/2^{h*−1}
    period = np.left_shift(np.int64(1), h_star - 1)
    per_client = d // period
    client = np.repeat(np.arange(n, dtype=np.int64), per_client)
    starts = np.cumsum(per_client) - per_client
    j = np.arange(client.size, dtype=np.int64) - np.repeat(starts, per_client) + 1
    h = h_star[client]
    t = j * period[client]

    # Il report che porta il dato è il primo con t >= τ: j = ⌈τ / 2^{h*−1}⌉
    data_j = np.where(has_change, -(-tau // period), 0)
    carries = has_change[client] & (j == data_j[client])

    draws = counter_uniforms(seed, ids[client], (1 + j).astype(np.uint64))
    p = rr_probability(epsilon)
    noise = np.where(draws < 0.5, 1, -1)
    c = sign[client]
    answered = np.where(draws < p, c, -c)
    u = np.where(carries, answered, noise).astype(np.int64)

    logger.debug("population_reports n=%d d=%d trial=%d reports=%d", n, d, trial, client.size)
    return PopulationReports(h=h, t=t, u=u, client=client)
