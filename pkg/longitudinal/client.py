# longitudinal/client.py
# ShuffleLDP v1.0.0 - Client longitudinale
# ============================================================================
# Setup: campiona κ* ∈ [k] e h* ∈ [log2(d) + 1].
# Update(t, x_t): conta i cambi, memorizza il κ*-esimo; se 2^{h*−1} | t
# emette (h*, t, u) con u = RR(c) se c ≠ 0 (poi c = 0), altrimenti un segno
# uniforme. I tempi di report non dipendono dai dati.
#
# Contatori dello stream del client:
#   0 → κ*, 1 → h*, 1 + j → j-esimo report (j = t / 2^{h*−1})
# ============================================================================

import itertools
import logging
import math
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from core.errors import InvalidParameterError, ProtocolError
from core.privacy import rr_probability
from core.randomness import RandomnessStream
from mechanisms.randomized_response import binary_rr, uniform_sign
from .models import ClientState, Report, as_change_sequence, log2_int

logger = logging.getLogger(__name__)

Transcript = Tuple[Report, ...]


def _check_k(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidParameterError(f"k deve essere un intero >= 1, ottenuto {k}")


def client_setup(d: int, k: int, rng: RandomnessStream) -> ClientState:
    """
    Inizializza un client per un'epoca di d istanti.

    Args:
        d: Orizzonte, potenza di 2
        k: Massimo numero di cambi
        rng: Stream nuovo e riservato al client (usa i contatori 0 e 1);
            ogni client ne deriva uno proprio con spawn / derive_stream_id

    Returns:
        ClientState con κ*, h* campionati e κ = c = 0

    Raises:
        ProtocolError: stream già usato (contatore diverso da 0)
    """
    levels = log2_int(d) + 1
    _check_k(k)
    if rng.counter != 0:
        raise ProtocolError(f"client_setup richiede uno stream nuovo, contatore={rng.counter}")
    kappa_star = 1 + rng.next_below(int(k))
    h_star = 1 + rng.next_below(levels)
    return ClientState(d=int(d), k=int(k), kappa_star=kappa_star, h_star=h_star)


def client_update(
    state: ClientState,
    t: int,
    x_t: int,
    epsilon: float,
    rng: RandomnessStream,
) -> Optional[Report]:
    """
    Elabora il cambio dell'istante t; ritorna un Report o None.

    Raises:
        ProtocolError: t non consecutivo, oltre d, o ε diverso dal primo
        InvalidParameterError: x_t fuori da {−1, 0, 1}
    """
    if x_t not in (-1, 0, 1):
        raise InvalidParameterError(f"x_t deve essere in {{-1, 0, 1}}, ottenuto {x_t!r}")
    if t != state.t_last + 1 or t > state.d:
        raise ProtocolError(f"atteso t={state.t_last + 1} (d={state.d}), ricevuto t={t}")
    if state.epsilon is None:
        if not (epsilon > 0):
            raise InvalidParameterError(f"epsilon deve essere > 0, ottenuto {epsilon}")
        state.epsilon = float(epsilon)
    elif epsilon != state.epsilon:
        raise ProtocolError(f"epsilon cambiato durante l'epoca: {state.epsilon} -> {epsilon}")

    state.t_last = t
    if x_t != 0:
        state.kappa += 1
        if state.kappa == state.kappa_star:
            state.c = int(x_t)

    if t % state.period != 0:
        return None

    rng.seek(1 + (t >> (state.h_star - 1)))
    if state.c == 0:
        u = uniform_sign(rng)
    else:
        u = binary_rr(state.c, state.epsilon, rng)
        # Il valore viene riportato una sola volta
        state.c = 0
    return Report(h=state.h_star, t=t, u=u)


def run_client(x, k: int, epsilon: float, rng: RandomnessStream) -> List[Report]:
    """Esegue setup e tutti gli update su una sequenza completa."""
    seq = as_change_sequence(x)
    state = client_setup(int(seq.size), k, rng)
    reports = []
    for t, x_t in enumerate(seq.tolist(), start=1):
        report = client_update(state, t, x_t, epsilon, rng)
        if report is not None:
            reports.append(report)
    return reports


# ============================================================================
# DISTRIBUZIONE ESATTA DEL TRANSCRIPT
# ============================================================================

def _data_report_index(seq: np.ndarray, kappa_star: int, period: int) -> Optional[int]:
    """Indice (0-based) del report che porta il κ*-esimo cambio, se esiste."""
    nonzero = np.flatnonzero(seq)
    if kappa_star > nonzero.size:
        return None
    tau = int(nonzero[kappa_star - 1]) + 1
    return math.ceil(tau / period) - 1


def transcript_distribution(x, k: int, epsilon: float) -> Dict[Transcript, float]:
    """
    Distribuzione esatta dei transcript di run_client(x), marginalizzando
    κ*, h* e tutte le monete.

    Pensata per d <= 8: i transcript di un livello sono 2^{d/2^{h−1}}.
    """
    seq = as_change_sequence(x)
    d = int(seq.size)
    levels = log2_int(d) + 1
    _check_k(k)
    p = rr_probability(epsilon)
    weight = 1.0 / (k * levels)

    distribution: Dict[Transcript, float] = defaultdict(float)
    for kappa_star in range(1, k + 1):
        for h_star in range(1, levels + 1):
            period = 1 << (h_star - 1)
            times = list(range(period, d + 1, period))
            data_index = _data_report_index(seq, kappa_star, period)
            c = int(seq[np.flatnonzero(seq)[kappa_star - 1]]) if data_index is not None else 0
            for signs in itertools.product((-1, 1), repeat=len(times)):
                prob = weight
                for index, u in enumerate(signs):
                    if index == data_index:
                        prob *= p if u == c else 1.0 - p
                    else:
                        prob *= 0.5
                transcript = tuple(Report(h=h_star, t=t, u=u) for t, u in zip(times, signs))
                distribution[transcript] += prob
    return dict(distribution)


def valid_change_sequences(d: int, k: int) -> Iterable[np.ndarray]:
    """Tutte le sequenze in {−1, 0, 1}^d con al più k cambi."""
    for values in itertools.product((-1, 0, 1), repeat=d):
        if sum(1 for v in values if v != 0) <= k:
            yield np.asarray(values, dtype=np.int8)


def max_transcript_privacy_loss(d: int, k: int, epsilon: float) -> float:
    """
    Massimo rapporto di verosimiglianza tra transcript di due input validi.

    Il protocollo è ε-LDP se il risultato è <= e^ε.
    """
    tables = [transcript_distribution(x, k, epsilon) for x in valid_change_sequences(d, k)]
    support = set().union(*tables)
    worst = 1.0
    for transcript in support:
        probs = [table.get(transcript, 0.0) for table in tables]
        low, high = min(probs), max(probs)
        if low == 0.0:
            return math.inf
        worst = max(worst, high / low)
    logger.debug("transcript_ldp d=%d k=%d eps=%r max_ratio=%r", d, k, epsilon, worst)
    return worst
