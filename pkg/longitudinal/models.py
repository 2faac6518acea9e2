# longitudinal/models.py
# ShuffleLDP v1.0.0 - Modelli dati del protocollo longitudinale
# ============================================================================

from dataclasses import dataclass, asdict
from typing import Any, Dict, Optional, Tuple

import numpy as np

from core.errors import InvalidParameterError, MalformedReportError

ChangeSequence = np.ndarray


# ============================================================================
# DATACLASSES
# ============================================================================

@dataclass(frozen=True)
class Report:
    """
    Un report (h, t, u) emesso dal client.

    Attributes:
        h: Livello dell'albero (1 = foglie)
        t: Istante di emissione, multiplo di 2^{h−1}
        u: Valore riportato in {−1, +1}
    """
    h: int
    t: int
    u: int

    @property
    def node(self) -> Tuple[int, int]:
        """Indice del nodo [h, t / 2^{h−1}]."""
        return self.h, self.t >> (self.h - 1)

    def validate(self, d: int) -> None:
        """Raises MalformedReportError se il report è incoerente con l'orizzonte d."""
        levels = log2_int(d) + 1
        if not (1 <= self.h <= levels):
            raise MalformedReportError(f"livello h={self.h} fuori da [1, {levels}]")
        if not (1 <= self.t <= d):
            raise MalformedReportError(f"istante t={self.t} fuori da [1, {d}]")
        if self.t % (1 << (self.h - 1)) != 0:
            raise MalformedReportError(f"2^(h-1) = {1 << (self.h - 1)} non divide t={self.t}")
        if self.u not in (-1, 1):
            raise MalformedReportError(f"u={self.u} non in {{-1, +1}}")

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        try:
            values = {key: data[key] for key in ("h", "t", "u")}
        except (KeyError, TypeError) as e:
            raise MalformedReportError(f"campo mancante nel report: {e}") from e
        for key, value in values.items():
            if isinstance(value, bool) or not isinstance(value, int):
                raise MalformedReportError(f"campo {key} deve essere intero, ottenuto {value!r}")
        return cls(**values)


@dataclass
class ClientState:
    """
    Stato di un client durante un'epoca di d istanti.

    Attributes:
        d: Orizzonte (potenza di 2)
        k: Budget di cambi
        kappa_star: Indice del cambio da riportare, in [1, k]
        h_star: Livello di report, in [1, log2(d) + 1]
        kappa: Cambi visti finora
        c: Valore in attesa di essere riportato (0 = niente)
        t_last: Ultimo istante elaborato
        epsilon: Budget fissato al primo aggiornamento
    """
    d: int
    k: int
    kappa_star: int
    h_star: int
    kappa: int = 0
    c: int = 0
    t_last: int = 0
    epsilon: Optional[float] = None

    @property
    def period(self) -> int:
        """Distanza tra due report consecutivi: 2^{h*−1}."""
        return 1 << (self.h_star - 1)

    @property
    def expected_reports(self) -> int:
        return self.d // self.period


# ============================================================================
# HELPER SU ORIZZONTE E SEQUENZE
# ============================================================================

def is_power_of_two(value: int) -> bool:
    return isinstance(value, (int, np.integer)) and value >= 1 and (int(value) & (int(value) - 1)) == 0


def log2_int(d: int) -> int:
    """log2(d) per d potenza di 2."""
    if not is_power_of_two(d):
        raise InvalidParameterError(f"d deve essere una potenza di 2, ottenuto {d}")
    return int(d).bit_length() - 1


def next_power_of_two(d: int) -> int:
    if d < 1:
        raise InvalidParameterError(f"d deve essere >= 1, ottenuto {d}")
    return 1 << (int(d) - 1).bit_length()


def as_change_sequence(x) -> ChangeSequence:
    """Converte in array int8 verificando che i valori siano in {−1, 0, 1}."""
    arr = np.asarray(x)
    if arr.ndim != 1:
        raise InvalidParameterError("una sequenza di cambi deve essere 1-D")
    if arr.size and not np.all(np.isin(arr, (-1, 0, 1))):
        raise InvalidParameterError("i cambi devono essere in {-1, 0, 1}")
    return arr.astype(np.int8)


def pad_horizon(x) -> Tuple[ChangeSequence, int]:
    """
    Estende x con cambi nulli fino alla potenza di 2 successiva.

    Returns:
        (sequenza estesa, nuovo d)
    """
    seq = as_change_sequence(x)
    if seq.size == 0:
        raise InvalidParameterError("sequenza vuota")
    d = next_power_of_two(seq.size)
    padded = np.zeros(d, dtype=np.int8)
    padded[: seq.size] = seq
    return padded, d


def clip_changes(x, k: int) -> ChangeSequence:
    """Azzera tutti i cambi dopo il k-esimo: ‖risultato‖₀ = min(‖x‖₀, k)."""
    if k < 1:
        raise InvalidParameterError(f"k deve essere >= 1, ottenuto {k}")
    seq = as_change_sequence(x).copy()
    nonzero = np.flatnonzero(seq)
    seq[nonzero[k:]] = 0
    return seq


def count_clipped(x, k: int) -> int:
    """Quanti cambi clip_changes eliminerebbe."""
    return max(0, int(np.count_nonzero(as_change_sequence(x))) - k)


def state_path(x) -> np.ndarray:
    """Stato st[t] = Σ_{ℓ≤t} x[ℓ]."""
    return np.cumsum(as_change_sequence(x), dtype=np.int64)
