# harness/inputs.py
# ShuffleLDP v1.0.0 - Generatori di popolazioni sintetiche
# ============================================================================
# Ogni riga della matrice (n, d) int8 è la ChangeSequence di un client.
#   worst-case-sparse: tutti cambiano negli stessi min(k, d) istanti
#   random-changes:    min(k, d) istanti distinti per client, segni alternati
#   step-function:     tutti passano a 1 all'istante step_time
#   file:              righe JSON-lines (array, oppure {"x": [...]})
# I modelli sintetici alternano +1/−1 partendo da +1: lo stato resta in {0, 1}.
# ============================================================================

import json
import logging
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np

from config import INPUT_MODELS, DEFAULT_STEP_TIME
from core.errors import InputParseError, InvalidParameterError
from core.randomness import RandomnessStream

logger = logging.getLogger(__name__)


def _alternating_signs(count: int) -> np.ndarray:
    return np.where(np.arange(count) % 2 == 0, 1, -1).astype(np.int8)


def _check_shape(n: int, d: int, k: int) -> None:
    for name, value in (("n", n), ("d", d), ("k", k)):
        if isinstance(value, bool) or int(value) != value or value < 1:
            raise InvalidParameterError(f"{name} deve essere un intero >= 1, ottenuto {value}")


def _worst_case_sparse(n: int, d: int, k: int, rng: RandomnessStream) -> np.ndarray:
    changes = min(k, d)
    times = np.sort(np.argsort(rng.uniforms(d), kind="stable")[:changes])
    X = np.zeros((n, d), dtype=np.int8)
    X[:, times] = _alternating_signs(changes)
    return X


def _random_changes(n: int, d: int, k: int, rng: RandomnessStream) -> np.ndarray:
    changes = min(k, d)
    keys = rng.uniforms(n * d).reshape(n, d)
    times = np.sort(np.argsort(keys, axis=1, kind="stable")[:, :changes], axis=1)
    X = np.zeros((n, d), dtype=np.int8)
    rows = np.repeat(np.arange(n), changes)
    X[rows, times.ravel()] = np.tile(_alternating_signs(changes), n)
    return X


def _step_function(n: int, d: int, step_time: int) -> np.ndarray:
    if isinstance(step_time, bool) or int(step_time) != step_time or step_time < 1:
        raise InvalidParameterError(f"step_time deve essere un intero >= 1, ottenuto {step_time}")
    X = np.zeros((n, d), dtype=np.int8)
    X[:, min(int(step_time), d) - 1] = 1
    return X


def parse_change_file(text: str) -> np.ndarray:
    """
    Legge sequenze di cambi da JSON-lines.

    Raises:
        InputParseError: riga non valida, valori fuori da {−1, 0, 1} o
            lunghezza diversa dalla prima riga
    """
    rows = []
    width: Optional[int] = None
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise InputParseError(f"JSON non valido: {e.msg}", line_number) from e
        if isinstance(data, dict):
            data = data.get("x")
        if not isinstance(data, list) or not data:
            raise InputParseError("attesa una lista non vuota (o un oggetto con chiave 'x')", line_number)
        if any(isinstance(v, bool) or v not in (-1, 0, 1) for v in data):
            raise InputParseError("i cambi devono essere interi in {-1, 0, 1}", line_number)
        if width is None:
            width = len(data)
        elif len(data) != width:
            raise InputParseError(f"lunghezza {len(data)} diversa da {width}", line_number)
        rows.append(data)
    if not rows:
        raise InvalidParameterError("il file di input non contiene sequenze")
    return np.asarray(rows, dtype=np.int8)


def generate_inputs(
    n: int,
    d: int,
    k: int,
    input_model: str,
    rng: RandomnessStream,
    step_time: int = DEFAULT_STEP_TIME,
    path: Optional[Union[str, Path]] = None,
) -> np.ndarray:
    """
    Genera la popolazione come matrice (n, d) di cambi.

    Args:
        n: Numero di client
        d: Orizzonte (prima del padding)
        k: Budget di cambi
        input_model: Una delle chiavi di INPUT_MODELS
        rng: Stream della lane degli input
        step_time: Istante del gradino (modello step-function)
        path: File JSON-lines (modello file)

    Returns:
        Array int8 (n, d); i modelli sintetici rispettano ‖x‖₀ <= k
    """
    _check_shape(n, d, k)
    if input_model not in INPUT_MODELS:
        raise InvalidParameterError(f"modello di input sconosciuto: {input_model!r}")

    if input_model == "worst-case-sparse":
        X = _worst_case_sparse(n, d, k, rng)
    elif input_model == "random-changes":
        X = _random_changes(n, d, k, rng)
    elif input_model == "step-function":
        X = _step_function(n, d, step_time)
    else:
        if path is None:
            raise InvalidParameterError("il modello 'file' richiede un percorso di input")
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise InvalidParameterError(f"impossibile leggere {path}: {e}") from e
        X = parse_change_file(text)
        if X.shape != (n, d):
            raise InvalidParameterError(f"il file contiene {X.shape[0]}x{X.shape[1]} cambi, attesi {n}x{d}")

    logger.debug("inputs_generated model=%s n=%d d=%d k=%d", input_model, n, d, k)
    return X


def clip_population(X: np.ndarray, k: int) -> Tuple[np.ndarray, int]:
    """
    Azzera i cambi oltre il k-esimo di ogni riga.

    Returns:
        (matrice clippata, numero di cambi eliminati)
    """
    nonzero = X != 0
    extra = nonzero & (np.cumsum(nonzero, axis=1) > k)
    clipped = int(extra.sum())
    if clipped:
        X = X.copy()
        X[extra] = 0
    return X, clipped


def pad_population(X: np.ndarray) -> np.ndarray:
    """Aggiunge colonne nulle fino alla potenza di 2 successiva."""
    n, d = X.shape
    padded_d = 1 << (d - 1).bit_length()
    if padded_d == d:
        return X
    padded = np.zeros((n, padded_d), dtype=X.dtype)
    padded[:, :d] = X
    return padded


def true_marginals(X: np.ndarray) -> np.ndarray:
    """f_t = Σ_i Σ_{ℓ≤t} x_i[ℓ]."""
    return np.cumsum(X.sum(axis=0, dtype=np.int64), dtype=np.int64)
