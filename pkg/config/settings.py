# config/settings.py
# ShuffleLDP v1.0.0 - Caricamento impostazioni, logging, thread
# ============================================================================
# Carica shuffle_ldp.yaml dalla root del progetto (o da config/).
# Fallback silenzioso ai valori default se il file manca o è malformato.
# ============================================================================

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from .constants import (
    SETTINGS_FILE,
    SETTINGS_ALT,
    DEFAULT_N,
    DEFAULT_D,
    DEFAULT_K,
    DEFAULT_EPSILON,
    DEFAULT_BETA,
    DEFAULT_DELTA,
    DEFAULT_TRIALS,
    DEFAULT_SEED,
    DEFAULT_INPUT_MODEL,
    DEFAULT_SHUFFLE_MODE,
    DEFAULT_LEVEL_SCALING,
    DEFAULT_STEP_TIME,
    DEFAULT_LOG_LEVEL,
    THREADS_ENV_VAR,
    MAX_DEFAULT_THREADS,
    VERSION,
)

logger = logging.getLogger(__name__)

# Valori default (identici a quelli documentati in shuffle_ldp.yaml)
_DEFAULTS: Dict[str, Any] = {
    "simulation": {
        "n": DEFAULT_N,
        "d": DEFAULT_D,
        "k": DEFAULT_K,
        "epsilon": DEFAULT_EPSILON,
        "beta": DEFAULT_BETA,
        "delta": DEFAULT_DELTA,
        "trials": DEFAULT_TRIALS,
        "seed": DEFAULT_SEED,
        "input_model": DEFAULT_INPUT_MODEL,
        "shuffle_mode": DEFAULT_SHUFFLE_MODE,
        "level_scaling": DEFAULT_LEVEL_SCALING,
        "step_time": DEFAULT_STEP_TIME,
    },
    "amplification": {
        "epsilon0": 0.25,
        "n": 1000,
        "delta": 1e-4,
    },
    "app": {
        "title": "ShuffleLDP",
        "icon": "\U0001f500",
        "subtitle": f"Privacy longitudinale e amplificazione per shuffling - v{VERSION}",
    },
}


def _find_settings_file() -> Optional[Path]:
    """Ritorna il primo file di impostazioni esistente, o None."""
    for candidate in (SETTINGS_FILE, SETTINGS_ALT):
        if candidate.exists():
            return candidate
    return None


def load_settings(path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Carica le impostazioni da shuffle_ldp.yaml.

    Cerca in ordine:
    1. path esplicito (se passato)
    2. shuffle_ldp.yaml nella root del progetto
    3. config/shuffle_ldp.yaml

    Le sezioni mancanti o parziali prendono i valori default, chiave per chiave.

    Returns:
        Dict con sezioni 'simulation', 'amplification' e 'app'
    """
    config_path = path if path is not None else _find_settings_file()
    if config_path is None or not Path(config_path).exists():
        return {key: dict(section) for key, section in _DEFAULTS.items()}

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        logger.warning("settings_fallback path=%s error=%s", config_path, e)
        data = None

    if not isinstance(data, dict):
        return {key: dict(section) for key, section in _DEFAULTS.items()}

    logger.info("settings_loaded path=%s", config_path)
    result: Dict[str, Any] = {}
    for key, default_section in _DEFAULTS.items():
        user_section = data.get(key, {})
        if not isinstance(user_section, dict):
            user_section = {}
        result[key] = {**default_section, **user_section}
    return result


def get_default_threads() -> int:
    """
    Numero di thread di default per prove e scansioni parallele.

    Legge SHUFFLE_LDP_THREADS (anche da .env). Valori assenti o non validi
    ricadono su os.cpu_count(), limitato a MAX_DEFAULT_THREADS.
    """
    load_dotenv()
    raw = os.getenv(THREADS_ENV_VAR, "").strip()
    if raw:
        try:
            value = int(raw)
            if value >= 1:
                return value
        except ValueError:
            pass
        logger.warning("threads_env_invalid value=%r", raw)
    return max(1, min(os.cpu_count() or 1, MAX_DEFAULT_THREADS))


def configure_logging(verbose: bool = False) -> None:
    """Configura il logging su stderr (DEBUG con verbose, altrimenti default)."""
    level = logging.DEBUG if verbose else getattr(logging, DEFAULT_LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger().setLevel(level)
