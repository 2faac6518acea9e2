# config/constants.py
# ShuffleLDP v1.0.0 - Costanti globali
# ============================================================================

import os as _os
from pathlib import Path

# ============================================================================
# VERSIONE
# ============================================================================

VERSION = "1.0.0"
VERSION_STRING = f"v{VERSION}"
VERSION_DESCRIPTION = "raccolta longitudinale LDP + amplificazione per shuffling"

# ============================================================================
# PATHS
# ============================================================================

# Base directory (parent della cartella config)
BASE_DIR = Path(__file__).parent.parent

# File di configurazione utente
SETTINGS_FILE = BASE_DIR / "shuffle_ldp.yaml"
SETTINGS_ALT = BASE_DIR / "config" / "shuffle_ldp.yaml"

# ============================================================================
# TOLLERANZE NUMERICHE
# ============================================================================

# Un vettore di probabilità è valido se |Σ − 1| ≤ tolleranza
NORMALIZATION_TOLERANCE = 1e-9

# Margine usato nei confronti "≤ bound" tra formule chiuse
BOUND_SLACK = 1e-12

# ============================================================================
# LIMITI
# ============================================================================

# L'oracolo esatto è O(n²) per coppia (m, m+1): oltre questo n è troppo lento
ORACLE_MAX_N = 10_000

# simulate rifiuta n·d oltre questa soglia senza --allow-large
RESOURCE_GUARD_LIMIT = 10**9

# Le enumerazioni esatte su permutazioni esplodono come n!
ENUMERATION_MAX_N = 7

# ============================================================================
# DEFAULTS - SIMULAZIONE
# ============================================================================

DEFAULT_N = 10_000
DEFAULT_D = 64
DEFAULT_K = 4
DEFAULT_EPSILON = 1.0
DEFAULT_BETA = 1 / 3
DEFAULT_DELTA = 1e-6
DEFAULT_TRIALS = 1
DEFAULT_SEED = 0
DEFAULT_STEP_TIME = 2

INPUT_MODELS = {
    "worst-case-sparse": "Tutti i client cambiano negli stessi k istanti",
    "random-changes": "k cambi in istanti casuali, stato sempre in {0,1}",
    "step-function": "Tutti i client passano a 1 nello stesso istante",
    "file": "Sequenze lette da un file JSON-lines",
}
DEFAULT_INPUT_MODEL = "random-changes"

SHUFFLE_MODES = {
    "none": "I report arrivano al server nell'ordine dei client",
    "post-shuffle": "Report anonimi, mescolati prima dell'aggregazione",
}
DEFAULT_SHUFFLE_MODE = "none"

# Fattore di livello usato dal server per de-campionare h*
LEVEL_SCALINGS = {
    "sampled": "log2(d) + 1 livelli campionabili (stimatore non distorto)",
    "literal": "max(log2(d), 1), fattore letterale dell'aggregatore",
}
DEFAULT_LEVEL_SCALING = "sampled"

# Quantili riportati nel riepilogo delle prove
SUMMARY_QUANTILES = (0.1, 0.5, 0.9)

# ============================================================================
# DEFAULTS - AMPLIFICAZIONE
# ============================================================================

# Griglia di ordini α per la conversione RDP → (ε, δ)
RDP_ALPHAS = tuple(
    [1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 5.0, 6.0, 8.0, 10.0, 12.0, 16.0,
     20.0, 32.0, 64.0, 128.0, 256.0, 512.0, 1024.0]
)

# Ipotesi del bound semplificato / del corollario sui gruppi
SIMPLIFIED_MIN_N = 1000
SIMPLIFIED_MAX_EPSILON0 = 0.5
SIMPLIFIED_MAX_DELTA = 0.01

REGIMES = ("general", "moderate", "simplified", "no-amplification")

# ============================================================================
# STREAM DI CASUALITÀ
# ============================================================================

# stream_id = (lane << 56) | (trial << 32) | client
LANE_CLIENT = 0
LANE_INPUTS = 1
LANE_SHUFFLER = 2
MAX_CLIENTS = 2**32
MAX_TRIALS = 2**24

# ============================================================================
# CLI
# ============================================================================

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CERTIFICATION_FAILED = 3

# Override possibile via env var (anche da file .env)
THREADS_ENV_VAR = "SHUFFLE_LDP_THREADS"
MAX_DEFAULT_THREADS = 8

# Cifre significative per i float nei CSV
CSV_FLOAT_FORMAT = ".17g"

# Livello di log di default (override via SHUFFLE_LDP_LOG_LEVEL)
DEFAULT_LOG_LEVEL = _os.environ.get("SHUFFLE_LDP_LOG_LEVEL", "WARNING")
