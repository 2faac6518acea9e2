# app.py
# ShuffleLDP v1.0.0 - Entry Point
# ============================================================================
# Dashboard Streamlit per:
# - Calcolatore di amplificazione per shuffling
# - Simulazione del protocollo longitudinale (con shuffle opzionale)
# - Coperture diadiche dell'albero delle somme
# - Certificazione dei bound con l'oracolo binomiale esatto
# ============================================================================

import streamlit as st

# ============================================================================
# CONFIG
# ============================================================================

from config import load_settings, configure_logging

# ============================================================================
# UI
# ============================================================================

from ui import (
    MAIN_CSS,
    render_tool_picker,
    render_download_buttons,
    render_amplification_panel,
    render_simulation_panel,
    render_cover_panel,
    render_certification_panel,
)

configure_logging()
SETTINGS = load_settings()
APP = SETTINGS["app"]

# ============================================================================
# PAGE CONFIG
# ============================================================================

st.set_page_config(
    page_title=APP["title"],
    page_icon=APP["icon"],
    layout="wide",
    initial_sidebar_state="expanded"
)

# Inject CSS
st.markdown(MAIN_CSS, unsafe_allow_html=True)

# ============================================================================
# SESSION STATE INITIALIZATION
# ============================================================================

def initialize_session_state():
    """Inizializza le variabili di sessione necessarie."""
    defaults = {
        "simulation_run": None,
    }
    for key, value in defaults.items():
        if key not in st.session_state:
            st.session_state[key] = value


initialize_session_state()

# ============================================================================
# SIDEBAR
# ============================================================================

with st.sidebar:
    tool = render_tool_picker(st.sidebar)
    render_download_buttons(st.session_state["simulation_run"], st.sidebar)

# ============================================================================
# MAIN
# ============================================================================

st.title(f"{APP['icon']} {APP['title']}")
st.caption(APP["subtitle"])

if tool.endswith("Amplificazione"):
    render_amplification_panel(SETTINGS["amplification"])
elif tool.endswith("Simulazione"):
    render_simulation_panel(SETTINGS["simulation"])
elif tool.endswith("Copertura diadica"):
    render_cover_panel()
else:
    render_certification_panel(SETTINGS["amplification"])
