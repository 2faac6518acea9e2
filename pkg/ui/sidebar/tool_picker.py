# ui/sidebar/tool_picker.py
# ShuffleLDP v1.0.0 - Sidebar: scelta dello strumento
# ============================================================================

import streamlit as st

from config import VERSION_STRING, VERSION_DESCRIPTION

# Strumento → descrizione mostrata sotto il selettore
TOOLS = {
    "🔐 Amplificazione": "Bound di amplificazione per shuffling, RDP e gruppi",
    "📈 Simulazione": "Client longitudinali, shuffle opzionale, errore delle stime",
    "🌳 Copertura diadica": "Nodi dell'albero che coprono [1, t]",
    "✅ Certificazione": "Confronto del bound con il δ esatto della RR a un bit",
}


def render_tool_picker(container=None) -> str:
    """
    Renderizza il selettore di strumento nella sidebar.

    Args:
        container: Container Streamlit (default: st.sidebar)

    Returns:
        Chiave di TOOLS scelta
    """
    container = container or st.sidebar
    container.markdown("### 🧰 Strumenti")
    tool = container.radio("Strumento", list(TOOLS.keys()), label_visibility="collapsed")
    container.caption(TOOLS[tool])
    container.markdown("---")
    container.caption(f"ShuffleLDP {VERSION_STRING} · {VERSION_DESCRIPTION}")
    return tool
