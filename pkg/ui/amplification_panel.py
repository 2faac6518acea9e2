# ui/amplification_panel.py
# ShuffleLDP v1.0.0 - Pannello: calcolatore di amplificazione
# ============================================================================

from typing import Dict, List, Sequence

import streamlit as st

from core.amplification import amplify_shuffle, amplify_swap, binary_case_bound
from core.errors import ShuffleLDPError
from ui.styles import regime_badge

# Valori di n mostrati nella curva ε(n)
CURVE_NS = (100, 300, 1_000, 3_000, 10_000, 30_000, 100_000, 300_000, 1_000_000)


def amplification_table(epsilon0: float, delta: float, ns: Sequence[int] = CURVE_NS) -> List[Dict]:
    """
    Una riga per n: ε centrale (shuffle e swap), regime e curva di riferimento.
    """
    rows = []
    for n in ns:
        shuffled = amplify_shuffle(epsilon0, n, delta)
        rows.append({
            "n": n,
            "epsilon_shuffle": shuffled.epsilon_central,
            "regime": shuffled.regime,
            "epsilon_swap": amplify_swap(epsilon0, n, delta).epsilon_central,
            "binary_reference": binary_case_bound(epsilon0, n, delta),
        })
    return rows


def render_amplification_panel(defaults: Dict) -> None:
    """Calcolatore interattivo: bound per un n e curva al variare di n."""
    st.subheader("🔐 Amplificazione per shuffling")

    col1, col2, col3 = st.columns(3)
    epsilon0 = col1.number_input("ε₀ locale", min_value=0.001, max_value=20.0,
                                 value=float(defaults["epsilon0"]), step=0.05, format="%.3f")
    n = col2.number_input("n (risposte mescolate)", min_value=2, value=int(defaults["n"]), step=100)
    delta = col3.number_input("δ", min_value=1e-15, max_value=0.5,
                              value=float(defaults["delta"]), format="%.2e")

    try:
        result = amplify_shuffle(epsilon0, int(n), delta)
    except ShuffleLDPError as e:
        st.error(f"❌ {e}")
        return

    m1, m2, m3 = st.columns(3)
    m1.metric("ε centrale", f"{result.epsilon_central:.5g}")
    m2.metric("ε₁ per passo", f"{result.epsilon_1:.4g}")
    m3.metric("Rapporto ε / ε₀", f"{result.epsilon_central / epsilon0:.3f}")
    st.markdown(f"Regime vincente: {regime_badge(result.regime)}", unsafe_allow_html=True)

    with st.expander("Tutti i bound applicabili"):
        st.json(result.bounds)

    rows = amplification_table(epsilon0, delta)
    st.markdown("#### ε al variare di n")
    st.line_chart(
        {
            "shuffle": [row["epsilon_shuffle"] for row in rows],
            "riferimento RR binaria": [row["binary_reference"] for row in rows],
        }
    )
    st.dataframe(rows, use_container_width=True)
