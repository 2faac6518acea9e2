# ui/certification_panel.py
# ShuffleLDP v1.0.0 - Pannello: certificazione con l'oracolo esatto
# ============================================================================

from typing import Dict

import streamlit as st

from core.divergence import certify_amplification, divergence_profile
from core.errors import ShuffleLDPError

# L'oracolo è O(n²) per m: la UI si ferma prima del limite della libreria
UI_MAX_N = 3000


def render_certification_panel(defaults: Dict) -> None:
    """Esegue certify_amplification e mostra il profilo δ(m)."""
    st.subheader("✅ Certificazione del bound")
    col1, col2, col3 = st.columns(3)
    n = col1.number_input("n", min_value=2, max_value=UI_MAX_N, value=min(int(defaults["n"]), UI_MAX_N))
    epsilon0 = col2.number_input("ε₀", min_value=0.01, max_value=10.0, value=float(defaults["epsilon0"]))
    delta = col3.number_input("δ target", min_value=1e-12, max_value=0.5,
                              value=float(defaults["delta"]), format="%.2e")

    if not st.button("🔎 Certifica", use_container_width=True):
        return
    try:
        with st.spinner("Scansione esatta su tutti gli m..."):
            record = certify_amplification(int(n), epsilon0, delta)
            profile = divergence_profile(int(n), epsilon0, record.claimed_epsilon)
    except ShuffleLDPError as e:
        st.error(f"❌ {e}")
        return

    css = "cert-pass" if record.passed else "cert-fail"
    verdict = "✅ superata" if record.passed else "❌ fallita"
    st.markdown(f'<div class="{css}">Certificazione {verdict}</div>', unsafe_allow_html=True)
    m1, m2, m3 = st.columns(3)
    m1.metric("ε dichiarato", f"{record.claimed_epsilon:.5g}")
    m2.metric("δ esatto", f"{record.exact_delta:.3e}")
    m3.metric("Slack δ/δ target", f"{record.slack_ratio:.3e}")
    st.markdown("#### δ esatto per coppia (m, m+1)")
    st.line_chart({"delta": profile.tolist()})
    st.json(record.to_dict())
