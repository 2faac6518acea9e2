# ui/cover_panel.py
# ShuffleLDP v1.0.0 - Pannello: coperture diadiche
# ============================================================================

from typing import List

import streamlit as st

from longitudinal.aggregator import dyadic_cover, merge_loop_cover
from longitudinal.models import log2_int


def cover_grid(t: int, d: int) -> List[str]:
    """
    Una riga di testo per livello (dalla radice alle foglie): '#' per i nodi
    della copertura, '.' per gli altri, ogni nodo largo quanto le sue foglie.
    """
    nodes = dyadic_cover(t, d).nodes
    lines = []
    for h in range(log2_int(d) + 1, 0, -1):
        size = 1 << (h - 1)
        cells = []
        for j in range(1, (d >> (h - 1)) + 1):
            mark = "#" if (h, j) in nodes else "."
            cells.append(mark * size)
        lines.append(f"h={h:<2} " + "|".join(cells))
    return lines


def render_cover_panel() -> None:
    """Mostra la copertura di [1, t] e la confronta con il ciclo di fusione."""
    st.subheader("🌳 Copertura diadica")
    col1, col2 = st.columns(2)
    d = col1.select_slider("d", options=[2 ** i for i in range(0, 7)], value=16)
    t = col2.slider("t", min_value=1, max_value=d, value=min(11, d))

    cover = dyadic_cover(t, d)
    st.markdown(
        " ".join(f'<span class="cover-node">[{h}, {i}]</span>' for h, i in cover.ordered()),
        unsafe_allow_html=True,
    )
    st.caption(f"|C| = {len(cover)} = popcount({t}) = {bin(t).count('1')}")
    st.code("\n".join(cover_grid(t, d)))

    same = merge_loop_cover(t, d) == cover
    st.write("✅ Il ciclo di fusione dà la stessa copertura" if same else "❌ Coperture diverse")
