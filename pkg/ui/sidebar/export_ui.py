# ui/sidebar/export_ui.py
# ShuffleLDP v1.0.0 - Sidebar: download dei risultati
# ============================================================================

from typing import Optional

import streamlit as st

from export import estimates_to_csv, results_to_json, rows_to_csv
from harness.simulation import SimulationRun
from longitudinal.aggregator import MarginalEstimates


def render_download_buttons(run: Optional[SimulationRun], container=None) -> None:
    """Bottoni di download (JSON completo, CSV per prova, CSV stime prova 0)."""
    container = container or st.sidebar
    container.markdown("### 📤 Export")
    if run is None:
        container.info("💡 Esegui una simulazione per abilitare l'export")
        return

    container.download_button(
        "📄 Esecuzione (JSON)",
        data=results_to_json(run.to_dict()),
        file_name=f"simulation_seed{run.config.seed}.json",
        mime="application/json",
        use_container_width=True,
    )
    rows = [{**run.config.to_dict(), **r.to_dict(include_vectors=False)} for r in run.results]
    container.download_button(
        "📊 Prove (CSV)",
        data=rows_to_csv(rows),
        file_name=f"simulation_seed{run.config.seed}.csv",
        mime="text/csv",
        use_container_width=True,
    )
    first = run.results[0]
    estimates = MarginalEstimates(f_tilde=first.f_tilde, true_f=run.true_f)
    container.download_button(
        "📈 Stime prova 0 (CSV)",
        data=estimates_to_csv(estimates),
        file_name=f"estimates_seed{run.config.seed}.csv",
        mime="text/csv",
        use_container_width=True,
    )
