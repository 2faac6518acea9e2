# ui/simulation_panel.py
# ShuffleLDP v1.0.0 - Pannello: simulazione end-to-end
# ============================================================================

from typing import Dict

import streamlit as st

from config import INPUT_MODELS, SHUFFLE_MODES, LEVEL_SCALINGS
from core.errors import ResourceGuardError, ShuffleLDPError
from harness.simulation import SimulationConfig, SimulationRun, simulate

# Limite della UI: le simulazioni più grandi si lanciano da CLI
UI_MAX_CELLS = 50_000_000


def config_from_form(values: Dict) -> SimulationConfig:
    """Costruisce e valida la configurazione a partire dai widget."""
    config = SimulationConfig.from_dict(values)
    config.validate()
    if config.n * config.d * config.trials > UI_MAX_CELLS:
        raise ResourceGuardError("simulazione troppo grande per la UI: usare la CLI")
    return config


def render_simulation_panel(defaults: Dict) -> None:
    """Form dei parametri, esecuzione e grafici di f̃_t contro f_t."""
    st.subheader("📈 Simulazione longitudinale")

    with st.form("simulation_form"):
        col1, col2, col3, col4 = st.columns(4)
        n = col1.number_input("n client", min_value=1, value=int(defaults["n"]), step=1000)
        d = col2.number_input("d istanti", min_value=1, value=int(defaults["d"]), step=1)
        k = col3.number_input("k cambi", min_value=1, value=int(defaults["k"]), step=1)
        epsilon = col4.number_input("ε", min_value=0.01, value=float(defaults["epsilon"]), step=0.1)

        col5, col6, col7, col8 = st.columns(4)
        trials = col5.number_input("prove", min_value=1, value=max(int(defaults["trials"]), 5), step=1)
        seed = col6.number_input("seed", min_value=0, value=int(defaults["seed"]), step=1)
        beta = col7.number_input("β", min_value=0.001, max_value=0.999, value=float(defaults["beta"]))
        step_time = col8.number_input("istante gradino", min_value=1, value=int(defaults["step_time"]))

        models = [m for m in INPUT_MODELS if m != "file"]
        input_model = st.selectbox("Modello di input", models,
                                   index=models.index(defaults["input_model"]) if defaults["input_model"] in models else 0,
                                   format_func=lambda m: f"{m} - {INPUT_MODELS[m]}")
        shuffle_mode = st.radio("Shuffle", list(SHUFFLE_MODES), horizontal=True,
                                format_func=lambda m: f"{m}: {SHUFFLE_MODES[m]}")
        level_scaling = st.radio("Fattore di livello", list(LEVEL_SCALINGS), horizontal=True,
                                 format_func=lambda m: f"{m}: {LEVEL_SCALINGS[m]}")
        submitted = st.form_submit_button("▶️ Esegui", use_container_width=True)

    if submitted:
        try:
            config = config_from_form({
                "n": int(n), "d": int(d), "k": int(k), "epsilon": float(epsilon),
                "trials": int(trials), "seed": int(seed), "beta": float(beta),
                "step_time": int(step_time), "input_model": input_model,
                "shuffle_mode": shuffle_mode, "level_scaling": level_scaling,
                "delta": float(defaults["delta"]),
            })
            with st.spinner("Simulazione in corso..."):
                st.session_state["simulation_run"] = simulate(config)
        except ShuffleLDPError as e:
            st.error(f"❌ {e}")
            return

    run: SimulationRun = st.session_state.get("simulation_run")
    if run is None:
        st.info("💡 Imposta i parametri e premi Esegui")
        return

    summary = run.summary
    m1, m2, m3, m4 = st.columns(4)
    m1.metric("Errore max (mediana)", f"{summary['median_max_abs_error']:.1f}")
    m2.metric("Bound", f"{summary['utility_bound']:.1f}")
    m3.metric("Prove entro il bound", f"{summary['fraction_within_bound']:.0%}")
    central = summary.get("central_epsilon")
    m4.metric("ε centrale", "-" if central is None else f"{central:.4g}")
    if summary["clipped_changes"]:
        st.warning(f"⚠️ {summary['clipped_changes']} cambi oltre k sono stati scartati")

    first = run.results[0]
    st.markdown("#### Stima della prova 0 contro il valore vero")
    st.line_chart({"f vero": run.true_f.tolist(), "f stimato": first.f_tilde.tolist()})
    st.markdown("#### Errore massimo per prova")
    st.bar_chart({"errore max": [r.max_abs_error for r in run.results]})
    with st.expander("Quantili"):
        st.json(summary["quantiles"])
