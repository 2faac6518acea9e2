# ui/styles.py
# ShuffleLDP v1.0.0 - Stili CSS
# ============================================================================

# CSS principale dell'applicazione
MAIN_CSS = """
<style>
.regime-badge {
    display: inline-block;
    padding: 2px 10px;
    border-radius: 10px;
    font-size: 0.85em;
    font-weight: 600;
    background-color: #1e2a35;
    border: 1px solid #2a3a4a;
}
.regime-general { color: #6db3f2; }
.regime-moderate { color: #00d4aa; }
.regime-simplified { color: #4CAF50; }
.regime-no-amplification { color: #ff9800; }

.cert-pass { border-left: 4px solid #4CAF50; padding-left: 10px; }
.cert-fail { border-left: 4px solid #f44336; padding-left: 10px; }

.cover-node {
    display: inline-block;
    margin: 2px;
    padding: 4px 8px;
    border-radius: 6px;
    background-color: rgba(0, 212, 170, 0.15);
    border: 1px solid rgba(0, 212, 170, 0.4);
    font-family: monospace;
}
</style>
"""


def regime_badge(regime: str) -> str:
    """Badge HTML per il regime vincente del calcolatore."""
    return f'<span class="regime-badge regime-{regime}">{regime}</span>'
