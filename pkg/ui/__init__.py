# ui/__init__.py
# ShuffleLDP v1.0.0 - UI Components Package
# ============================================================================

from ui.styles import MAIN_CSS, regime_badge

from ui.sidebar import (
    TOOLS,
    render_tool_picker,
    render_download_buttons,
)

from ui.amplification_panel import amplification_table, render_amplification_panel
from ui.simulation_panel import config_from_form, render_simulation_panel
from ui.cover_panel import cover_grid, render_cover_panel
from ui.certification_panel import render_certification_panel

__all__ = [
    "MAIN_CSS",
    "regime_badge",
    "TOOLS",
    "render_tool_picker",
    "render_download_buttons",
    "amplification_table",
    "render_amplification_panel",
    "config_from_form",
    "render_simulation_panel",
    "cover_grid",
    "render_cover_panel",
    "render_certification_panel",
]
