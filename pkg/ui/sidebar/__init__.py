# ui/sidebar/__init__.py
# ShuffleLDP v1.0.0 - Modulo sidebar
# ============================================================================

from .tool_picker import TOOLS, render_tool_picker
from .export_ui import render_download_buttons

__all__ = [
    "TOOLS",
    "render_tool_picker",
    "render_download_buttons",
]
